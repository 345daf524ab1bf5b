#include "csp/geometry.hpp"

#include <algorithm>

#include "csp/error.hpp"

namespace csp {

namespace {

[[noreturn]] void not_integrable() {
  Error e(ErrorKind::Pair, "distribution is not bracket-closed");
  e.pair_failure = PairFailure::NotIntegrable;
  throw e;
}

Mat basis_columns(const Subspace& D) {
  Mat b(D.ambient_dim(), D.dim());
  for (int a = 0; a < D.dim(); ++a)
    for (int i = 0; i < D.ambient_dim(); ++i) b.at(i, a) = D.basis()[a][i];
  return b;
}

Mat gram(const MetricTensor& G, const std::vector<Vector>& basis) {
  Mat g(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = 0; b < basis.size(); ++b)
      g.at(static_cast<int>(a), static_cast<int>(b)) = G.inner(basis[a], basis[b]);
  return g;
}

std::vector<Vector> subspace_vectors(const Subspace& D) {
  std::vector<Vector> out;
  out.reserve(D.dim());
  for (const auto& row : D.basis()) out.emplace_back(D.ambient_dim(), row);
  return out;
}

} // namespace

Connection::Connection(int dim, std::vector<Rational> gamma)
    : dim_(dim), gamma_(std::move(gamma)) {
  if (gamma_.size() != static_cast<size_t>(dim) * dim * dim)
    throw Error(ErrorKind::InvalidArgument, "Christoffel array size mismatch");
}

const Rational& Connection::gamma(int k, int i, int j) const {
  return gamma_[((static_cast<size_t>(k) - 1) * dim_ + (i - 1)) * dim_ + (j - 1)];
}

Vector Connection::nabla(int i, int j) const {
  Vector out(dim_);
  for (int k = 1; k <= dim_; ++k) out[k] = gamma(k, i, j);
  return out;
}

Vector Connection::nabla(const Vector& u, const Vector& v) const {
  if (u.dim() != dim_ || v.dim() != dim_)
    throw Error(ErrorKind::Dimension, "covariant derivative dimension mismatch");
  Vector out(dim_);
  for (int i = 1; i <= dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 1; j <= dim_; ++j) {
      if (v[j].is_zero()) continue;
      const Rational uv = u[i] * v[j];
      for (int k = 1; k <= dim_; ++k) {
        const Rational& g = gamma(k, i, j);
        if (!g.is_zero()) out[k] += g * uv;
      }
    }
  }
  return out;
}

Connection levi_civita(const LieAlgebra& L, const MetricTensor& G) {
  const int N = L.dim();
  const Mat g_inv = G.inverse();
  std::vector<Rational> gamma(static_cast<size_t>(N) * N * N);
  std::vector<Vector> X;
  X.reserve(N);
  for (int i = 1; i <= N; ++i) X.push_back(Vector::basis(N, i));

  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      std::vector<Rational> rhs(N); // g(nabla_i j, X_k)
      for (int k = 1; k <= N; ++k) {
        const Rational two_g = G.inner(L.bracket(X[i - 1], X[j - 1]), X[k - 1]) -
                               G.inner(L.bracket(X[j - 1], X[k - 1]), X[i - 1]) +
                               G.inner(L.bracket(X[k - 1], X[i - 1]), X[j - 1]);
        rhs[k - 1] = two_g * half();
      }
      for (int k = 1; k <= N; ++k) {
        Rational v(0);
        for (int l = 0; l < N; ++l) v += g_inv.at(k - 1, l) * rhs[l];
        gamma[((static_cast<size_t>(k) - 1) * N + (i - 1)) * N + (j - 1)] = v;
      }
    }

  Connection conn(N, std::move(gamma));

  // Both connection axioms must hold exactly on the output.
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      for (int k = 1; k <= N; ++k)
        if (conn.gamma(k, i, j) - conn.gamma(k, j, i) != L.structure_constant(k, i, j))
          throw Error(ErrorKind::Internal, "computed connection has torsion");
      for (int k = 1; k <= N; ++k)
        if (!(G.inner(conn.nabla(i, j), X[k - 1]) + G.inner(X[j - 1], conn.nabla(i, k))).is_zero())
          throw Error(ErrorKind::Internal, "computed connection is not metric");
    }
  return conn;
}

bool geodesic_reeb_check(const Connection& conn, const Vector& xi) {
  return conn.nabla(xi, xi).is_zero();
}

bool SecondFundamentalForm::all_zero() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const auto& e) { return std::get<2>(e).is_zero(); });
}

const Vector& SecondFundamentalForm::at(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (const auto& [i, j, v] : entries)
    if (i == a && j == b) return v;
  throw Error(ErrorKind::InvalidArgument, "second fundamental form index out of range");
}

Subspace orthogonal_complement(const MetricTensor& G, const Subspace& D) {
  // x with g(u_a, x) = 0 for every basis vector: kernel of B^T G.
  const Mat constraints = basis_columns(D).transposed() * G.matrix();
  return Subspace::kernel_of(constraints);
}

SecondFundamentalForm second_fundamental_form(const LieAlgebra& L, const MetricTensor& G,
                                              const Connection& conn, const Subspace& D) {
  if (!bracket_closed(L, D)) not_integrable();
  const int N = L.dim();
  const std::vector<Vector> u = subspace_vectors(D);
  const int p = static_cast<int>(u.size());

  // g-orthogonal projector onto the complement of D:
  // P_perp = I - B (B^T G B)^{-1} B^T G.
  const Mat B = basis_columns(D);
  const Mat gram_d = B.transposed() * G.matrix() * B;
  const auto gram_inv = gram_d.inverse();
  if (!gram_inv) throw Error(ErrorKind::Internal, "Gram matrix of a subspace basis is singular");
  const Mat proj_tangent = B * *gram_inv * B.transposed() * G.matrix();
  const Mat proj_normal = Mat::identity(N) - proj_tangent;

  SecondFundamentalForm II;
  II.basis = D.basis();
  for (int a = 0; a < p; ++a)
    for (int b = a; b < p; ++b) {
      const Vector sym = (conn.nabla(u[a], u[b]) + conn.nabla(u[b], u[a])).scaled(half());
      Vector normal(N);
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) normal[i] += proj_normal.at(i - 1, j - 1) * sym[j];
      II.entries.emplace_back(a, b, std::move(normal));
    }
  return II;
}

Vector mean_curvature(const MetricTensor& G, const Subspace& D, const SecondFundamentalForm& II) {
  const std::vector<Vector> u = subspace_vectors(D);
  const Mat gram_d = gram(G, u);
  const auto gram_inv = gram_d.inverse();
  if (!gram_inv) throw Error(ErrorKind::Internal, "Gram matrix of a subspace basis is singular");
  Vector h(D.ambient_dim());
  const int p = static_cast<int>(u.size());
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      const Rational w = gram_inv->at(a, b);
      if (w.is_zero()) continue;
      h = h + II.at(a, b).scaled(w);
    }
  return h;
}

Vector mean_curvature_in_basis(const LieAlgebra& L, const MetricTensor& G, const Connection& conn,
                               const Subspace& D, const std::vector<Vector>& basis) {
  if (static_cast<int>(basis.size()) != D.dim())
    throw Error(ErrorKind::InvalidArgument, "basis size does not match subspace dimension");
  for (const Vector& v : basis)
    if (!D.contains(v.coords()))
      throw Error(ErrorKind::InvalidArgument, "vector outside the subspace");
  const Mat gram_d = gram(G, basis);
  const auto gram_inv = gram_d.inverse();
  if (!gram_inv) throw Error(ErrorKind::InvalidArgument, "supplied basis is degenerate");

  const int N = L.dim();
  const Mat B = basis_columns(D);
  const Mat gd = B.transposed() * G.matrix() * B;
  const Mat proj_normal =
      Mat::identity(N) - B * *gd.inverse() * B.transposed() * G.matrix();

  Vector h(N);
  const int p = static_cast<int>(basis.size());
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      const Rational w = gram_inv->at(a, b);
      if (w.is_zero()) continue;
      const Vector sym =
          (conn.nabla(basis[a], basis[b]) + conn.nabla(basis[b], basis[a])).scaled(half());
      Vector normal(N);
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) normal[i] += proj_normal.at(i - 1, j - 1) * sym[j];
      h = h + normal.scaled(w);
    }
  return h;
}

bool rummler_check(const LieAlgebra& L, const MetricTensor& G, const Subspace& D) {
  if (!bracket_closed(L, D)) not_integrable();
  const int N = L.dim();
  const int p = D.dim();
  const Subspace perp = orthogonal_complement(G, D);

  // Columns [u_1 .. u_p, w_1 .. w_{N-p}]; beta^a is row a of the inverse.
  Mat C(N, N);
  for (int a = 0; a < p; ++a)
    for (int i = 0; i < N; ++i) C.at(i, a) = D.basis()[a][i];
  for (int b = 0; b < perp.dim(); ++b)
    for (int i = 0; i < N; ++i) C.at(i, p + b) = perp.basis()[b][i];
  const auto C_inv = C.inverse();
  if (!C_inv) throw Error(ErrorKind::Internal, "tangent/normal basis is singular");

  KForm alpha = KForm::constant(N, Rational(1));
  for (int a = 0; a < p; ++a) {
    KForm beta(N, 1);
    for (int i = 1; i <= N; ++i) beta.add_term({i}, C_inv->at(a, i - 1));
    alpha = wedge(alpha, beta);
  }
  const KForm d_alpha = L.cee_d(alpha);
  if (d_alpha.is_zero()) return true;

  std::vector<Vector> args = subspace_vectors(D);
  args.emplace_back(N);
  for (int j = 1; j <= N; ++j) {
    args.back() = Vector::basis(N, j);
    if (!eval(d_alpha, args, EvalConvention::Det).is_zero()) return false;
  }
  return true;
}

FoliationSurvey foliation_report(const CSPair& pair, const MetricTensor& G) {
  FoliationSurvey survey;
  survey.associated = check_associated(pair, G);

  // TS perpendicular to TC under G.
  survey.orthogonal = true;
  for (const auto& s : pair.dist.ts.basis())
    for (const auto& c : pair.dist.tc.basis())
      if (!G.inner(Vector(pair.dim(), s), Vector(pair.dim(), c)).is_zero())
        survey.orthogonal = false;

  const Connection conn = levi_civita(pair.algebra, G);
  const std::pair<std::string, const Subspace*> foliations[] = {
      {"S", &pair.dist.ts}, {"C", &pair.dist.tc}, {"K", &pair.dist.tk}};

  for (const auto& [name, D] : foliations) {
    FoliationReport r;
    r.name = name;
    r.integrable = bracket_closed(pair.algebra, *D);
    if (!r.integrable) { // cannot happen for a validated pair
      survey.reports.push_back(std::move(r));
      continue;
    }
    const SecondFundamentalForm II = second_fundamental_form(pair.algebra, G, conn, *D);
    r.totally_geodesic = II.all_zero();
    r.mean_curvature = mean_curvature(G, *D, II);
    r.minimal_mean_curvature = r.mean_curvature.is_zero();
    r.minimal_rummler = rummler_check(pair.algebra, G, *D);
    if (!r.totally_geodesic) {
      // First basis pair with a nonzero normal component, first complement
      // direction that pairs nontrivially with it.
      const Subspace perp = orthogonal_complement(G, *D);
      for (const auto& [a, b, v] : II.entries) {
        if (v.is_zero()) continue;
        FoliationWitness w;
        w.u = Vector(pair.dim(), D->basis()[a]);
        w.v = Vector(pair.dim(), D->basis()[b]);
        for (const auto& nrow : perp.basis()) {
          const Vector n(pair.dim(), nrow);
          const Rational val = G.inner(v, n);
          if (!val.is_zero()) {
            w.normal = n;
            w.value = val;
            break;
          }
        }
        r.witness = std::move(w);
        break;
      }
    }
    survey.reports.push_back(std::move(r));
  }
  return survey;
}

} // namespace csp
