#include "csp/metric.hpp"

#include "csp/error.hpp"
#include "csp/rng.hpp"

namespace csp {

namespace {

std::vector<Rational> eta_row(const KForm& eta) {
  std::vector<Rational> e(eta.dim());
  for (int j = 1; j <= eta.dim(); ++j) e[j - 1] = eta.coefficient({j});
  return e;
}

Mat outer(const std::vector<Rational>& col, const std::vector<Rational>& row) {
  Mat m(static_cast<int>(col.size()), static_cast<int>(row.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = col[i] * row[j];
  return m;
}

// G q == e^T, i.e. g(X, xi) = eta(X).
bool reeb_metric_identity(const MetricTensor& G, const KForm& eta, const Vector& xi) {
  const auto e = eta_row(eta);
  for (int i = 0; i < G.dim(); ++i) {
    Rational gq(0);
    for (int j = 0; j < G.dim(); ++j) gq += G.matrix().at(i, j) * xi.coords()[j];
    if (gq != e[i]) return false;
  }
  return true;
}

bool phi_square_identity(const CSPair& pair, const PhiTensor& P) {
  const Mat expected =
      outer(pair.xi.coords(), eta_row(pair.eta)) - Mat::identity(pair.dim());
  return P.matrix() * P.matrix() == expected;
}

} // namespace

MetricTensor::MetricTensor(Mat g) : g_(std::move(g)) {
  if (g_.rows() != g_.cols() || !g_.is_symmetric())
    throw Error(ErrorKind::Metric, "metric is not symmetric");
  for (const Rational& minor : g_.leading_principal_minors())
    if (minor.sign() <= 0) throw Error(ErrorKind::Metric, "metric is not positive-definite");
}

MetricTensor MetricTensor::diagonal(const std::vector<Rational>& d) {
  return MetricTensor(Mat::diagonal(d));
}

Rational MetricTensor::inner(const Vector& u, const Vector& v) const {
  if (u.dim() != dim() || v.dim() != dim())
    throw Error(ErrorKind::Dimension, "metric pairing dimension mismatch");
  Rational total(0);
  for (int i = 0; i < dim(); ++i) {
    if (u.coords()[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j) total += u.coords()[i] * g_.at(i, j) * v.coords()[j];
  }
  return total;
}

Mat MetricTensor::inverse() const {
  auto inv = g_.inverse();
  if (!inv) throw Error(ErrorKind::Internal, "positive-definite metric failed to invert");
  return *inv;
}

Vector PhiTensor::apply(const Vector& v) const {
  if (v.dim() != dim()) throw Error(ErrorKind::Dimension, "phi application dimension mismatch");
  Vector out(dim());
  for (int i = 1; i <= dim(); ++i)
    for (int j = 1; j <= dim(); ++j) out[i] += p_.at(i - 1, j - 1) * v[j];
  return out;
}

PhiTensor phi_from(const CSPair& pair, const MetricTensor& G) {
  const Mat m = coefficient_matrix(pair.d_eta + pair.omega);
  return PhiTensor(G.inverse() * m.scaled(half()));
}

bool check_compatible(const MetricTensor& G, const PhiTensor& P, const KForm& eta,
                      const Vector& xi) {
  const auto e = eta_row(eta);
  const Mat lhs = P.matrix().transposed() * G.matrix() * P.matrix();
  const Mat rhs = G.matrix() - outer(e, e);
  return lhs == rhs && reeb_metric_identity(G, eta, xi);
}

bool check_associated(const CSPair& pair, const MetricTensor& G) {
  return reeb_metric_identity(G, pair.eta, pair.xi) && phi_square_identity(pair, phi_from(pair, G));
}

bool check_associated(const CSPair& pair, const MetricTensor& G, const PhiTensor& phi) {
  const Mat half_m = coefficient_matrix(pair.d_eta + pair.omega).scaled(half());
  return reeb_metric_identity(G, pair.eta, pair.xi) && G.matrix() * phi.matrix() == half_m &&
         phi_square_identity(pair, phi);
}

VolumeIdentity volume_identity(const CSPair& pair, const MetricTensor& G) {
  if (!check_associated(pair, G)) {
    Error e(ErrorKind::Pair, "volume identity requires an associated metric");
    e.pair_failure = PairFailure::NotAssociated;
    throw e;
  }
  const KForm top = wedge(wedge(pair.eta, power(pair.d_eta, static_cast<unsigned>(pair.m))),
                          power(pair.omega, static_cast<unsigned>(pair.n)));
  MultiIndex full(static_cast<size_t>(pair.dim()));
  for (int i = 1; i <= pair.dim(); ++i) full[i - 1] = i;
  VolumeIdentity v;
  v.top_coefficient = top.coefficient(full);
  Rational scale(1);
  for (int i = 0; i < pair.m + pair.n; ++i) scale *= Rational(2);
  scale *= factorial(static_cast<unsigned>(pair.m)) * factorial(static_cast<unsigned>(pair.n));
  v.lhs_coeff = v.top_coefficient / scale;
  v.det_g = G.det();
  v.holds = v.lhs_coeff.squared() == v.det_g;
  return v;
}

MetricTensor compatible_from_h(const CSPair& pair, const PhiTensor& phi, const Mat& h_on_kernel) {
  const int N = pair.dim();
  const auto& h_basis = pair.dist.h.basis();
  const int hd = static_cast<int>(h_basis.size()); // N - 1
  if (h_on_kernel.rows() != hd || h_on_kernel.cols() != hd || !h_on_kernel.is_symmetric())
    throw Error(ErrorKind::InvalidArgument, "h must be symmetric on the kernel basis");

  // Coordinates of phi(u_a) in the H basis; phi preserves H since eta.phi = 0.
  Mat B(N, hd);
  for (int a = 0; a < hd; ++a)
    for (int i = 0; i < N; ++i) B.at(i, a) = h_basis[a][i];
  Mat phiB = phi.matrix() * B;
  // Solve B * C = phi B column by column.
  Mat C(hd, hd);
  for (int a = 0; a < hd; ++a) {
    std::vector<Rational> rhs(N);
    for (int i = 0; i < N; ++i) rhs[i] = phiB.at(i, a);
    const auto sol = B.solve(rhs);
    if (!sol || !sol->unique)
      throw Error(ErrorKind::Internal, "phi does not preserve the kernel of eta");
    for (int b = 0; b < hd; ++b) C.at(b, a) = sol->x[b];
  }

  // phi-average: g_H = (h + C^T h C) / 2, positive-definite on H.
  const Mat g_h = (h_on_kernel + C.transposed() * h_on_kernel * C).scaled(half());

  // Adapted basis T = [xi, u_1, ..., u_{N-1}]; G_T = diag(1, g_H).
  Mat T(N, N);
  for (int i = 0; i < N; ++i) T.at(i, 0) = pair.xi.coords()[i];
  for (int a = 0; a < hd; ++a)
    for (int i = 0; i < N; ++i) T.at(i, 1 + a) = h_basis[a][i];
  Mat G_T(N, N);
  G_T.at(0, 0) = Rational(1);
  for (int a = 0; a < hd; ++a)
    for (int b = 0; b < hd; ++b) G_T.at(1 + a, 1 + b) = g_h.at(a, b);
  const auto T_inv = T.inverse();
  if (!T_inv) throw Error(ErrorKind::Internal, "adapted basis is singular");
  return MetricTensor(T_inv->transposed() * G_T * *T_inv);
}

MetricTensor random_compatible(const CSPair& pair, const PhiTensor& phi, std::uint64_t seed) {
  const int hd = pair.dim() - 1;
  SplitMix64 rng(seed);
  Mat a(hd, hd);
  for (int i = 0; i < hd; ++i)
    for (int j = 0; j < hd; ++j) {
      const long pool = static_cast<long>(rng.below(5)) - 2; // {-2,...,2}
      a.at(i, j) = Rational(pool, 2);
    }
  const Mat h = a.transposed() * a + Mat::identity(hd);
  return compatible_from_h(pair, phi, h);
}

} // namespace csp
