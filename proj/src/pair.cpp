#include "csp/pair.hpp"

#include <sstream>

#include "csp/error.hpp"

namespace csp {

namespace {

[[noreturn]] void pair_fail(PairFailure failure, const std::string& message) {
  Error e(ErrorKind::Pair, message);
  e.pair_failure = failure;
  throw e;
}

// Largest p with a^p != 0. Top degree caps the search.
int max_power(const KForm& a) {
  int p = 0;
  KForm acc = KForm::constant(a.dim(), Rational(1));
  while (true) {
    acc = wedge(acc, a);
    if (acc.is_zero()) return p;
    ++p;
  }
}

} // namespace

Mat coefficient_matrix(const KForm& two_form) {
  if (two_form.degree() != 2)
    throw Error(ErrorKind::InvalidArgument, "coefficient matrix requires a 2-form");
  const int n = two_form.dim();
  Mat m(n, n);
  for (const auto& [idx, c] : two_form.terms()) {
    m.at(idx[0] - 1, idx[1] - 1) = c;
    m.at(idx[1] - 1, idx[0] - 1) = -c;
  }
  return m;
}

Vector reeb(const LieAlgebra& L, const KForm& eta, const KForm& omega) {
  const int n = L.dim();
  const KForm d_eta = L.cee_d(eta);
  // Stack: eta(xi) = 1 (one row), then i_xi(d eta) = 0 and i_xi(omega) = 0
  // as n rows each (the coefficient of alpha^j of the contraction).
  Mat A(1 + 2 * n, n);
  std::vector<Rational> b(1 + 2 * n);
  for (int j = 1; j <= n; ++j) A.at(0, j - 1) = eta.coefficient({j});
  b[0] = Rational(1);
  const Mat md = coefficient_matrix(d_eta);
  const Mat mo = coefficient_matrix(omega);
  // coefficient of alpha^j in i_v(f) is sum_i M[i][j] v_i = -(M v)_j
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      A.at(1 + j, i) = md.at(i, j);
      A.at(1 + n + j, i) = mo.at(i, j);
    }
  const auto sol = A.solve(b);
  if (!sol || !sol->unique) {
    pair_fail(PairFailure::NoUniqueReeb, "Reeb system has no unique solution");
  }
  return Vector(n, sol->x);
}

Distributions distributions(const LieAlgebra& L, const KForm& eta, const KForm& omega,
                            const Vector& xi) {
  const int n = L.dim();
  const KForm d_eta = L.cee_d(eta);
  const Mat md = coefficient_matrix(d_eta);
  const Mat mo = coefficient_matrix(omega);

  // TS: eta(v) = 0 and i_v(d eta) = 0.
  Mat ts_rows(1 + n, n);
  for (int j = 1; j <= n; ++j) ts_rows.at(0, j - 1) = eta.coefficient({j});
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) ts_rows.at(1 + j, i) = md.at(i, j);

  // TC: i_v(omega) = 0.
  Mat tc_rows(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) tc_rows.at(j, i) = mo.at(i, j);

  // H: eta(v) = 0.
  Mat h_rows(1, n);
  for (int j = 1; j <= n; ++j) h_rows.at(0, j - 1) = eta.coefficient({j});

  Distributions d;
  d.ts = Subspace::kernel_of(ts_rows);
  d.tc = Subspace::kernel_of(tc_rows);
  d.h = Subspace::kernel_of(h_rows);
  d.tk = Subspace::span(n, {xi.coords()}).sum(d.ts);
  d.d = d.h.intersect(d.tc);
  return d;
}

CSPair classify_pair(const LieAlgebra& L, const KForm& eta, const KForm& omega) {
  const int N = L.dim();
  if (eta.dim() != N || omega.dim() != N)
    throw Error(ErrorKind::Dimension, "pair forms do not match the algebra dimension");
  if (eta.degree() != 1 || omega.degree() != 2)
    throw Error(ErrorKind::InvalidArgument, "pair requires a 1-form and a 2-form");

  if (!L.cee_d(omega).is_zero()) pair_fail(PairFailure::NotClosed, "omega is not closed");

  const KForm d_eta = L.cee_d(eta);
  const int m = max_power(d_eta);
  const int n = max_power(omega);
  if (m == 0 || n == 0) {
    std::ostringstream os;
    os << "classical case (m, n) = (" << m << ", " << n
       << "): type requires m >= 1 and n >= 1";
    pair_fail(PairFailure::ClassicalCase, os.str());
  }
  if (2 * m + 2 * n + 1 != N) {
    std::ostringstream os;
    os << "type (" << m << ", " << n << ") needs dimension " << 2 * m + 2 * n + 1 << ", got " << N;
    pair_fail(PairFailure::TypeMismatch, os.str());
  }
  const KForm volume = wedge(wedge(eta, power(d_eta, static_cast<unsigned>(m))),
                             power(omega, static_cast<unsigned>(n)));
  if (volume.is_zero())
    pair_fail(PairFailure::DegenerateVolume, "eta ^ (d eta)^m ^ omega^n vanishes");

  CSPair pair{L, eta, omega, d_eta, m, n, reeb(L, eta, omega), {}};
  pair.dist = distributions(L, eta, omega, pair.xi);

  // Splitting facts from the definition; failure here means a bug, not bad input.
  const bool split_ok = pair.dist.ts.dim() == 2 * n && pair.dist.tc.dim() == 2 * m + 1 &&
                        pair.dist.ts.sum(pair.dist.tc) == Subspace::full(N) &&
                        pair.dist.ts.intersect(pair.dist.tc).dim() == 0 &&
                        pair.dist.h.dim() == N - 1 && pair.dist.d.dim() == 2 * m &&
                        pair.dist.tk.dim() == 2 * n + 1 &&
                        pair.dist.tc.contains(pair.xi.coords());
  if (!split_ok) throw Error(ErrorKind::Internal, "distribution splitting invariants failed");
  return pair;
}

int cartan_class(const LieAlgebra& L, const KForm& f) {
  if (f.dim() != L.dim()) throw Error(ErrorKind::Dimension, "cartan_class dimension mismatch");
  if (f.degree() == 1) {
    const KForm df = L.cee_d(f);
    const int r = max_power(df);
    const KForm top = wedge(f, power(df, static_cast<unsigned>(r)));
    return top.is_zero() ? 2 * r : 2 * r + 1;
  }
  if (f.degree() == 2) {
    if (!L.cee_d(f).is_zero())
      throw Error(ErrorKind::InvalidArgument, "cartan_class of a non-closed 2-form");
    return 2 * max_power(f);
  }
  throw Error(ErrorKind::InvalidArgument, "cartan_class supports 1-forms and closed 2-forms");
}

bool bracket_closed(const LieAlgebra& L, const Subspace& s) {
  const auto& basis = s.basis();
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = a + 1; b < basis.size(); ++b) {
      const Vector br = L.bracket(Vector(L.dim(), basis[a]), Vector(L.dim(), basis[b]));
      if (!s.contains(br.coords())) return false;
    }
  return true;
}

} // namespace csp
