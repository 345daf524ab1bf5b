#pragma once

// Brute-force oracles and seeded generators shared by the suites. The
// oracles deliberately avoid the library's signed-merge / Gaussian paths:
// evaluation is a full permutation sum, the wedge is the shuffle formula.

#include <algorithm>
#include <numeric>
#include <vector>

#include "csp/exterior.hpp"
#include "csp/lie_algebra.hpp"
#include "csp/model.hpp"
#include "csp/rng.hpp"

namespace csp::testing {

inline int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

// Independent elimination: bottom-up pivot choice with deferred
// normalization. Any correct routine must land on the same reduced
// echelon form, which is what makes canonical subspaces comparable.
inline Mat rref_oracle(Mat m) {
  const int rows = m.rows(), cols = m.cols();
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int p = -1;
    for (int r = rows - 1; r >= row; --r)
      if (!m.at(r, col).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    for (int r = 0; r < rows; ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      const Rational f = m.at(r, col) / m.at(row, col);
      for (int j = 0; j < cols; ++j) m.at(r, j) -= f * m.at(row, j);
    }
    ++row;
  }
  for (int r = 0; r < rows; ++r) {
    int lead = -1;
    for (int j = 0; j < cols; ++j)
      if (!m.at(r, j).is_zero()) {
        lead = j;
        break;
      }
    if (lead < 0) continue;
    const Rational inv = Rational(1) / m.at(r, lead);
    for (int j = 0; j < cols; ++j) m.at(r, j) *= inv;
  }
  return m;
}

// Full permutation-sum evaluation (Det convention).
inline Rational eval_oracle(const KForm& a, const std::vector<Vector>& vs) {
  const int k = a.degree();
  Rational total(0);
  std::vector<int> perm(k);
  for (const auto& [idx, c] : a.terms()) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Rational product = c * Rational(permutation_sign(perm));
      for (int r = 0; r < k; ++r) product *= vs[perm[r]][idx[r]];
      total += product;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return total;
}

// Shuffle-formula wedge: coefficients recovered by evaluating
// sum_{shuffles} sgn(sigma) a(...) b(...) on increasing frame tuples.
inline KForm wedge_oracle(const KForm& a, const KForm& b) {
  const int dim = a.dim();
  const int p = a.degree(), q = b.degree();
  KForm out(dim, p + q);
  if (p + q > dim) return out;

  std::vector<int> tuple(p + q);
  // enumerate increasing tuples of size p+q from 1..dim
  std::vector<int> selector(static_cast<size_t>(dim), 0);
  std::fill(selector.begin(), selector.begin() + p + q, 1);
  std::sort(selector.begin(), selector.end());
  do {
    int t = 0;
    for (int i = 0; i < dim; ++i)
      if (selector[i]) tuple[t++] = i + 1;

    // all p-subsets of the tuple are the shuffles
    std::vector<int> pick(static_cast<size_t>(p + q), 0);
    std::fill(pick.begin(), pick.begin() + p, 1);
    std::sort(pick.begin(), pick.end());
    Rational coeff(0);
    do {
      std::vector<Vector> left, right;
      std::vector<int> order;
      for (int i = 0; i < p + q; ++i)
        if (pick[i]) {
          left.push_back(Vector::basis(dim, tuple[i]));
          order.push_back(i);
        }
      for (int i = 0; i < p + q; ++i)
        if (!pick[i]) {
          right.push_back(Vector::basis(dim, tuple[i]));
          order.push_back(i);
        }
      coeff += Rational(permutation_sign(order)) * eval_oracle(a, left) * eval_oracle(b, right);
    } while (std::next_permutation(pick.begin(), pick.end()));
    out.add_term(MultiIndex(tuple.begin(), tuple.end()), coeff);
  } while (std::next_permutation(selector.begin(), selector.end()));
  return out;
}

// Interior-product oracle through evaluation: (i_v a)(w...) = a(v, w...).
inline KForm contract_oracle(const Vector& v, const KForm& a) {
  const int dim = a.dim();
  const int k = a.degree();
  if (k == 0) return KForm::zero(dim, 0);
  KForm out(dim, k - 1);
  std::vector<int> selector(static_cast<size_t>(dim), 0);
  std::fill(selector.begin(), selector.begin() + (k - 1), 1);
  std::sort(selector.begin(), selector.end());
  if (k == 1) {
    out.add_term({}, eval_oracle(a, {v}));
    return out;
  }
  do {
    MultiIndex idx;
    std::vector<Vector> args{v};
    for (int i = 0; i < dim; ++i)
      if (selector[i]) {
        idx.push_back(i + 1);
        args.push_back(Vector::basis(dim, i + 1));
      }
    out.add_term(idx, eval_oracle(a, args));
  } while (std::next_permutation(selector.begin(), selector.end()));
  return out;
}

inline Rational random_rational(SplitMix64& rng, long span = 3) {
  const long num = static_cast<long>(rng.below(static_cast<std::uint64_t>(2 * span + 1))) - span;
  const long den = 1 + static_cast<long>(rng.below(2));
  return {num, den};
}

inline Vector random_vector(SplitMix64& rng, int dim) {
  Vector v(dim);
  for (int i = 1; i <= dim; ++i) v[i] = random_rational(rng);
  return v;
}

inline KForm random_form(SplitMix64& rng, int dim, int degree, int terms = 3) {
  KForm f(dim, degree);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> all(static_cast<size_t>(dim));
    std::iota(all.begin(), all.end(), 1);
    for (int s = 0; s < degree; ++s)
      std::swap(all[s], all[s + static_cast<int>(rng.below(static_cast<std::uint64_t>(dim - s)))]);
    MultiIndex idx(all.begin(), all.begin() + degree);
    std::sort(idx.begin(), idx.end());
    f.add_term(idx, random_rational(rng));
  }
  return f;
}

// Random valid algebras: basis conjugates of the catalog algebras plus the
// abelian and dim-3 Heisenberg cases. Conjugation preserves Jacobi exactly.
inline LieAlgebra random_valid_algebra(SplitMix64& rng) {
  const auto pick = rng.below(5);
  if (pick == 0) return LieAlgebra::abelian(2 + static_cast<int>(rng.below(4)));
  LieAlgebra base = [&] {
    if (pick == 1) {
      KForm d2(3, 2);
      d2.add_term({1, 3}, Rational(1));
      return LieAlgebra::from_structure_equations(3, {{2, d2}});
    }
    if (pick == 2) return builtin_example("product").algebra;
    if (pick == 3) return builtin_example("g5").algebra;
    return builtin_example("g7").algebra;
  }();
  const int n = base.dim();

  // Random unimodular-ish change of basis: identity plus a few shears.
  Mat b = Mat::identity(n);
  for (int s = 0; s < 3; ++s) {
    const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (i == j) continue;
    b.at(i, j) += random_rational(rng, 2);
  }
  const auto b_inv = b.inverse();
  if (!b_inv) return base;

  // bracket'(e_i, e_j) = B^{-1} [B e_i, B e_j]
  std::vector<std::array<int, 3>> where;
  std::vector<Rational> values;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Vector bi(n), bj(n);
      for (int r = 1; r <= n; ++r) {
        bi[r] = b.at(r - 1, i - 1);
        bj[r] = b.at(r - 1, j - 1);
      }
      const Vector br = base.bracket(bi, bj);
      for (int k = 1; k <= n; ++k) {
        Rational c(0);
        for (int r = 1; r <= n; ++r) c += b_inv->at(k - 1, r - 1) * br[r];
        if (!c.is_zero()) {
          where.push_back({k, i, j});
          values.push_back(c);
        }
      }
    }
  return LieAlgebra::from_structure_constants(n, where, values);
}

} // namespace csp::testing
