#pragma once

#include "csp/lie_algebra.hpp"
#include "csp/linalg.hpp"

namespace csp {

/// The characteristic distributions of a validated pair, all in canonical
/// echelon form. TS and TC split the tangent space; TK = span(xi) + TS;
/// H = ker eta; D = H intersect TC.
struct Distributions {
  Subspace ts, tc, tk, h, d;

  bool operator==(const Distributions& o) const = default;
};

/// A validated contact-symplectic pair of type (m, n) on a Lie algebra:
/// eta ^ (d eta)^m ^ omega^n is a volume form, (d eta)^{m+1} = 0,
/// omega^{n+1} = 0, and 2m + 2n + 1 = dim. Holds the Reeb vector and the
/// five canonical distributions.
struct CSPair {
  LieAlgebra algebra;
  KForm eta;
  KForm omega;
  KForm d_eta;
  int m = 0;
  int n = 0;
  Vector xi;
  Distributions dist;

  int dim() const { return algebra.dim(); }
};

/// Validates the pair conditions, infers the type (m, n) from maximal
/// nonvanishing wedge powers, computes the Reeb vector and distributions.
/// Throws Error(Pair) with the failure kind: NotClosed, ClassicalCase,
/// TypeMismatch, or DegenerateVolume.
CSPair classify_pair(const LieAlgebra& L, const KForm& eta, const KForm& omega);

/// Solves eta(xi) = 1, i_xi d eta = 0, i_xi omega = 0 exactly. The solution
/// is unique for a valid pair; NoUniqueReeb signals an internal bug.
Vector reeb(const LieAlgebra& L, const KForm& eta, const KForm& omega);

/// Recomputes the five distributions from scratch (classify_pair stores
/// them; this is the independent route used by consistency checks).
Distributions distributions(const LieAlgebra& L, const KForm& eta, const KForm& omega,
                            const Vector& xi);

inline Distributions distributions(const CSPair& pair) {
  return distributions(pair.algebra, pair.eta, pair.omega, pair.xi);
}

/// Cartan class of a 1-form or a closed 2-form. For a 1-form with
/// r = max{p : (d f)^p != 0}: 2r + 1 when f ^ (d f)^r != 0, else 2r.
/// For a closed 2-form: 2n with f^n != 0 = f^{n+1}.
int cartan_class(const LieAlgebra& L, const KForm& f);

/// True when the subspace is closed under the bracket (the Lie-algebra
/// restatement of integrability for left-invariant distributions).
bool bracket_closed(const LieAlgebra& L, const Subspace& s);

/// The antisymmetric coefficient matrix of a 2-form: M[i][j] = coefficient
/// of alpha^i ^ alpha^j for i < j, antisymmetrized.
Mat coefficient_matrix(const KForm& two_form);

} // namespace csp
