#pragma once

#include <array>
#include <map>
#include <optional>

#include "csp/exterior.hpp"

namespace csp {

/// Lie algebra of dimension N given by structure constants c^k_{ij}, meaning
/// [X_i, X_j] = sum_k c^k_{ij} X_k. Construction validates the Jacobi
/// identity twice, through the constants and through d^2 = 0 on basis
/// 1-forms; both routes must accept.
class LieAlgebra {
public:
  static LieAlgebra abelian(int dim);

  /// Builds the algebra from Chevalley-Eilenberg structure equations
  /// d alpha^k = (2-form); absent indices are closed. The bracket sign rule
  /// is c^k_{ij} = -(coefficient of alpha^i ^ alpha^j in d alpha^k).
  /// Throws Error(Jacobi) naming a violating triple on bad input.
  static LieAlgebra from_structure_equations(int dim, const std::map<int, KForm>& equations);

  /// Entries (k, i, j, c) with i < j; unlisted constants are zero.
  static LieAlgebra from_structure_constants(int dim,
                                             const std::vector<std::array<int, 3>>& where,
                                             const std::vector<Rational>& values);

  /// Skips Jacobi validation. For diagnostics and tests only.
  static LieAlgebra unchecked(int dim, const std::vector<std::array<int, 3>>& where,
                              const std::vector<Rational>& values);

  int dim() const { return dim_; }

  /// c^k_{ij}, 1-based, antisymmetrized on access.
  const Rational& structure_constant(int k, int i, int j) const;

  Vector bracket(const Vector& u, const Vector& v) const;

  /// Chevalley-Eilenberg differential extended as an antiderivation;
  /// d of a degree-0 form is zero.
  KForm cee_d(const KForm& a) const;

  /// Cartan formula: L_v a = i_v(d a) + d(i_v a).
  KForm lie_derivative(const Vector& v, const KForm& a) const;

  /// First triple (i, j, k), i < j < k, with a nonzero cyclic bracket sum,
  /// if any.
  std::optional<std::array<int, 3>> jacobi_witness() const;

  /// First basis index k with d(d alpha^k) != 0, if any. Equivalent to
  /// jacobi_witness() being nonempty; implemented independently.
  std::optional<int> d_squared_witness() const;

  /// The equations d alpha^k for every k with d alpha^k != 0.
  std::map<int, KForm> structure_equations() const;

  KForm d_basis_covector(int k) const; // d alpha^k

  bool operator==(const LieAlgebra& o) const = default;

private:
  explicit LieAlgebra(int dim);
  void validate() const;
  Rational& c_ref(int k, int i, int j);

  int dim_ = 0;
  std::vector<Rational> c_; // dense N^3, antisymmetric in (i, j)
};

} // namespace csp
