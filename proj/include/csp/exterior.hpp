#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "csp/rational.hpp"

namespace csp {

/// Frame indices of a monomial, 1-based and strictly increasing. The empty
/// index is the degree-0 monomial.
using MultiIndex = std::vector<int>;

/// Tangent vector in the left-invariant frame {X_1, ..., X_N}.
class Vector {
public:
  Vector() = default;
  explicit Vector(int dim) : coords_(dim) {}
  Vector(int dim, std::vector<Rational> coords);

  static Vector basis(int dim, int i); // X_i, 1-based

  int dim() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](int i) const { return coords_[i - 1]; } // 1-based
  Rational& operator[](int i) { return coords_[i - 1]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  Vector operator+(const Vector& o) const;
  Vector operator-(const Vector& o) const;
  Vector scaled(const Rational& c) const;
  bool operator==(const Vector& o) const = default;

  std::string str() const;

private:
  std::vector<Rational> coords_;
};

/// Sparse exterior form of fixed degree over an N-dimensional frame, exact
/// rational coefficients keyed by increasing multi-indices. No stored
/// coefficient is zero. A zero form of degree > N is permitted (it arises
/// from wedge products past the top degree) and necessarily has no terms.
class KForm {
public:
  KForm() = default;
  KForm(int dim, int degree);

  static KForm zero(int dim, int degree) { return KForm(dim, degree); }
  static KForm constant(int dim, const Rational& c); // degree-0 form
  static KForm basis_covector(int dim, int i);       // alpha^i

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<MultiIndex, Rational>& terms() const { return coeffs_; }
  Rational coefficient(const MultiIndex& idx) const;

  /// Adds c * alpha^idx. idx may be in any order; it is sorted with the sign
  /// of the permutation, and terms with repeated indices are dropped.
  void add_term(MultiIndex idx, Rational c);

  KForm operator-() const;
  KForm operator+(const KForm& o) const;
  KForm operator-(const KForm& o) const;
  KForm scaled(const Rational& c) const;
  bool operator==(const KForm& o) const = default;

  std::string str() const; // e.g. "a1^a3 - 1/2*a4^a5"

private:
  int dim_ = 0;
  int degree_ = 0;
  std::map<MultiIndex, Rational> coeffs_;
};

enum class EvalConvention { Det, Alt };

/// Signed-merge wedge product in coefficient space. Degrees add; the result
/// is the (empty) zero form when the degree exceeds the dimension.
KForm wedge(const KForm& a, const KForm& b);

/// p-fold wedge power; power(a, 0) is the constant 1.
KForm power(const KForm& a, unsigned p);

/// Rational linear combination of same-degree, same-dimension forms.
KForm linear_combine(std::span<const std::pair<Rational, KForm>> terms);

/// Interior product i_v, the degree-lowering antiderivation with
/// i_v(alpha^i) = v_i. Contracting a degree-0 form yields the zero form.
KForm contract(const Vector& v, const KForm& a);

/// Pointwise evaluation on k vectors. Det: sum over monomials of coefficient
/// times det of the k x k frame-component matrix. Alt: Det / k!.
Rational eval(const KForm& a, std::span<const Vector> vectors, EvalConvention convention);

inline Rational eval(const KForm& a, std::initializer_list<Vector> vectors,
                     EvalConvention convention) {
  return eval(a, std::span<const Vector>(vectors.begin(), vectors.size()), convention);
}

Rational factorial(unsigned n);

} // namespace csp
