#pragma once

#include <optional>
#include <vector>

#include "csp/rational.hpp"

namespace csp {

/// Dense rational matrix. Dimensions here never exceed a few dozen rows, so
/// plain Gauss-Jordan with exact pivots is both fast and canonical.
class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n);
  static Mat diagonal(const std::vector<Rational>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Mat transposed() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Rational& c) const;
  bool operator==(const Mat& o) const = default;

  bool is_zero() const;
  bool is_symmetric() const;

  /// In-place reduced row echelon form with pivots normalized to 1.
  /// Returns the pivot column of each pivot row, in order.
  std::vector<int> rref();

  int rank() const;
  Rational det() const; // square only

  /// Basis of {x : A x = 0}, as columns of the returned matrix.
  Mat kernel() const;

  /// Gauss-Jordan inverse; nullopt when singular.
  std::optional<Mat> inverse() const;

  /// Leading principal minors det(A[0..k][0..k]), k = 1..n. Square only.
  std::vector<Rational> leading_principal_minors() const;

  /// Solves A x = b. unique == false means the system is underdetermined
  /// (x is then one solution). nullopt when inconsistent.
  struct Solution {
    std::vector<Rational> x;
    bool unique = false;
  };
  std::optional<Solution> solve(const std::vector<Rational>& b) const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

/// A linear subspace of Q^dim in reduced canonical echelon form: the basis
/// rows are the RREF of any spanning set, so equality of subspaces is literal
/// comparison of the stored data.
class Subspace {
public:
  Subspace() = default;

  static Subspace span(int ambient_dim, const std::vector<std::vector<Rational>>& vectors);
  static Subspace kernel_of(const Mat& constraints);
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::vector<Rational>>& basis() const { return basis_; }

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  bool operator==(const Subspace& o) const = default;

private:
  int ambient_ = 0;
  std::vector<std::vector<Rational>> basis_; // canonical RREF rows, no zero rows
};

} // namespace csp
