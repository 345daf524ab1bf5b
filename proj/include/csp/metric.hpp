#pragma once

#include <cstdint>

#include "csp/pair.hpp"

namespace csp {

/// Symmetric positive-definite rational matrix in the frame basis.
/// Positive-definiteness is validated exactly through leading principal
/// minors at construction.
class MetricTensor {
public:
  explicit MetricTensor(Mat g);
  static MetricTensor diagonal(const std::vector<Rational>& d);

  int dim() const { return g_.rows(); }
  const Mat& matrix() const { return g_; }
  const Rational& at(int i, int j) const { return g_.at(i - 1, j - 1); } // 1-based
  Rational inner(const Vector& u, const Vector& v) const;
  Rational det() const { return g_.det(); }
  Mat inverse() const;

  bool operator==(const MetricTensor& o) const = default;

private:
  Mat g_;
};

/// Endomorphism of the frame: column j holds the coordinates of phi(X_j).
class PhiTensor {
public:
  PhiTensor() = default;
  explicit PhiTensor(Mat p) : p_(std::move(p)) {}

  int dim() const { return p_.rows(); }
  const Mat& matrix() const { return p_; }
  Vector apply(const Vector& v) const;

  bool operator==(const PhiTensor& o) const = default;

private:
  Mat p_;
};

/// The unique endomorphism with g(X, phi Y) = (d eta + omega)(X, Y) under
/// the Alt evaluation: phi = G^{-1} (M/2) with M the antisymmetric
/// coefficient matrix of d eta + omega. Makes no validity judgement.
PhiTensor phi_from(const CSPair& pair, const MetricTensor& G);

/// g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y) and g(X, xi) = eta(X), both as
/// exact matrix identities.
bool check_compatible(const MetricTensor& G, const PhiTensor& P, const KForm& eta,
                      const Vector& xi);

/// Associated metric through the reconstructed phi: g(X, xi) = eta(X) and
/// phi_from(pair, G) squares to -I + xi (x) eta.
bool check_associated(const CSPair& pair, const MetricTensor& G);

/// Associated metric through an explicitly given phi: additionally requires
/// g(X, phi Y) = (d eta + omega)(X, Y) for this phi. This is the form that
/// the uniqueness argument for (eta, -omega) needs: one phi, two pairs.
bool check_associated(const CSPair& pair, const MetricTensor& G, const PhiTensor& phi);

struct VolumeIdentity {
  Rational top_coefficient; // c with eta ^ (d eta)^m ^ omega^n = c alpha^1...N
  Rational lhs_coeff;       // c / (2^{m+n} m! n!)
  Rational det_g;
  bool holds = false; // lhs_coeff^2 == det_g (squared form, orientation-free)
};

/// Checks the shared-volume-element identity for an associated metric.
/// Throws Error(Pair, NotAssociated) otherwise.
VolumeIdentity volume_identity(const CSPair& pair, const MetricTensor& G);

/// Extends a positive-definite symmetric bilinear form h on H = ker eta
/// (given in the canonical basis of H) to a compatible metric: phi-average
/// h, make xi a unit normal to H. The output always passes check_compatible.
MetricTensor compatible_from_h(const CSPair& pair, const PhiTensor& phi, const Mat& h_on_kernel);

/// Deterministic seeded compatible metric: A with entries from the pool
/// {-1, -1/2, 0, 1/2, 1}, h = A^T A + I, then compatible_from_h.
MetricTensor random_compatible(const CSPair& pair, const PhiTensor& phi, std::uint64_t seed);

} // namespace csp
