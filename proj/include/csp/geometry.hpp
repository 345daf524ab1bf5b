#pragma once

#include <optional>
#include <string>

#include "csp/metric.hpp"

namespace csp {

/// Levi-Civita connection of a left-invariant metric: Christoffel array
/// Gamma^k_{ij} with nabla_{X_i} X_j = sum_k Gamma^k_{ij} X_k. Torsion-free
/// and metric by construction; both identities are re-verified exactly when
/// the connection is built.
class Connection {
public:
  Connection(int dim, std::vector<Rational> gamma);

  int dim() const { return dim_; }
  const Rational& gamma(int k, int i, int j) const; // 1-based

  Vector nabla(int i, int j) const; // nabla_{X_i} X_j

  /// nabla_u v for constant-coefficient combinations of frame fields.
  Vector nabla(const Vector& u, const Vector& v) const;

private:
  int dim_ = 0;
  std::vector<Rational> gamma_;
};

/// Koszul formula, solved with the exact inverse Gram matrix:
/// 2 g(nabla_i j, k) = g([i,j],k) - g([j,k],i) + g([k,i],j).
Connection levi_civita(const LieAlgebra& L, const MetricTensor& G);

/// nabla_xi xi = 0, exactly.
bool geodesic_reeb_check(const Connection& conn, const Vector& xi);

struct SecondFundamentalForm {
  std::vector<std::vector<Rational>> basis; // canonical basis of D used
  // II(u_a, u_b) for a <= b, the g-normal part of the symmetrized derivative.
  std::vector<std::tuple<int, int, Vector>> entries;

  bool all_zero() const;
  const Vector& at(int a, int b) const; // symmetric access, 0-based
};

/// Requires D bracket-closed (throws Error(Pair, NotIntegrable) otherwise).
SecondFundamentalForm second_fundamental_form(const LieAlgebra& L, const MetricTensor& G,
                                              const Connection& conn, const Subspace& D);

/// Gram-inverse trace of II (unnormalized): H = sum_{a,b} (G_D^{-1})_{ab}
/// II(u_a, u_b). Basis-independent; minimality is H = 0.
Vector mean_curvature(const MetricTensor& G, const Subspace& D, const SecondFundamentalForm& II);

/// Same trace computed over an explicitly supplied basis of D; used to
/// assert basis independence.
Vector mean_curvature_in_basis(const LieAlgebra& L, const MetricTensor& G, const Connection& conn,
                               const Subspace& D, const std::vector<Vector>& basis);

/// Relative closedness of the (rational multiple of the) characteristic form
/// of D: with beta^a dual to a basis of D and vanishing on the g-orthogonal
/// complement, alpha = beta^1 ^ ... ^ beta^p, checks
/// d alpha(u_1, ..., u_p, X_j) = 0 for every frame vector X_j.
bool rummler_check(const LieAlgebra& L, const MetricTensor& G, const Subspace& D);

struct FoliationWitness {
  Vector u, v;    // basis pair with II(u, v) != 0
  Vector normal;  // normal direction with g(II(u, v), normal) != 0
  Rational value; // g(II(u, v), normal) = g(nabla_u v, normal)
};

struct FoliationReport {
  std::string name; // "S", "C" or "K"
  bool integrable = false;
  bool totally_geodesic = false;
  bool minimal_mean_curvature = false;
  bool minimal_rummler = false;
  Vector mean_curvature;
  std::optional<FoliationWitness> witness; // present iff not totally geodesic
};

struct FoliationSurvey {
  bool orthogonal = false; // TS perpendicular to TC under G
  bool associated = false;
  std::vector<FoliationReport> reports; // S, C, K
};

/// Reports for the three characteristic foliations under any
/// positive-definite metric. Orthogonality of TS and TC and the associated
/// flag are recorded; enforcement of the minimality theorem is the caller's
/// concern and applies when both hold.
FoliationSurvey foliation_report(const CSPair& pair, const MetricTensor& G);

/// g-orthogonal complement of D.
Subspace orthogonal_complement(const MetricTensor& G, const Subspace& D);

} // namespace csp
