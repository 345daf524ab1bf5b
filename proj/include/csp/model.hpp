#pragma once

#include <string>

#include "csp/metric.hpp"

namespace csp {

/// A parsed verification input: algebra, the pair (eta, omega), and the
/// metric, all dimension-consistent. Equality ignores the display name.
struct Model {
  LieAlgebra algebra = LieAlgebra::abelian(1);
  KForm eta;
  KForm omega;
  MetricTensor metric = MetricTensor::diagonal({Rational(1)});
  std::string name;

  // Source lines of the pair declarations (0 for non-parsed models); pair
  // validation errors are reported against these.
  int eta_line = 0;
  int omega_line = 0;

  friend bool operator==(const Model& a, const Model& b) {
    return a.algebra == b.algebra && a.eta == b.eta && a.omega == b.omega && a.metric == b.metric;
  }
};

/// Parses the structure-equation DSL:
///
///   dim 5
///   d a2 = a1^a3          # omitted covectors are closed
///   d a4 = a1^a5
///   eta = a2
///   omega = a4^a5
///   metric diag 1/2 1 1/2 1/2 1/2
///
/// Lines are independent; '#' starts a comment; whitespace within a line is
/// free. A non-diagonal metric is given entrywise as "metric i j q" lines
/// (symmetric completion). Throws Error with kind Parse, Dimension, Jacobi
/// or Metric; line/column are 1-based.
Model parse_model(const std::string& text, const std::string& name = "model");

/// Canonical DSL emission; parse_model(to_dsl(m)) reproduces m exactly.
std::string to_dsl(const Model& m);

/// The builtin catalog: "g5", "g7", "product".
Model builtin_example(const std::string& name);

} // namespace csp
