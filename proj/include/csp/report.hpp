#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csp/model.hpp"

namespace csp {

struct ReportOptions {
  unsigned random_count = 100;
  std::uint64_t seed = 42;
};

/// The serializable verification result. Every rational is carried as an
/// exact "p/q" string; serialization to JSON round-trips losslessly.
struct Report {
  struct PairSection {
    bool valid = false;
    int dimension = 0;
    int m = 0;
    int n = 0;
    std::vector<std::string> xi;
    int cartan_class_eta = 0;
    int cartan_class_omega = 0;
    // Keys TS, TC, TK, H, D; values are canonical basis rows.
    std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> distributions;
    bool operator==(const PairSection&) const = default;
  };

  struct MetricSection {
    bool compatible = false;
    bool associated = false;
    bool orthogonal_foliations = false;
    std::vector<std::vector<std::string>> phi;
    bool operator==(const MetricSection&) const = default;
  };

  struct VolumeSection {
    std::string top_coefficient;
    std::string lhs_coeff;
    std::string det_g;
    bool holds = false;
    bool operator==(const VolumeSection&) const = default;
  };

  struct Witness {
    std::vector<std::string> u, v, normal;
    std::string value;
    bool operator==(const Witness&) const = default;
  };

  struct Foliation {
    std::string name;
    bool integrable = false;
    bool totally_geodesic = false;
    bool minimal_mean_curvature = false;
    bool minimal_rummler = false;
    std::vector<std::string> mean_curvature;
    std::optional<Witness> witness;
    bool operator==(const Foliation&) const = default;
  };

  struct Proposition {
    bool associated_implies_compatible = false;
    // Present when the metric is associated: the same (g, phi) checked
    // against (eta, -omega); must be false, else omega would vanish.
    std::optional<bool> negated_pair_same_phi_associated;
    bool operator==(const Proposition&) const = default;
  };

  struct RandomSuite {
    std::uint64_t seed = 0;
    unsigned count = 0;
    unsigned failures = 0;
    bool operator==(const RandomSuite&) const = default;
  };

  struct Assertion {
    std::string name;
    bool passed = false;
    bool operator==(const Assertion&) const = default;
  };

  std::string model_name;
  PairSection pair;
  MetricSection metric;
  std::optional<VolumeSection> volume; // present iff the metric is associated
  std::vector<Foliation> foliations;
  bool geodesic_reeb = false;
  Proposition proposition;
  RandomSuite random_suite;
  std::vector<Assertion> assertions;
  bool all_passed = false;

  bool operator==(const Report&) const = default;
};

/// Full verification pipeline. Deterministic given (model, options).
/// Throws Error(Pair) with the model's eta/omega source line when the pair
/// is invalid; theorem-check failures are reported, not thrown.
Report run_report(const Model& model, const ReportOptions& options = {});

std::string report_to_json(const Report& report, int indent = 2);
Report report_from_json(const std::string& json_text);

/// Plain-text rendering for terminals.
std::string report_to_text(const Report& report);

} // namespace csp
