#include "csp/report.hpp"

#include <json.hpp>

#include <sstream>

#include "csp/error.hpp"
#include "csp/geometry.hpp"

namespace csp {

namespace {

std::vector<std::string> vector_strings(const Vector& v) {
  std::vector<std::string> out;
  out.reserve(v.dim());
  for (const Rational& c : v.coords()) out.push_back(c.str());
  return out;
}

std::vector<std::vector<std::string>> subspace_strings(const Subspace& s) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : s.basis()) {
    std::vector<std::string> r;
    r.reserve(row.size());
    for (const Rational& c : row) r.push_back(c.str());
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::vector<std::string>> matrix_strings(const Mat& m) {
  std::vector<std::vector<std::string>> out;
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    row.reserve(m.cols());
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    out.push_back(std::move(row));
  }
  return out;
}

} // namespace

Report run_report(const Model& model, const ReportOptions& options) {
  Report report;
  report.model_name = model.name;

  CSPair pair = [&] {
    try {
      return classify_pair(model.algebra, model.eta, model.omega);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::Pair) throw;
      const int line = err.pair_failure == PairFailure::ClassicalCase && model.eta_line
                           ? model.eta_line
                           : model.omega_line;
      Error out(ErrorKind::Pair, err.what(), line ? line : model.eta_line, 1);
      out.pair_failure = err.pair_failure;
      throw out;
    }
  }();

  std::vector<Report::Assertion> checks;
  const auto assert_that = [&checks](std::string name, bool passed) {
    checks.push_back({std::move(name), passed});
  };

  report.pair.valid = true;
  report.pair.dimension = pair.dim();
  report.pair.m = pair.m;
  report.pair.n = pair.n;
  report.pair.xi = vector_strings(pair.xi);
  report.pair.cartan_class_eta = cartan_class(model.algebra, model.eta);
  report.pair.cartan_class_omega = cartan_class(model.algebra, model.omega);
  report.pair.distributions = {{"TS", subspace_strings(pair.dist.ts)},
                               {"TC", subspace_strings(pair.dist.tc)},
                               {"TK", subspace_strings(pair.dist.tk)},
                               {"H", subspace_strings(pair.dist.h)},
                               {"D", subspace_strings(pair.dist.d)}};

  assert_that("reeb_flow_preserves_eta", model.algebra.lie_derivative(pair.xi, pair.eta).is_zero());
  assert_that("reeb_flow_preserves_omega",
              model.algebra.lie_derivative(pair.xi, pair.omega).is_zero());
  assert_that("cartan_classes_match_type", report.pair.cartan_class_eta == 2 * pair.m + 1 &&
                                               report.pair.cartan_class_omega == 2 * pair.n);
  assert_that("characteristic_distributions_integrable",
              bracket_closed(model.algebra, pair.dist.ts) &&
                  bracket_closed(model.algebra, pair.dist.tc) &&
                  bracket_closed(model.algebra, pair.dist.tk));

  const PhiTensor phi = phi_from(pair, model.metric);
  const bool compatible = check_compatible(model.metric, phi, pair.eta, pair.xi);
  const bool associated = check_associated(pair, model.metric);
  report.metric.compatible = compatible;
  report.metric.associated = associated;
  report.metric.phi = matrix_strings(phi.matrix());
  assert_that("metric_compatible", compatible);
  assert_that("metric_associated", associated);
  assert_that("associated_implies_compatible", !associated || compatible);

  if (associated) {
    const VolumeIdentity v = volume_identity(pair, model.metric);
    Report::VolumeSection section;
    section.top_coefficient = v.top_coefficient.str();
    section.lhs_coeff = v.lhs_coeff.str();
    section.det_g = v.det_g.str();
    section.holds = v.holds;
    report.volume = section;
    assert_that("volume_identity_holds", v.holds);
  }

  bool connection_ok = true;
  try {
    const Connection conn = levi_civita(model.algebra, model.metric);
    report.geodesic_reeb = geodesic_reeb_check(conn, pair.xi);
  } catch (const Error&) {
    connection_ok = false;
  }
  assert_that("connection_torsion_free_and_metric", connection_ok);
  assert_that("geodesic_reeb_for_compatible_metric", !compatible || report.geodesic_reeb);

  const FoliationSurvey survey = foliation_report(pair, model.metric);
  report.metric.orthogonal_foliations = survey.orthogonal;
  bool oracles_agree = true;
  bool tg_implies_minimal = true;
  bool all_minimal = true;
  for (const FoliationReport& f : survey.reports) {
    Report::Foliation out;
    out.name = f.name;
    out.integrable = f.integrable;
    out.totally_geodesic = f.totally_geodesic;
    out.minimal_mean_curvature = f.minimal_mean_curvature;
    out.minimal_rummler = f.minimal_rummler;
    out.mean_curvature = vector_strings(f.mean_curvature);
    if (f.witness) {
      Report::Witness w;
      w.u = vector_strings(f.witness->u);
      w.v = vector_strings(f.witness->v);
      w.normal = vector_strings(f.witness->normal);
      w.value = f.witness->value.str();
      out.witness = std::move(w);
    }
    oracles_agree = oracles_agree && f.minimal_mean_curvature == f.minimal_rummler;
    tg_implies_minimal = tg_implies_minimal && (!f.totally_geodesic || f.minimal_mean_curvature);
    all_minimal = all_minimal && f.minimal_mean_curvature && f.minimal_rummler;
    report.foliations.push_back(std::move(out));
  }
  assert_that("minimality_oracles_agree", oracles_agree);
  assert_that("totally_geodesic_implies_minimal", tg_implies_minimal);
  assert_that("characteristic_foliations_minimal",
              !(associated && survey.orthogonal) || all_minimal);

  report.proposition.associated_implies_compatible = !associated || compatible;
  if (associated) {
    const CSPair negated = classify_pair(model.algebra, model.eta, -model.omega);
    const bool negated_associated = check_associated(negated, model.metric, phi);
    report.proposition.negated_pair_same_phi_associated = negated_associated;
    assert_that("negated_pair_not_associated_with_same_phi", !negated_associated);
  }

  report.random_suite.seed = options.seed;
  if (associated && options.random_count > 0) {
    unsigned failures = 0;
    for (unsigned i = 0; i < options.random_count; ++i) {
      const MetricTensor g = random_compatible(pair, phi, options.seed + i);
      const bool ok = check_compatible(g, phi, pair.eta, pair.xi) &&
                      geodesic_reeb_check(levi_civita(model.algebra, g), pair.xi);
      if (!ok) ++failures;
    }
    report.random_suite.count = options.random_count;
    report.random_suite.failures = failures;
    assert_that("random_compatible_suite_clean", failures == 0);
  }

  report.assertions = std::move(checks);
  report.all_passed = true;
  for (const auto& a : report.assertions) report.all_passed = report.all_passed && a.passed;
  return report;
}

// ---------------------------------------------------------------------------
// JSON serialization. Rationals stay strings end to end.

using nlohmann::json;

namespace {

json to_json(const Report::Witness& w) {
  return json{{"u", w.u}, {"v", w.v}, {"normal", w.normal}, {"value", w.value}};
}

Report::Witness witness_from_json(const json& j) {
  Report::Witness w;
  w.u = j.at("u").get<std::vector<std::string>>();
  w.v = j.at("v").get<std::vector<std::string>>();
  w.normal = j.at("normal").get<std::vector<std::string>>();
  w.value = j.at("value").get<std::string>();
  return w;
}

} // namespace

std::string report_to_json(const Report& r, int indent) {
  json j;
  j["model"] = r.model_name;
  json pair;
  pair["valid"] = r.pair.valid;
  pair["dimension"] = r.pair.dimension;
  pair["m"] = r.pair.m;
  pair["n"] = r.pair.n;
  pair["xi"] = r.pair.xi;
  pair["cartan_class_eta"] = r.pair.cartan_class_eta;
  pair["cartan_class_omega"] = r.pair.cartan_class_omega;
  json dists = json::object();
  for (const auto& [name, basis] : r.pair.distributions) dists[name] = basis;
  pair["distributions"] = dists;
  j["pair"] = pair;

  j["metric"] = json{{"compatible", r.metric.compatible},
                     {"associated", r.metric.associated},
                     {"orthogonal_foliations", r.metric.orthogonal_foliations},
                     {"phi", r.metric.phi}};
  if (r.volume) {
    j["volume"] = json{{"top_coefficient", r.volume->top_coefficient},
                       {"lhs_coeff", r.volume->lhs_coeff},
                       {"det_g", r.volume->det_g},
                       {"holds", r.volume->holds}};
  } else {
    j["volume"] = nullptr;
  }
  json fols = json::array();
  for (const auto& f : r.foliations) {
    json jf{{"name", f.name},
            {"integrable", f.integrable},
            {"totally_geodesic", f.totally_geodesic},
            {"minimal_mean_curvature", f.minimal_mean_curvature},
            {"minimal_rummler", f.minimal_rummler},
            {"mean_curvature", f.mean_curvature}};
    jf["witness"] = f.witness ? to_json(*f.witness) : json(nullptr);
    fols.push_back(std::move(jf));
  }
  j["foliations"] = fols;
  j["geodesic_reeb"] = r.geodesic_reeb;
  json prop;
  prop["associated_implies_compatible"] = r.proposition.associated_implies_compatible;
  prop["negated_pair_same_phi_associated"] = r.proposition.negated_pair_same_phi_associated
                                                 ? json(*r.proposition.negated_pair_same_phi_associated)
                                                 : json(nullptr);
  j["proposition"] = prop;
  j["random_suite"] = json{{"seed", r.random_suite.seed},
                           {"count", r.random_suite.count},
                           {"failures", r.random_suite.failures}};
  json asserts = json::array();
  for (const auto& a : r.assertions) asserts.push_back(json{{"name", a.name}, {"passed", a.passed}});
  j["assertions"] = asserts;
  j["all_passed"] = r.all_passed;
  return j.dump(indent);
}

Report report_from_json(const std::string& text) {
  const json j = json::parse(text);
  Report r;
  r.model_name = j.at("model").get<std::string>();
  const json& pair = j.at("pair");
  r.pair.valid = pair.at("valid").get<bool>();
  r.pair.dimension = pair.at("dimension").get<int>();
  r.pair.m = pair.at("m").get<int>();
  r.pair.n = pair.at("n").get<int>();
  r.pair.xi = pair.at("xi").get<std::vector<std::string>>();
  r.pair.cartan_class_eta = pair.at("cartan_class_eta").get<int>();
  r.pair.cartan_class_omega = pair.at("cartan_class_omega").get<int>();
  for (const std::string name : {"TS", "TC", "TK", "H", "D"})
    r.pair.distributions.emplace_back(
        name, pair.at("distributions").at(name).get<std::vector<std::vector<std::string>>>());

  const json& metric = j.at("metric");
  r.metric.compatible = metric.at("compatible").get<bool>();
  r.metric.associated = metric.at("associated").get<bool>();
  r.metric.orthogonal_foliations = metric.at("orthogonal_foliations").get<bool>();
  r.metric.phi = metric.at("phi").get<std::vector<std::vector<std::string>>>();

  if (!j.at("volume").is_null()) {
    Report::VolumeSection v;
    v.top_coefficient = j.at("volume").at("top_coefficient").get<std::string>();
    v.lhs_coeff = j.at("volume").at("lhs_coeff").get<std::string>();
    v.det_g = j.at("volume").at("det_g").get<std::string>();
    v.holds = j.at("volume").at("holds").get<bool>();
    r.volume = v;
  }
  for (const json& jf : j.at("foliations")) {
    Report::Foliation f;
    f.name = jf.at("name").get<std::string>();
    f.integrable = jf.at("integrable").get<bool>();
    f.totally_geodesic = jf.at("totally_geodesic").get<bool>();
    f.minimal_mean_curvature = jf.at("minimal_mean_curvature").get<bool>();
    f.minimal_rummler = jf.at("minimal_rummler").get<bool>();
    f.mean_curvature = jf.at("mean_curvature").get<std::vector<std::string>>();
    if (!jf.at("witness").is_null()) f.witness = witness_from_json(jf.at("witness"));
    r.foliations.push_back(std::move(f));
  }
  r.geodesic_reeb = j.at("geodesic_reeb").get<bool>();
  r.proposition.associated_implies_compatible =
      j.at("proposition").at("associated_implies_compatible").get<bool>();
  if (!j.at("proposition").at("negated_pair_same_phi_associated").is_null())
    r.proposition.negated_pair_same_phi_associated =
        j.at("proposition").at("negated_pair_same_phi_associated").get<bool>();
  r.random_suite.seed = j.at("random_suite").at("seed").get<std::uint64_t>();
  r.random_suite.count = j.at("random_suite").at("count").get<unsigned>();
  r.random_suite.failures = j.at("random_suite").at("failures").get<unsigned>();
  for (const json& ja : j.at("assertions"))
    r.assertions.push_back({ja.at("name").get<std::string>(), ja.at("passed").get<bool>()});
  r.all_passed = j.at("all_passed").get<bool>();
  return r;
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  const auto yesno = [](bool b) { return b ? "yes" : "no"; };
  os << "model: " << r.model_name << "\n";
  os << "pair: valid, type (" << r.pair.m << ", " << r.pair.n << "), dimension "
     << r.pair.dimension << "\n";
  os << "  xi = (";
  for (size_t i = 0; i < r.pair.xi.size(); ++i) os << (i ? ", " : "") << r.pair.xi[i];
  os << ")\n";
  os << "  Cartan classes: eta " << r.pair.cartan_class_eta << ", omega "
     << r.pair.cartan_class_omega << "\n";
  for (const auto& [name, basis] : r.pair.distributions) {
    os << "  " << name << ": dim " << basis.size() << "\n";
  }
  os << "metric: compatible " << yesno(r.metric.compatible) << ", associated "
     << yesno(r.metric.associated) << ", TS orthogonal to TC "
     << yesno(r.metric.orthogonal_foliations) << "\n";
  if (r.volume) {
    os << "volume element: coefficient " << r.volume->top_coefficient << ", scaled "
       << r.volume->lhs_coeff << ", squared equals det g = " << r.volume->det_g << ": "
       << (r.volume->holds ? "holds" : "FAILS") << "\n";
  }
  os << "geodesic Reeb field: " << yesno(r.geodesic_reeb) << "\n";
  for (const auto& f : r.foliations) {
    os << "foliation " << f.name << ": integrable " << yesno(f.integrable)
       << ", totally geodesic " << yesno(f.totally_geodesic) << ", minimal "
       << yesno(f.minimal_mean_curvature) << " (mean curvature) / "
       << yesno(f.minimal_rummler) << " (relative closedness)\n";
    if (f.witness) {
      os << "  witness: g(II(u, v), n) = " << f.witness->value << "\n";
    }
  }
  if (r.proposition.negated_pair_same_phi_associated) {
    os << "same (g, phi) associated to (eta, -omega): "
       << yesno(*r.proposition.negated_pair_same_phi_associated) << " (must be no)\n";
  }
  if (r.random_suite.count > 0) {
    os << "random compatible metrics: seed " << r.random_suite.seed << ", "
       << r.random_suite.count << " cases, " << r.random_suite.failures << " failures\n";
  }
  unsigned passed = 0;
  for (const auto& a : r.assertions) passed += a.passed ? 1 : 0;
  os << "checks: " << passed << "/" << r.assertions.size() << " passed\n";
  for (const auto& a : r.assertions)
    if (!a.passed) os << "  FAILED: " << a.name << "\n";
  os << (r.all_passed ? "VERIFIED" : "NOT VERIFIED") << "\n";
  return os.str();
}

} // namespace csp
