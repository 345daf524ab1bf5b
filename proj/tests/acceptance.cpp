// Acceptance suite: each numbered criterion prints exactly one line,
//   [PASS] criterion N: <summary>   or   [FAIL] criterion N: <summary>
// and the process exits nonzero if any criterion fails. All comparisons are
// exact; the only tolerances are the two wall-clock budgets.
//
// Usage: acceptance <fixtures-dir> [<cli-binary>]
// Without a CLI path the exit-code contract of criterion 10 is checked
// through the library error classes only.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "csp/error.hpp"
#include "csp/geometry.hpp"
#include "csp/report.hpp"
#include "support/test_support.hpp"

using namespace csp;
using namespace csp::testing;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& summary, bool ok) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << summary << "\n";
  if (!ok) ++g_failures;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Mat phi_table(int dim, std::initializer_list<std::tuple<int, int, int>> entries) {
  Mat p(dim, dim);
  for (const auto& [from, to, sign] : entries) p.at(to - 1, from - 1) = Rational(sign);
  return p;
}

const FoliationReport& named(const FoliationSurvey& survey, const std::string& name) {
  for (const auto& r : survey.reports)
    if (r.name == name) return r;
  throw std::runtime_error("missing foliation " + name);
}

int run_cli(const std::string& cli, const std::string& args) {
  const std::string cmd = cli + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

} // namespace

int main(int argc, char** argv) {
  const std::string fixtures = argc > 1 ? argv[1] : "tests/fixtures";
  const std::string cli = argc > 2 ? argv[2] : "";

  // ---- criterion 1: g5 golden run ------------------------------------
  {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    const Model m = builtin_example("g5");
    const CSPair pair = classify_pair(m.algebra, m.eta, m.omega);
    ok = ok && pair.m == 1 && pair.n == 1;
    ok = ok && pair.xi == Vector::basis(5, 2);
    const PhiTensor phi = phi_from(pair, m.metric);
    ok = ok && phi.matrix() == phi_table(5, {{3, 1, 1}, {1, 3, -1}, {5, 4, 1}, {4, 5, -1}});
    ok = ok && check_associated(pair, m.metric);
    ok = ok && check_compatible(m.metric, phi, pair.eta, pair.xi);
    const double elapsed = seconds_since(start);
    ok = ok && elapsed < 1.0;
    criterion(1, "g5 golden run: type (1,1), xi = X2, phi table, associated + compatible", ok);
  }

  // ---- criterion 2: g5 foliations ------------------------------------
  {
    const Model m = builtin_example("g5");
    const CSPair pair = classify_pair(m.algebra, m.eta, m.omega);
    const FoliationSurvey survey = foliation_report(pair, m.metric);
    const FoliationReport& S = named(survey, "S");
    const FoliationReport& C = named(survey, "C");
    const FoliationReport& K = named(survey, "K");
    bool ok = C.totally_geodesic;
    ok = ok && !S.totally_geodesic && S.witness.has_value();
    ok = ok && S.witness->value == Rational(-1, 4);
    ok = ok && S.witness->u == Vector::basis(5, 4) && S.witness->v == Vector::basis(5, 5) &&
         S.witness->normal == Vector::basis(5, 1);
    for (const auto* f : {&S, &C, &K}) ok = ok && f->minimal_mean_curvature && f->minimal_rummler;
    criterion(2, "g5 foliations: C totally geodesic, S witness -1/4, S/C/K minimal by both oracles",
              ok);
  }

  // ---- criterion 3: g7 golden run ------------------------------------
  {
    const Model m = builtin_example("g7");
    const CSPair pair = classify_pair(m.algebra, m.eta, m.omega);
    bool ok = pair.m == 1 && pair.n == 2;
    const FoliationSurvey survey = foliation_report(pair, m.metric);
    const FoliationReport& S = named(survey, "S");
    const FoliationReport& C = named(survey, "C");
    const FoliationReport& K = named(survey, "K");
    ok = ok && !S.totally_geodesic && !C.totally_geodesic;
    ok = ok && C.witness.has_value() && C.witness->value == Rational(1, 4);
    ok = ok && S.witness.has_value() && S.witness->value == Rational(-1, 4);
    for (const auto* f : {&S, &C, &K}) ok = ok && f->minimal_mean_curvature && f->minimal_rummler;
    criterion(3, "g7 golden run: type (1,2), witnesses 1/4 and -1/4, S/C/K minimal by both oracles",
              ok);
  }

  // ---- criterion 4: volume theorem -----------------------------------
  {
    const Model g5 = builtin_example("g5");
    const VolumeIdentity v5 =
        volume_identity(classify_pair(g5.algebra, g5.eta, g5.omega), g5.metric);
    const Model g7 = builtin_example("g7");
    const VolumeIdentity v7 =
        volume_identity(classify_pair(g7.algebra, g7.eta, g7.omega), g7.metric);
    const bool ok = v5.lhs_coeff.squared() == Rational(1, 16) && v5.det_g == Rational(1, 16) &&
                    v5.holds && v7.lhs_coeff.squared() == Rational(1, 64) &&
                    v7.det_g == Rational(1, 64) && v7.holds;
    criterion(4, "volume element: (1/4)^2 = 1/16 on g5 and (1/8)^2 = 1/64 on g7, exactly", ok);
  }

  // ---- criterion 5: geodesic Reeb curves ------------------------------
  {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    unsigned cases = 0;
    for (const char* name : {"g5", "g7", "product"}) {
      const Model m = builtin_example(name);
      const CSPair pair = classify_pair(m.algebra, m.eta, m.omega);
      const PhiTensor phi = phi_from(pair, m.metric);
      ok = ok && geodesic_reeb_check(levi_civita(m.algebra, m.metric), pair.xi);
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const MetricTensor g = random_compatible(pair, phi, seed);
        ok = ok && geodesic_reeb_check(levi_civita(m.algebra, g), pair.xi);
        ++cases;
      }
    }
    const double elapsed = seconds_since(start);
    ok = ok && cases == 300 && elapsed < 30.0;
    std::ostringstream summary;
    summary << "geodesic Reeb: associated metrics + " << cases
            << " random compatible metrics, zero failures";
    criterion(5, summary.str(), ok);
  }

  // ---- criterion 6: proposition suite ---------------------------------
  {
    bool ok = true;
    SplitMix64 rng(2026);
    for (const char* name : {"g5", "g7", "product"}) {
      const Model m = builtin_example(name);
      const CSPair pair = classify_pair(m.algebra, m.eta, m.omega);
      const PhiTensor phi = phi_from(pair, m.metric);
      std::vector<MetricTensor> metrics{m.metric};
      for (int i = 0; i < 40; ++i) metrics.push_back(random_compatible(pair, phi, rng.next()));
      for (const MetricTensor& g : metrics)
        if (check_associated(pair, g))
          ok = ok && check_compatible(g, phi_from(pair, g), pair.eta, pair.xi);
    }
    for (const char* name : {"g5", "g7"}) {
      const Model m = builtin_example(name);
      const CSPair pair = classify_pair(m.algebra, m.eta, m.omega);
      const PhiTensor phi = phi_from(pair, m.metric);
      const CSPair negated = classify_pair(m.algebra, m.eta, -m.omega);
      ok = ok && !check_associated(negated, m.metric, phi);
    }
    criterion(6, "proposition: associated => compatible on all metrics; (eta,-omega) rejects the "
                 "shared phi on g5 and g7",
              ok);
  }

  // ---- criterion 7: product example ------------------------------------
  {
    const Model m = builtin_example("product");
    const CSPair pair = classify_pair(m.algebra, m.eta, m.omega);
    const FoliationSurvey survey = foliation_report(pair, m.metric);
    bool ok = survey.orthogonal && survey.associated;
    for (const auto& r : survey.reports)
      ok = ok && r.totally_geodesic && r.minimal_mean_curvature && r.minimal_rummler;
    criterion(7, "product example: S, C, K all totally geodesic and minimal", ok);
  }

  // ---- criterion 8: kernel property suites ------------------------------
  {
    bool ok = true;
    // wedge graded commutativity + associativity
    {
      SplitMix64 rng(880);
      for (int t = 0; t < 500; ++t) {
        const int dim = 3 + static_cast<int>(rng.below(5));
        const int p = 1 + static_cast<int>(rng.below(3));
        const int q = 1 + static_cast<int>(rng.below(3));
        const KForm a = random_form(rng, dim, std::min(p, dim));
        const KForm b = random_form(rng, dim, std::min(q, dim));
        KForm ba = wedge(b, a);
        if ((a.degree() * b.degree()) % 2 == 1) ba = -ba;
        ok = ok && wedge(a, b) == ba;
        const KForm c = random_form(rng, dim, 1);
        ok = ok && wedge(wedge(a, b), c) == wedge(a, wedge(b, c));
      }
    }
    // interior-product antiderivation law
    {
      SplitMix64 rng(881);
      for (int t = 0; t < 500; ++t) {
        const int dim = 3 + static_cast<int>(rng.below(5));
        const KForm a = random_form(rng, dim, 1 + static_cast<int>(rng.below(3)));
        const KForm b = random_form(rng, dim, 1 + static_cast<int>(rng.below(2)));
        const Vector v = random_vector(rng, dim);
        KForm second = wedge(a, contract(v, b));
        if (a.degree() % 2 == 1) second = -second;
        ok = ok && contract(v, wedge(a, b)) == wedge(contract(v, a), b) + second;
      }
    }
    // d^2 = 0 and the Cartan-formula product rule on valid algebras
    {
      SplitMix64 rng(882);
      for (int t = 0; t < 500; ++t) {
        const LieAlgebra L = random_valid_algebra(rng);
        const KForm a = random_form(rng, L.dim(), 1 + static_cast<int>(rng.below(2)));
        ok = ok && L.cee_d(L.cee_d(a)).is_zero();
        const KForm b = random_form(rng, L.dim(), 1);
        const Vector v = random_vector(rng, L.dim());
        ok = ok && L.lie_derivative(v, wedge(a, b)) ==
                       wedge(L.lie_derivative(v, a), b) + wedge(a, L.lie_derivative(v, b));
      }
    }
    // connection axioms on random compatible metrics (validated inside
    // levi_civita, which throws on violation)
    {
      SplitMix64 rng(883);
      try {
        for (int t = 0; t < 510; ++t) {
          const Model m = builtin_example(t % 3 == 0 ? "g5" : t % 3 == 1 ? "g7" : "product");
          const CSPair pair = classify_pair(m.algebra, m.eta, m.omega);
          const PhiTensor phi = phi_from(pair, m.metric);
          static_cast<void>(levi_civita(m.algebra, random_compatible(pair, phi, rng.next())));
        }
      } catch (const Error&) {
        ok = false;
      }
    }
    // mean-curvature basis independence
    {
      SplitMix64 rng(884);
      int done = 0;
      while (done < 500) {
        const Model m = builtin_example(done % 2 ? "g5" : "g7");
        const CSPair pair = classify_pair(m.algebra, m.eta, m.omega);
        const Connection conn = levi_civita(m.algebra, m.metric);
        const Subspace& D = done % 3 ? pair.dist.ts : pair.dist.tk;
        const SecondFundamentalForm ii =
            second_fundamental_form(m.algebra, m.metric, conn, D);
        const Vector h = mean_curvature(m.metric, D, ii);
        const int p = D.dim();
        Mat mix(p, p);
        for (int i = 0; i < p; ++i)
          for (int j = 0; j < p; ++j) mix.at(i, j) = random_rational(rng, 2);
        if (mix.det().is_zero()) continue;
        std::vector<Vector> basis;
        for (int a = 0; a < p; ++a) {
          Vector v(m.algebra.dim());
          for (int b = 0; b < p; ++b)
            v = v + Vector(m.algebra.dim(), D.basis()[b]).scaled(mix.at(a, b));
          basis.push_back(std::move(v));
        }
        ok = ok && mean_curvature_in_basis(m.algebra, m.metric, conn, D, basis) == h;
        ++done;
      }
    }
    criterion(8, "kernel property suites (>=500 seeded cases each), zero failures", ok);
  }

  // ---- criterion 9: minimality oracle agreement --------------------------
  {
    bool ok = true;
    for (const char* name : {"g5", "g7", "product"}) {
      const Model m = builtin_example(name);
      const CSPair pair = classify_pair(m.algebra, m.eta, m.omega);
      const PhiTensor phi = phi_from(pair, m.metric);
      std::vector<MetricTensor> metrics{m.metric};
      for (std::uint64_t seed = 0; seed < 20; ++seed)
        metrics.push_back(random_compatible(pair, phi, 9000 + seed));
      for (const MetricTensor& g : metrics) {
        const FoliationSurvey survey = foliation_report(pair, g);
        for (const auto& r : survey.reports)
          ok = ok && r.minimal_mean_curvature == r.minimal_rummler;
      }
    }
    criterion(9, "minimal_mean_curvature <=> minimal_rummler across catalog models and 20 random "
                 "metrics each",
              ok);
  }

  // ---- criterion 10: parser and exit codes ------------------------------
  {
    bool ok = true;
    // golden round-trips
    for (const char* name : {"g5", "g7"}) {
      const Model parsed = parse_model(read_file(fixtures + "/" + name + ".csp"), name);
      ok = ok && parsed == builtin_example(name);
      ok = ok && parse_model(to_dsl(parsed), name) == parsed;
    }
    // five malformed fixtures, five distinct error classes, correct lines
    const struct {
      const char* file;
      ErrorKind kind;
      int line;
    } cases[] = {
        {"bad_parse.csp", ErrorKind::Parse, 2},
        {"bad_dimension.csp", ErrorKind::Dimension, 3},
        {"bad_jacobi.csp", ErrorKind::Jacobi, 2},
        {"bad_metric.csp", ErrorKind::Metric, 6},
        {"bad_pair.csp", ErrorKind::Pair, 5},
    };
    for (const auto& c : cases) {
      bool hit = false;
      try {
        const Model m = parse_model(read_file(fixtures + std::string("/") + c.file), c.file);
        static_cast<void>(run_report(m, {.random_count = 0, .seed = 0}));
      } catch (const Error& e) {
        hit = e.kind() == c.kind && e.line() == c.line;
      }
      ok = ok && hit;
    }
    // exit-code contract, end to end when the CLI path is supplied
    if (!cli.empty()) {
      ok = ok && run_cli(cli, "example g5 --random 2") == 0;
      ok = ok && run_cli(cli, "verify " + fixtures + "/bad_parse.csp") == 2;
      ok = ok && run_cli(cli, "verify " + fixtures + "/bad_jacobi.csp") == 2;
      ok = ok && run_cli(cli, "verify " + fixtures + "/bad_pair.csp") == 3;
      ok = ok && run_cli(cli, "verify " + fixtures + "/not_associated.csp --random 0") == 4;
      ok = ok && run_cli(cli, "example nosuch") == 1;
    }
    criterion(10, "parser round-trips, five error classes with line numbers, exit-code contract",
              ok);
  }

  if (g_failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criterion(s) failed\n";
  return 1;
}
