// Command-line front end. Talks to the engine exclusively through the
// shared-library C interface.
//
// Exit codes:
//   0  every checked assertion passed
//   1  usage, I/O or unknown-example errors
//   2  model could not be loaded (parse / dimension / Jacobi / metric)
//   3  (eta, omega) is not a contact-symplectic pair
//   4  a theorem check failed (report produced, see output)

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cspverify.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitLoad = 2;
constexpr int kExitPair = 3;
constexpr int kExitChecks = 4;

void print_error(const std::string& context) {
  std::cerr << context << ": " << cspv_last_error();
  if (cspv_last_error_line() > 0) {
    std::cerr << " (line " << cspv_last_error_line();
    if (cspv_last_error_column() > 0) std::cerr << ", column " << cspv_last_error_column();
    std::cerr << ")";
  }
  std::cerr << "\n";
}

int status_to_exit(cspv_status status) {
  switch (status) {
    case CSPV_OK: return 0;
    case CSPV_ERR_PARSE:
    case CSPV_ERR_DIMENSION:
    case CSPV_ERR_JACOBI:
    case CSPV_ERR_METRIC: return kExitLoad;
    case CSPV_ERR_PAIR: return kExitPair;
    default: return kExitUsage;
  }
}

int run_and_emit(cspv_model* model, unsigned random_count, std::uint64_t seed,
                 const std::string& json_path) {
  cspv_report* report = nullptr;
  const cspv_status status = cspv_run_report(model, random_count, seed, &report);
  if (status != CSPV_OK) {
    print_error("verification failed");
    return status_to_exit(status);
  }
  char* text = cspv_report_text(report);
  std::cout << text;
  cspv_string_free(text);
  if (!json_path.empty()) {
    char* json = cspv_report_json(report);
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      cspv_string_free(json);
      cspv_report_free(report);
      return kExitUsage;
    }
    out << json << "\n";
    cspv_string_free(json);
  }
  const bool passed = cspv_report_all_passed(report) != 0;
  cspv_report_free(report);
  return passed ? 0 : kExitChecks;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for contact-symplectic pairs on Lie algebras"};
  app.require_subcommand(1);

  std::string file;
  std::string example_name;
  std::string json_path;
  unsigned random_count = 100;
  std::uint64_t seed = 42;
  bool dump_dsl = false;

  CLI::App* verify = app.add_subcommand("verify", "verify a structure from a DSL file");
  verify->add_option("file", file, "input file")->required();
  verify->add_option("--json", json_path, "write the JSON report here");
  verify->add_option("--random", random_count, "random compatible metrics to test (default 100)");
  verify->add_option("--seed", seed, "seed for the random suite (default 42)");

  CLI::App* example = app.add_subcommand("example", "verify a builtin example");
  example->add_option("name", example_name, "g5, g7 or product")->required();
  example->add_option("--json", json_path, "write the JSON report here");
  example->add_option("--random", random_count, "random compatible metrics to test (default 100)");
  example->add_option("--seed", seed, "seed for the random suite (default 42)");
  example->add_flag("--dump-dsl", dump_dsl, "print the canonical DSL instead of verifying");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  cspv_model* model = nullptr;
  if (verify->parsed()) {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "cannot read " << file << "\n";
      return kExitUsage;
    }
    std::ostringstream text;
    text << in.rdbuf();
    const cspv_status status = cspv_model_parse(text.str().c_str(), file.c_str(), &model);
    if (status != CSPV_OK) {
      print_error(file);
      return status_to_exit(status);
    }
  } else {
    const cspv_status status = cspv_model_builtin(example_name.c_str(), &model);
    if (status != CSPV_OK) {
      print_error(example_name);
      return status_to_exit(status);
    }
    if (dump_dsl) {
      char* dsl = cspv_model_dump_dsl(model);
      std::cout << dsl;
      cspv_string_free(dsl);
      cspv_model_free(model);
      return 0;
    }
  }

  std::cout << "random suite: count " << random_count << ", seed " << seed << "\n";
  const int code = run_and_emit(model, random_count, seed, json_path);
  cspv_model_free(model);
  return code;
}
