#include "cspverify.h"

#include <cstring>
#include <string>

#include "csp/error.hpp"
#include "csp/model.hpp"
#include "csp/report.hpp"

struct cspv_model {
  csp::Model model;
};

struct cspv_report {
  csp::Report report;
};

namespace {

thread_local std::string g_last_error;
thread_local int g_last_line = 0;
thread_local int g_last_column = 0;

void clear_error() {
  g_last_error.clear();
  g_last_line = 0;
  g_last_column = 0;
}

cspv_status record(const csp::Error& e) {
  g_last_error = e.what();
  g_last_line = e.line();
  g_last_column = e.column();
  switch (e.kind()) {
    case csp::ErrorKind::Parse: return CSPV_ERR_PARSE;
    case csp::ErrorKind::Dimension: return CSPV_ERR_DIMENSION;
    case csp::ErrorKind::Jacobi: return CSPV_ERR_JACOBI;
    case csp::ErrorKind::Metric: return CSPV_ERR_METRIC;
    case csp::ErrorKind::Pair: return CSPV_ERR_PAIR;
    case csp::ErrorKind::UnknownExample: return CSPV_ERR_UNKNOWN_EXAMPLE;
    case csp::ErrorKind::InvalidArgument: return CSPV_ERR_INVALID_ARGUMENT;
    case csp::ErrorKind::Internal: return CSPV_ERR_INTERNAL;
  }
  return CSPV_ERR_INTERNAL;
}

cspv_status record_unknown(const std::exception& e) {
  g_last_error = e.what();
  g_last_line = 0;
  g_last_column = 0;
  return CSPV_ERR_INTERNAL;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

} // namespace

extern "C" {

cspv_status cspv_model_parse(const char* text, const char* name, cspv_model** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return CSPV_ERR_INVALID_ARGUMENT;
  }
  clear_error();
  try {
    auto* m = new cspv_model{csp::parse_model(text, name ? name : "model")};
    *out = m;
    return CSPV_OK;
  } catch (const csp::Error& e) {
    return record(e);
  } catch (const std::exception& e) {
    return record_unknown(e);
  }
}

cspv_status cspv_model_builtin(const char* name, cspv_model** out) {
  if (!name || !out) {
    g_last_error = "null argument";
    return CSPV_ERR_INVALID_ARGUMENT;
  }
  clear_error();
  try {
    auto* m = new cspv_model{csp::builtin_example(name)};
    *out = m;
    return CSPV_OK;
  } catch (const csp::Error& e) {
    return record(e);
  } catch (const std::exception& e) {
    return record_unknown(e);
  }
}

void cspv_model_free(cspv_model* model) { delete model; }

char* cspv_model_dump_dsl(const cspv_model* model) {
  if (!model) return nullptr;
  return copy_string(csp::to_dsl(model->model));
}

cspv_status cspv_run_report(const cspv_model* model, unsigned random_count, uint64_t seed,
                            cspv_report** out) {
  if (!model || !out) {
    g_last_error = "null argument";
    return CSPV_ERR_INVALID_ARGUMENT;
  }
  clear_error();
  try {
    csp::ReportOptions options;
    options.random_count = random_count;
    options.seed = seed;
    auto* r = new cspv_report{csp::run_report(model->model, options)};
    *out = r;
    return CSPV_OK;
  } catch (const csp::Error& e) {
    return record(e);
  } catch (const std::exception& e) {
    return record_unknown(e);
  }
}

int cspv_report_all_passed(const cspv_report* report) {
  return report && report->report.all_passed ? 1 : 0;
}

char* cspv_report_json(const cspv_report* report) {
  if (!report) return nullptr;
  return copy_string(csp::report_to_json(report->report));
}

char* cspv_report_text(const cspv_report* report) {
  if (!report) return nullptr;
  return copy_string(csp::report_to_text(report->report));
}

void cspv_report_free(cspv_report* report) { delete report; }

void cspv_string_free(char* s) { delete[] s; }

const char* cspv_last_error(void) { return g_last_error.c_str(); }

int cspv_last_error_line(void) { return g_last_line; }

int cspv_last_error_column(void) { return g_last_column; }

const char* cspv_version(void) { return "0.1.0"; }

} // extern "C"
