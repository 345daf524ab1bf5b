/* C interface to the contact-symplectic structure verifier.
 *
 * All functions are thread-safe; error details are thread-local and refer to
 * the most recent failing call on the current thread. Strings returned as
 * char* are owned by the caller and must be released with cspv_string_free.
 */

#ifndef CSPVERIFY_H
#define CSPVERIFY_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CSPV_API __declspec(dllexport)
#else
#define CSPV_API __attribute__((visibility("default")))
#endif

typedef struct cspv_model cspv_model;
typedef struct cspv_report cspv_report;

typedef enum cspv_status {
  CSPV_OK = 0,
  CSPV_ERR_PARSE = 1,            /* malformed DSL text */
  CSPV_ERR_DIMENSION = 2,        /* index or size outside the declared dimension */
  CSPV_ERR_JACOBI = 3,           /* structure equations violate the Jacobi identity */
  CSPV_ERR_METRIC = 4,           /* metric not symmetric positive-definite */
  CSPV_ERR_PAIR = 5,             /* (eta, omega) is not a contact-symplectic pair */
  CSPV_ERR_UNKNOWN_EXAMPLE = 6,  /* no builtin with that name */
  CSPV_ERR_INVALID_ARGUMENT = 7, /* null handle or bad parameter */
  CSPV_ERR_INTERNAL = 8
} cspv_status;

/* Parses DSL text into a model. On success *out must be released with
 * cspv_model_free. */
CSPV_API cspv_status cspv_model_parse(const char* text, const char* name, cspv_model** out);

/* Builtin catalog: "g5", "g7", "product". */
CSPV_API cspv_status cspv_model_builtin(const char* name, cspv_model** out);

CSPV_API void cspv_model_free(cspv_model* model);

/* Canonical DSL text of the model; reparsing it reproduces the model. */
CSPV_API char* cspv_model_dump_dsl(const cspv_model* model);

/* Runs the verification pipeline: pair classification, metric checks,
 * volume identity, connection, geodesic Reeb check, foliation reports with
 * both minimality oracles, and the seeded random compatible-metric suite.
 * Fails with CSPV_ERR_PAIR when the pair is invalid; theorem-check failures
 * still produce a report (see cspv_report_all_passed). */
CSPV_API cspv_status cspv_run_report(const cspv_model* model, unsigned random_count,
                                     uint64_t seed, cspv_report** out);

/* 1 when every checked assertion passed, else 0. */
CSPV_API int cspv_report_all_passed(const cspv_report* report);

/* JSON document with all verdicts; exact rationals as "p/q" strings. */
CSPV_API char* cspv_report_json(const cspv_report* report);

/* Human-readable summary. */
CSPV_API char* cspv_report_text(const cspv_report* report);

CSPV_API void cspv_report_free(cspv_report* report);

CSPV_API void cspv_string_free(char* s);

/* Message, line and column (1-based; 0 when not applicable) of the last
 * error on this thread. The message pointer stays valid until the next
 * failing call on the same thread. */
CSPV_API const char* cspv_last_error(void);
CSPV_API int cspv_last_error_line(void);
CSPV_API int cspv_last_error_column(void);

CSPV_API const char* cspv_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CSPVERIFY_H */
