// Copyright 2026 The spliceq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/* C interface to spliceq. Every function returns a spliceq_status; on failure
 * spliceq_last_error() gives a message for the calling thread. Strings and
 * diagrams handed out are owned by the caller and released with
 * spliceq_string_free / spliceq_diagram_free. */

#ifndef SPLICEQ_H
#define SPLICEQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SPLICEQ_API __declspec(dllexport)
#else
#define SPLICEQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct spliceq_diagram spliceq_diagram;

typedef enum spliceq_status {
  SPLICEQ_OK = 0,
  SPLICEQ_ERR_INVALID_ARGUMENT = 1,
  SPLICEQ_ERR_POLE_AT_ONE = 2,
  SPLICEQ_ERR_DECORATED_ARROW = 3,
  SPLICEQ_ERR_CACHE_MISMATCH = 4,
  SPLICEQ_ERR_NON_PRIMITIVE = 5,
  SPLICEQ_ERR_NEGATIVE_DETERMINANT = 6,
  SPLICEQ_ERR_NON_INTEGRAL_INTERPOLATION = 7,
  SPLICEQ_ERR_MISSING_CACHE = 8,
  SPLICEQ_ERR_DEGENERATE_DENOMINATOR = 9,
  SPLICEQ_ERR_NOT_AN_EDGE = 10,
  SPLICEQ_ERR_NO_F_ARROW = 11,
  SPLICEQ_ERR_NON_POLYNOMIAL_DELTA1 = 12,
  SPLICEQ_ERR_PARSE = 13,
  SPLICEQ_ERR_VALIDATION = 14,
  SPLICEQ_ERR_DEGENERATE_BRANCH = 15,
  SPLICEQ_ERR_OVERFLOW = 16,
  SPLICEQ_ERR_IO = 17,
  SPLICEQ_ERR_NULL_ARGUMENT = 18,
  SPLICEQ_ERR_INTERNAL = 19
} spliceq_status;

/* Human text, or machine records: one record per line, a tag followed by
 * key=value tokens whose values contain no whitespace. */
typedef enum spliceq_format { SPLICEQ_HUMAN = 0, SPLICEQ_MACHINE = 1 } spliceq_format;

typedef enum spliceq_zeta_kind {
  SPLICEQ_ZETA_MOTIVIC = 0,
  SPLICEQ_ZETA_TOP = 1,
  SPLICEQ_ZETA_TWISTED = 2
} spliceq_zeta_kind;

SPLICEQ_API const char* spliceq_version(void);
SPLICEQ_API const char* spliceq_status_name(spliceq_status status);
SPLICEQ_API const char* spliceq_last_error(void);
SPLICEQ_API void spliceq_string_free(char* s);
SPLICEQ_API void spliceq_diagram_free(spliceq_diagram* g);

/* Construction and serialization */
SPLICEQ_API spliceq_status spliceq_diagram_parse(const char* text, int validate, spliceq_diagram** out);
/* source is a file path or "example:<name>" */
SPLICEQ_API spliceq_status spliceq_diagram_load(const char* source, int validate, spliceq_diagram** out);
SPLICEQ_API spliceq_status spliceq_diagram_example(const char* name, spliceq_diagram** out);
SPLICEQ_API spliceq_status spliceq_diagram_random(uint64_t seed, int moves, spliceq_diagram** out);
SPLICEQ_API spliceq_status spliceq_diagram_write(const spliceq_diagram* g, char** out);
SPLICEQ_API spliceq_status spliceq_diagram_counts(const spliceq_diagram* g, size_t* nodes, size_t* edges,
                                                  size_t* arrows);
/* newline-separated list */
SPLICEQ_API spliceq_status spliceq_example_names(char** out);

/* Analyses */
SPLICEQ_API spliceq_status spliceq_validate(const spliceq_diagram* g, spliceq_format fmt, int* valid, char** report);
SPLICEQ_API spliceq_status spliceq_multiplicities(const spliceq_diagram* g, spliceq_format fmt, char** out);
SPLICEQ_API spliceq_status spliceq_refine(const spliceq_diagram* g, spliceq_diagram** out);
SPLICEQ_API spliceq_status spliceq_reduce(const spliceq_diagram* g, spliceq_diagram** out);
SPLICEQ_API spliceq_status spliceq_zeta(const spliceq_diagram* g, spliceq_zeta_kind kind, int64_t order,
                                        spliceq_format fmt, char** out);
/* data receives M, M', i, i' */
SPLICEQ_API spliceq_status spliceq_splice(const spliceq_diagram* g, const char* a, const char* b,
                                          spliceq_diagram** left, spliceq_diagram** right, int64_t data[4]);
SPLICEQ_API spliceq_status spliceq_verify_splice(const spliceq_diagram* g, const char* a, const char* b,
                                                 int* motivic_ok, int* top_ok);
/* every node-edge; report lists each edge's verdicts */
SPLICEQ_API spliceq_status spliceq_verify_all_splices(const spliceq_diagram* g, spliceq_format fmt, int* all_ok,
                                                      char** report);
SPLICEQ_API spliceq_status spliceq_monodromy(const spliceq_diagram* g, spliceq_format fmt, char** out);
SPLICEQ_API spliceq_status spliceq_is_eigenvalue(const spliceq_diagram* g, int64_t num, int64_t den, int* out);
SPLICEQ_API spliceq_status spliceq_allowed(const spliceq_diagram* g, spliceq_format fmt, int* allowed, char** out);
/* orders may be NULL when n_orders is 0; auto_orders adds divisors of node N-values up to max_order */
SPLICEQ_API spliceq_status spliceq_mc_report(const spliceq_diagram* g, const int64_t* orders, size_t n_orders,
                                             int auto_orders, int64_t max_order, spliceq_format fmt,
                                             char** out);
/* extended = 0: residue box; 1: every residue the target class depends on.
 * none_found is 1 when no tuple meets both conditions. */
SPLICEQ_API spliceq_status spliceq_example2_search(int extended, spliceq_format fmt, int* none_found, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SPLICEQ_H */
