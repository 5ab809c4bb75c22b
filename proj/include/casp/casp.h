// Copyright 2026 The casp-schemas Authors
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

/* C interface to the casp library. Every function returns a casp_status;
 * on failure casp_last_error() describes the problem for the calling
 * thread. Strings returned through `char**` are owned by the caller and
 * released with casp_string_free. */

#ifndef CASP_CASP_H
#define CASP_CASP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CASP_API __declspec(dllexport)
#else
#define CASP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum casp_status {
  CASP_OK = 0,
  CASP_ERR_SYNTAX = 1,
  CASP_ERR_INVALID_PROGRAM = 2,
  CASP_ERR_INVALID_ARGUMENT = 3,
  CASP_ERR_UNSUPPORTED = 4,
  CASP_ERR_INTERNAL = 5
} casp_status;

typedef enum casp_outcome { CASP_SAT = 10, CASP_UNSAT = 20, CASP_TIMEOUT = 30 } casp_outcome;

typedef enum casp_schema { CASP_BLACK_BOX = 0, CASP_GREY_BOX = 1, CASP_CLEAR_BOX = 2 } casp_schema;

typedef enum casp_blocking { CASP_BLOCK_MODEL = 0, CASP_BLOCK_THEORY = 1 } casp_blocking;

typedef struct casp_program casp_program;
typedef struct casp_options casp_options;
typedef struct casp_result casp_result;

CASP_API const char* casp_last_error(void);
CASP_API void casp_string_free(char* s);

/* Programs */
CASP_API casp_status casp_program_parse(const char* text, size_t len, casp_program** out);
CASP_API void casp_program_free(casp_program* p);
CASP_API casp_status casp_program_print(const casp_program* p, char** out);
CASP_API size_t casp_program_atom_count(const casp_program* p);

/* Options; defaults: clear-box, theory blocking, no core minimization,
 * no timeout, seed 0, single solution. */
CASP_API casp_options* casp_options_new(void);
CASP_API void casp_options_free(casp_options* o);
CASP_API casp_status casp_options_set_schema(casp_options* o, casp_schema s);
CASP_API casp_status casp_options_set_blocking(casp_options* o, casp_blocking b);
CASP_API casp_status casp_options_set_minimize_core(casp_options* o, int on);
/* Negative values disable the limit. */
CASP_API casp_status casp_options_set_timeout_s(casp_options* o, double seconds);
CASP_API casp_status casp_options_set_seed(casp_options* o, uint64_t seed);
CASP_API casp_status casp_options_set_enumerate_all(casp_options* o, int on);

/* Solving */
CASP_API casp_status casp_solve(const casp_program* p, const casp_options* o, casp_result** out);
CASP_API void casp_result_free(casp_result* r);
CASP_API casp_outcome casp_result_outcome(const casp_result* r);
/* Number of answer sets held (0 or 1 for single-solution runs). */
CASP_API size_t casp_result_count(const casp_result* r);
/* Looks up a named counter (candidates, theory_calls, decisions, ...). */
CASP_API casp_status casp_result_stat(const casp_result* r, const char* name, uint64_t* out);
CASP_API casp_status casp_result_to_text(const casp_result* r, char** out);
/* Solution file of the first answer set, `{}` when there is none. */
CASP_API casp_status casp_result_to_json(const casp_result* r, char** out);

/* Benchmarks. Domains: "wseq", "is", "rf". Encodings: "pure-asp",
 * "true-casp", "pure-csp". `size` is leaves, jobs or segments; `moves`
 * is only read for rf. */
CASP_API casp_status casp_generate(const char* domain, int size, int moves, uint64_t seed, char** json_out);
CASP_API casp_status casp_encode(const char* instance_json, const char* encoding, char** program_out);
CASP_API casp_status casp_verify(const char* instance_json, const char* solution_json, int* passed, char** message);
/* Runs a bench config; `agreement_ok` is 1 when no audit failed. */
CASP_API casp_status casp_bench(const char* config_json, char** csv_out, char** totals_out, int* agreement_ok);

#ifdef __cplusplus
}
#endif

#endif /* CASP_CASP_H */
