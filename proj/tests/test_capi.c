/* Copyright 2026 The casp-schemas Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Plain C client of the shared library. */

#include <stdio.h>
#include <string.h>

#include "casp/casp.h"

static int failures = 0;

#define EXPECT(cond)                                             \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                \
    }                                                            \
  } while (0)

static const char* kLightSwitch =
    "#var X 0..24.\n"
    "am :- X #< 12.\n"
    "lightOn :- switch, not am.\n"
    "{switch}.\n"
    "#false :- not lightOn.\n";

static casp_program* parse(const char* text) {
  casp_program* p = NULL;
  EXPECT(casp_program_parse(text, strlen(text), &p) == CASP_OK);
  return p;
}

static void light_switch(void) {
  casp_program* p = parse(kLightSwitch);
  EXPECT(casp_program_atom_count(p) == 4);
  const casp_schema schemas[] = {CASP_BLACK_BOX, CASP_GREY_BOX, CASP_CLEAR_BOX};
  for (int i = 0; i < 3; ++i) {
    casp_options* o = casp_options_new();
    EXPECT(casp_options_set_schema(o, schemas[i]) == CASP_OK);
    casp_result* r = NULL;
    EXPECT(casp_solve(p, o, &r) == CASP_OK);
    EXPECT(casp_result_outcome(r) == CASP_SAT);
    EXPECT(casp_result_count(r) == 1);
    uint64_t inst = 0, cand = 0;
    EXPECT(casp_result_stat(r, "base_instantiations", &inst) == CASP_OK);
    EXPECT(casp_result_stat(r, "candidates", &cand) == CASP_OK);
    if (schemas[i] == CASP_BLACK_BOX) EXPECT(inst == cand);
    else EXPECT(inst == 1);
    EXPECT(casp_result_stat(r, "no_such_counter", &inst) == CASP_ERR_INVALID_ARGUMENT);
    char* text = NULL;
    EXPECT(casp_result_to_text(r, &text) == CASP_OK);
    EXPECT(strstr(text, "atoms: lightOn switch") != NULL);
    casp_string_free(text);
    casp_result_free(r);

    EXPECT(casp_options_set_enumerate_all(o, 1) == CASP_OK);
    EXPECT(casp_solve(p, o, &r) == CASP_OK);
    EXPECT(casp_result_count(r) == 1);
    casp_result_free(r);
    casp_options_free(o);
  }
  char* printed = NULL;
  EXPECT(casp_program_print(p, &printed) == CASP_OK);
  casp_program* again = parse(printed);
  EXPECT(casp_program_atom_count(again) == 4);
  casp_program_free(again);
  casp_string_free(printed);
  casp_program_free(p);
}

static void errors_and_outcomes(void) {
  casp_program* p = NULL;
  const char* bad = "a :- X #< 12.";
  EXPECT(casp_program_parse(bad, strlen(bad), &p) == CASP_ERR_INVALID_PROGRAM);
  EXPECT(p == NULL);
  EXPECT(strstr(casp_last_error(), "undeclared") != NULL);
  const char* syntax = "a :- b";
  EXPECT(casp_program_parse(syntax, strlen(syntax), &p) == CASP_ERR_SYNTAX);
  EXPECT(casp_solve(NULL, NULL, NULL) == CASP_ERR_INVALID_ARGUMENT);

  p = parse("#false :- not a.");
  casp_options* o = casp_options_new();
  casp_result* r = NULL;
  EXPECT(casp_solve(p, o, &r) == CASP_OK);
  EXPECT(casp_result_outcome(r) == CASP_UNSAT);
  char* json = NULL;
  EXPECT(casp_result_to_json(r, &json) == CASP_OK);
  EXPECT(strcmp(json, "{}\n") == 0);
  casp_string_free(json);
  casp_result_free(r);
  casp_program_free(p);

  p = parse("{a}.");
  EXPECT(casp_options_set_timeout_s(o, 0) == CASP_OK);
  EXPECT(casp_solve(p, o, &r) == CASP_OK);
  EXPECT(casp_result_outcome(r) == CASP_TIMEOUT);
  casp_result_free(r);
  casp_program_free(p);
  casp_options_free(o);
}

static void pipeline(void) {
  char* inst = NULL;
  EXPECT(casp_generate("is", 4, 0, 2, &inst) == CASP_OK);
  char* text = NULL;
  EXPECT(casp_encode(inst, "true-casp", &text) == CASP_OK);
  casp_program* p = parse(text);
  casp_options* o = casp_options_new();
  casp_result* r = NULL;
  EXPECT(casp_solve(p, o, &r) == CASP_OK);
  EXPECT(casp_result_outcome(r) == CASP_SAT);
  char* sol = NULL;
  EXPECT(casp_result_to_json(r, &sol) == CASP_OK);
  int passed = 0;
  char* msg = NULL;
  EXPECT(casp_verify(inst, sol, &passed, &msg) == CASP_OK);
  EXPECT(passed == 1);
  casp_string_free(msg);
  casp_string_free(sol);
  casp_result_free(r);
  casp_options_free(o);
  casp_program_free(p);
  casp_string_free(text);
  casp_string_free(inst);

  char* rf = NULL;
  EXPECT(casp_generate("rf", 3, 1, 1, &rf) == CASP_OK);
  EXPECT(casp_encode(rf, "pure-csp", &text) == CASP_ERR_UNSUPPORTED);
  casp_string_free(rf);
  EXPECT(casp_generate("wseq", 1, 0, 1, &inst) == CASP_ERR_INVALID_ARGUMENT);

  char* csv = NULL;
  char* totals = NULL;
  int ok = 0;
  EXPECT(casp_bench("{}", &csv, &totals, &ok) == CASP_OK);
  EXPECT(ok == 1);
  EXPECT(strncmp(csv, "domain,encoding,instance,schema,blocking,result,wall_ms,", 56) == 0);
  casp_string_free(csv);
  casp_string_free(totals);
}

int main(void) {
  light_switch();
  errors_and_outcomes();
  pipeline();
  if (failures) {
    fprintf(stderr, "%d check(s) failed\n", failures);
    return 1;
  }
  printf("capi: all checks passed\n");
  return 0;
}
