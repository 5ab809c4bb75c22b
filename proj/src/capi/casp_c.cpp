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

#include "casp/casp.h"

#include <cstring>
#include <optional>
#include <string>
#include <variant>

#include "casp/bench/decode.hpp"
#include "casp/bench/encoders.hpp"
#include "casp/bench/generators.hpp"
#include "casp/bench/verify.hpp"
#include "casp/error.hpp"
#include "casp/harness.hpp"
#include "casp/integration.hpp"
#include "casp/parser.hpp"

struct casp_program {
  casp::Program program;
};

struct casp_options {
  casp::SolveOptions solve;
  bool all = false;
};

struct casp_result {
  casp::Program program;
  std::variant<casp::SolveResult, casp::EnumerationResult> value;
};

namespace {

thread_local std::string g_last_error;

casp_status fail(casp_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

casp_status from_error(const casp::Error& e) {
  switch (e.kind()) {
    case casp::ErrorKind::syntax:
      return fail(CASP_ERR_SYNTAX, e.what());
    case casp::ErrorKind::undeclared_variable:
    case casp::ErrorKind::constraint_in_head:
    case casp::ErrorKind::duplicate_declaration:
    case casp::ErrorKind::invalid_program:
      return fail(CASP_ERR_INVALID_PROGRAM, e.what());
    case casp::ErrorKind::unsupported:
      return fail(CASP_ERR_UNSUPPORTED, e.what());
    default:
      return fail(CASP_ERR_INVALID_ARGUMENT, e.what());
  }
}

/// Runs `f`, mapping exceptions to status codes.
template <class F>
casp_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return CASP_OK;
  } catch (const casp::Error& e) {
    return from_error(e);
  } catch (const std::exception& e) {
    return fail(CASP_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

#define CASP_REQUIRE(cond, what) \
  if (!(cond)) return fail(CASP_ERR_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

const char* casp_last_error(void) { return g_last_error.c_str(); }

void casp_string_free(char* s) { std::free(s); }

casp_status casp_program_parse(const char* text, size_t len, casp_program** out) {
  CASP_REQUIRE(out, "null output pointer");
  CASP_REQUIRE(text || len == 0, "null program text");
  *out = nullptr;
  return guard([&] { *out = new casp_program{casp::parse_program(std::string_view(text ? text : "", len))}; });
}

void casp_program_free(casp_program* p) { delete p; }

casp_status casp_program_print(const casp_program* p, char** out) {
  CASP_REQUIRE(p && out, "null argument");
  return guard([&] { *out = dup(casp::print_program(p->program)); });
}

size_t casp_program_atom_count(const casp_program* p) { return p ? p->program.atom_count() : 0; }

casp_options* casp_options_new(void) { return new (std::nothrow) casp_options{}; }

void casp_options_free(casp_options* o) { delete o; }

casp_status casp_options_set_schema(casp_options* o, casp_schema s) {
  CASP_REQUIRE(o, "null options");
  switch (s) {
    case CASP_BLACK_BOX: o->solve.schema = casp::Schema::black_box; return CASP_OK;
    case CASP_GREY_BOX: o->solve.schema = casp::Schema::grey_box; return CASP_OK;
    case CASP_CLEAR_BOX: o->solve.schema = casp::Schema::clear_box; return CASP_OK;
  }
  return fail(CASP_ERR_INVALID_ARGUMENT, "unknown schema");
}

casp_status casp_options_set_blocking(casp_options* o, casp_blocking b) {
  CASP_REQUIRE(o, "null options");
  switch (b) {
    case CASP_BLOCK_MODEL: o->solve.blocking = casp::BlockingMode::full_model; return CASP_OK;
    case CASP_BLOCK_THEORY: o->solve.blocking = casp::BlockingMode::theory_only; return CASP_OK;
  }
  return fail(CASP_ERR_INVALID_ARGUMENT, "unknown blocking mode");
}

casp_status casp_options_set_minimize_core(casp_options* o, int on) {
  CASP_REQUIRE(o, "null options");
  o->solve.minimize_core = on != 0;
  return CASP_OK;
}

casp_status casp_options_set_timeout_s(casp_options* o, double seconds) {
  CASP_REQUIRE(o, "null options");
  if (seconds < 0) o->solve.timeout.reset();
  else o->solve.timeout = std::chrono::duration<double>(seconds);
  return CASP_OK;
}

casp_status casp_options_set_seed(casp_options* o, uint64_t seed) {
  CASP_REQUIRE(o, "null options");
  o->solve.seed = seed;
  return CASP_OK;
}

casp_status casp_options_set_enumerate_all(casp_options* o, int on) {
  CASP_REQUIRE(o, "null options");
  o->all = on != 0;
  return CASP_OK;
}

casp_status casp_solve(const casp_program* p, const casp_options* o, casp_result** out) {
  CASP_REQUIRE(p && out, "null argument");
  *out = nullptr;
  const casp_options defaults{};
  const casp_options& opt = o ? *o : defaults;
  return guard([&] {
    auto* r = new casp_result{};
    r->program = p->program;
    try {
      if (opt.all) r->value = casp::enumerate_all(p->program, opt.solve);
      else r->value = casp::solve(p->program, opt.solve);
    } catch (...) {
      delete r;
      throw;
    }
    *out = r;
  });
}

void casp_result_free(casp_result* r) { delete r; }

casp_outcome casp_result_outcome(const casp_result* r) {
  if (!r) return CASP_TIMEOUT;
  if (const auto* s = std::get_if<casp::SolveResult>(&r->value)) {
    return static_cast<casp_outcome>(casp::exit_code(s->outcome));
  }
  const auto& e = std::get<casp::EnumerationResult>(r->value);
  if (!e.complete) return CASP_TIMEOUT;
  return e.solutions.empty() ? CASP_UNSAT : CASP_SAT;
}

size_t casp_result_count(const casp_result* r) {
  if (!r) return 0;
  if (const auto* s = std::get_if<casp::SolveResult>(&r->value)) return s->solution ? 1 : 0;
  return std::get<casp::EnumerationResult>(r->value).solutions.size();
}

casp_status casp_result_stat(const casp_result* r, const char* name, uint64_t* out) {
  CASP_REQUIRE(r && name && out, "null argument");
  const casp::RunStats& st = std::visit([](const auto& v) -> const casp::RunStats& { return v.stats; }, r->value);
  for (const auto& [k, v] : st.to_map()) {
    if (k == name) {
      *out = v;
      return CASP_OK;
    }
  }
  return fail(CASP_ERR_INVALID_ARGUMENT, std::string("unknown counter '") + name + "'");
}

casp_status casp_result_to_text(const casp_result* r, char** out) {
  CASP_REQUIRE(r && out, "null argument");
  return guard([&] {
    if (const auto* s = std::get_if<casp::SolveResult>(&r->value)) *out = dup(casp::format_solve_text(r->program, *s));
    else *out = dup(casp::format_enumeration_text(r->program, std::get<casp::EnumerationResult>(r->value)));
  });
}

casp_status casp_result_to_json(const casp_result* r, char** out) {
  CASP_REQUIRE(r && out, "null argument");
  return guard([&] {
    casp::SolveResult first;
    if (const auto* s = std::get_if<casp::SolveResult>(&r->value)) {
      first = *s;
    } else {
      const auto& e = std::get<casp::EnumerationResult>(r->value);
      if (!e.solutions.empty()) {
        first.outcome = casp::Outcome::sat;
        first.solution = e.solutions.front();
      }
    }
    *out = dup(casp::format_solution_json(r->program, first));
  });
}

casp_status casp_generate(const char* domain, int size, int moves, uint64_t seed, char** json_out) {
  CASP_REQUIRE(domain && json_out, "null argument");
  return guard([&] {
    const auto d = casp::bench::parse_domain(domain);
    if (!d) throw casp::Error(casp::ErrorKind::invalid_argument, std::string("unknown domain '") + domain + "'");
    casp::bench::Instance inst;
    switch (*d) {
      case casp::bench::DomainKind::wseq: inst = casp::bench::gen_wseq(size, seed); break;
      case casp::bench::DomainKind::is: inst = casp::bench::gen_is(size, seed); break;
      case casp::bench::DomainKind::rf: inst = casp::bench::gen_rf(size, moves, seed); break;
    }
    *json_out = dup(casp::bench::to_json(inst));
  });
}

casp_status casp_encode(const char* instance_json, const char* encoding, char** program_out) {
  CASP_REQUIRE(instance_json && encoding && program_out, "null argument");
  return guard([&] {
    const auto e = casp::bench::parse_encoding(encoding);
    if (!e) throw casp::Error(casp::ErrorKind::invalid_argument, std::string("unknown encoding '") + encoding + "'");
    *program_out = dup(casp::bench::encode_text(casp::bench::instance_from_json(instance_json), *e));
  });
}

casp_status casp_verify(const char* instance_json, const char* solution_json, int* passed, char** message) {
  CASP_REQUIRE(instance_json && solution_json && passed, "null argument");
  return guard([&] {
    const auto inst = casp::bench::instance_from_json(instance_json);
    const auto sol = casp::bench::decode(casp::bench::domain_of(inst), casp::bench::solution_from_json(solution_json));
    const auto v = casp::bench::verify(inst, sol);
    *passed = v.ok ? 1 : 0;
    if (message) *message = dup(v.message);
  });
}

casp_status casp_bench(const char* config_json, char** csv_out, char** totals_out, int* agreement_ok) {
  CASP_REQUIRE(config_json, "null config");
  return guard([&] {
    const auto report = casp::run_bench(casp::bench_config_from_json(config_json));
    if (csv_out) *csv_out = dup(casp::bench_csv(report));
    if (totals_out) *totals_out = dup(casp::bench_totals(report));
    if (agreement_ok) *agreement_ok = report.ok() ? 1 : 0;
  });
}

}  // extern "C"
