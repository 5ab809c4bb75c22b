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

#ifndef CASP_INTEGRATION_HPP
#define CASP_INTEGRATION_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "casp/base_solver.hpp"
#include "casp/program.hpp"
#include "casp/theory_solver.hpp"

namespace casp {

/// How the base and theory solvers are coupled.
///  - black_box: a fresh base solver per candidate; rejected candidates are
///    blocked by new falsum rules.
///  - grey_box: the same loop through one incremental base solver.
///  - clear_box: one base solver that consults the theory solver whenever
///    constraint literals get fixed, backjumping on theory conflicts.
enum class Schema { black_box, grey_box, clear_box };

/// What a blocking rule excludes: the whole candidate, or only its
/// constraint literals.
enum class BlockingMode { full_model, theory_only };

std::string_view to_string(Schema s);
std::string_view to_string(BlockingMode m);
std::optional<Schema> parse_schema(std::string_view s);
std::optional<BlockingMode> parse_blocking(std::string_view s);

struct RunStats {
  std::uint64_t candidates = 0;
  std::uint64_t theory_calls = 0;
  std::uint64_t theory_conflicts = 0;
  std::uint64_t base_instantiations = 0;
  /// Total models the clear-box final confirmation rejected; stays zero.
  std::uint64_t final_rejections = 0;
  BaseStats base;
  double wall_ms = 0;
  /// Cumulative learned-clause count after each base solve call.
  std::vector<std::uint64_t> learned_trace;

  std::vector<std::pair<std::string, std::uint64_t>> to_map() const;
};

struct CaspSolution {
  CandidateModel model;
  Evaluation witness;
};

enum class Outcome { sat, unsat, timeout };
std::string_view to_string(Outcome o);

struct SolveResult {
  Outcome outcome = Outcome::unsat;
  std::optional<CaspSolution> solution;
  RunStats stats;
};

struct EnumerationResult {
  /// False when the budget ran out before the last answer set was excluded.
  bool complete = true;
  std::vector<CaspSolution> solutions;
  RunStats stats;
};

struct SolveOptions {
  Schema schema = Schema::clear_box;
  BlockingMode blocking = BlockingMode::theory_only;
  /// Shrink theory conflict reasons (and theory-only blocking rules) to a
  /// minimal core.
  bool minimize_core = false;
  std::optional<std::chrono::duration<double>> timeout;
  std::uint64_t seed = 0;
};

SolveResult solve_black(const Program& p, const SolveOptions& options);
SolveResult solve_grey(const Program& p, const SolveOptions& options);
SolveResult solve_clear(const Program& p, const SolveOptions& options);
/// Dispatches on options.schema.
SolveResult solve(const Program& p, const SolveOptions& options);

/// Every answer set of `p`, in increasing model order. Blocking always
/// uses full_model so that each answer set is excluded individually.
EnumerationResult enumerate_all(const Program& p, const SolveOptions& options);

}  // namespace casp

#endif  // CASP_INTEGRATION_HPP
