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

#ifndef CASP_BASE_SOLVER_HPP
#define CASP_BASE_SOLVER_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "casp/program.hpp"
#include "casp/theory_solver.hpp"

namespace casp {

struct BaseStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t restarts = 0;
  std::uint64_t learned_count = 0;
  std::uint64_t callback_calls = 0;
  std::uint64_t loop_formulas = 0;

  std::vector<std::pair<std::string, std::uint64_t>> to_map() const;
  BaseStats& operator+=(const BaseStats& o);
};

struct SolveBudget {
  std::optional<Clock::time_point> deadline;
  /// Conflicts allowed per solve() call.
  std::optional<std::uint64_t> conflict_limit;
};

enum class BaseResult { sat, unsat, unknown };

/// What an online check returns after the constraint literals grew.
struct CallbackResult {
  enum class Kind { ok, conflict, abort };
  Kind kind = Kind::ok;
  /// For conflicts: currently assigned constraint literals whose
  /// conjunction is theory-inconsistent.
  std::vector<ConstraintLit> reason;

  static CallbackResult ok() { return {}; }
  static CallbackResult conflict(std::vector<ConstraintLit> r) { return {Kind::conflict, std::move(r)}; }
  static CallbackResult abort() { return {Kind::abort, {}}; }
};

struct OnlineCallbacks {
  /// (newly fixed constraint literals, all assigned constraint literals)
  std::function<CallbackResult(std::span<const ConstraintLit>, std::span<const ConstraintLit>)>
      on_constraint_literals_extended;
};

struct BaseSolverOptions {
  /// 0 keeps the default activity order; other values perturb initial
  /// activities deterministically.
  std::uint64_t seed = 0;
  std::uint64_t restart_unit = 64;
  /// Budget checks happen every this many conflicts or decisions.
  std::uint64_t check_interval = 1024;
};

/// CDCL search over the Clark completion of a choice-extended program.
/// Total assignments are only reported after a stability check; unstable
/// ones are excluded by loop formulas and search resumes.
///
/// Single-threaded; distinct instances are independent.
class BaseSolver {
 public:
  /// Throws Error(invalid_argument) unless every constraint atom of `pic`
  /// has its choice rule.
  explicit BaseSolver(const Program& pic, BaseSolverOptions options = {});
  ~BaseSolver();
  BaseSolver(BaseSolver&&) noexcept;
  BaseSolver& operator=(BaseSolver&&) noexcept;
  BaseSolver(const BaseSolver&) = delete;
  BaseSolver& operator=(const BaseSolver&) = delete;

  BaseResult solve(const SolveBudget& budget = {});

  /// Valid after solve() returned sat. Covers program atoms only.
  const CandidateModel& model() const;

  /// Adds `:- body` rules as clauses. Learned clauses and heuristic state
  /// are kept. Throws Error(invalid_argument) for a non-falsum head.
  void add_falsum_rules(std::span<const Rule> rules);

  void set_callbacks(OnlineCallbacks callbacks);

  const BaseStats& stats() const;

  /// Literals of the current trail as signed 1-based variable numbers.
  std::vector<std::int64_t> trail() const;

  std::size_t learned_clause_count() const;
  /// True if every learned clause holds under the assignment induced by `m`
  /// (auxiliary body variables take the value of their body).
  bool learned_clauses_hold(const CandidateModel& m) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace casp

#endif  // CASP_BASE_SOLVER_HPP
