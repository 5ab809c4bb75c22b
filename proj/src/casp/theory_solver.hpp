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

#ifndef CASP_THEORY_SOLVER_HPP
#define CASP_THEORY_SOLVER_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "casp/linear.hpp"
#include "casp/program.hpp"

namespace casp {

using Clock = std::chrono::steady_clock;

struct TheoryVerdict {
  /// `unknown` only when the limits ran out before a decision.
  enum class Status { sat, unsat, unknown };

  Status status = Status::unknown;
  /// Present on sat; one value per declared variable.
  std::optional<Evaluation> witness;
  /// On unsat, indices into the input whose conjunction is unsatisfiable.
  std::vector<std::size_t> core;
};

struct TheoryLimits {
  std::optional<Clock::time_point> deadline;
};

/// Inclusive integer interval.
struct Domain {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  friend bool operator==(const Domain&, const Domain&) = default;
};

/// gamma: the positive literal maps to the stored constraint, the negative
/// one to its complement relation. Throws Error for an unknown atom.
ConstraintExpr gamma(ConstraintLit lit, const GammaTable& table);

/// Bounds-consistency pruning of `domains` against one constraint, run to a
/// local fixpoint. Returns false when some domain becomes empty.
bool prune_bounds(const ConstraintExpr& c, std::vector<Domain>& domains);

/// Complete decision procedure: bounds propagation plus depth-first search
/// (smallest domain first, lowest value first). Sat verdicts carry a
/// witness that has been re-checked against every constraint; unsat
/// verdicts report the whole input as core.
TheoryVerdict solve_constraints(std::span<const ConstraintExpr> cs, std::span<const VarDecl> decls,
                                const TheoryLimits& limits = {});

/// solve_constraints over gamma(lits); core indices refer to `lits`.
TheoryVerdict check_literals(std::span<const ConstraintLit> lits, const GammaTable& table,
                             std::span<const VarDecl> decls, const TheoryLimits& limits = {});

/// Deletion-based core minimization. The result is unsatisfiable and every
/// proper subset obtained by dropping one element is satisfiable.
/// Throws Error(precondition) if `lits` is satisfiable.
std::vector<ConstraintLit> minimize_core(std::span<const ConstraintLit> lits, const GammaTable& table,
                                         std::span<const VarDecl> decls, const TheoryLimits& limits = {});

}  // namespace casp

#endif  // CASP_THEORY_SOLVER_HPP
