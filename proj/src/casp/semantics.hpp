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

#ifndef CASP_SEMANTICS_HPP
#define CASP_SEMANTICS_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "casp/program.hpp"

namespace casp {

/// Decides whether a set of constraint literals has a solution.
using TheoryCheck = std::function<bool(std::span<const ConstraintLit>)>;

/// Theory check backed by the finite-domain solver over `p`'s gamma table.
TheoryCheck default_theory_check(const Program& p);

/// Least model of the reduct of `p` with respect to the true atoms of `m`.
/// Falsum rules are ignored here; see `is_stable`.
std::vector<bool> reduct_least_model(const Program& p, const std::vector<bool>& m);

/// Condition (a1) for a program that is already choice-extended: the true
/// atoms equal the reduct's least model and no falsum rule of the reduct fires.
bool is_stable(const Program& pic, const std::vector<bool>& m);

/// (a1) M+ is an answer set of Pi^C and (a2) gamma(M^C) has a solution.
/// Throws Error(precondition) if `m` does not cover every atom of `p`.
bool is_answer_set(const Program& p, const CandidateModel& m, const TheoryCheck& theory);

inline constexpr std::size_t kOracleAtomLimit = 20;

/// Exhaustive enumeration of complete literal sets, returned in
/// lexicographic order of the assignment vector (false < true, atom 0 first).
std::vector<CandidateModel> enumerate_answer_sets_oracle(const Program& p, const TheoryCheck& theory);

}  // namespace casp

#endif  // CASP_SEMANTICS_HPP
