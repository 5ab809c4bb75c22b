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

#ifndef CASP_BENCH_DECODE_HPP
#define CASP_BENCH_DECODE_HPP

#include "casp/bench/instances.hpp"
#include "casp/linear.hpp"
#include "casp/program.hpp"

namespace casp::bench {

/// Every declared variable with its witness value plus every true regular
/// atom with value 1.
Solution raw_solution(const Program& p, const CandidateModel& m, const Evaluation& witness);

/// Rewrites a raw solution of any encoding of `domain` into the domain
/// keys read by the verifiers:
///   wseq: leaf[p], color[p]          is: start[job], instance[job]
///   rf:   the move list
/// Keys that are already in domain form are kept.
Solution decode(DomainKind domain, const Solution& raw);

}  // namespace casp::bench

#endif  // CASP_BENCH_DECODE_HPP
