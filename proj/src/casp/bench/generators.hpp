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

#ifndef CASP_BENCH_GENERATORS_HPP
#define CASP_BENCH_GENERATORS_HPP

#include <cstdint>
#include <random>

#include "casp/bench/instances.hpp"

namespace casp::bench {

/// Deterministic across standard libraries: draws from mt19937_64 and maps
/// them with a plain modulo instead of a distribution object.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

/// Cost of placing `cur` after `prev` with the given colour
/// (0 red, 1 green, 2 blue).
std::int64_t wseq_step_cost(const Leaf& cur, const Leaf& prev, int color);

/// Cheapest coloured sequence over all leaves (Held-Karp over subsets).
std::int64_t wseq_optimum(const std::vector<Leaf>& leaves);

/// 2 <= n <= 12.
WseqInstance gen_wseq(int n, std::uint64_t seed);
/// 1 <= jobs <= 10; the penalty bound is met by a greedy list schedule.
IsInstance gen_is(int jobs, std::uint64_t seed);
/// 1 <= n <= 8, 0 <= t <= 5; the goal is reached from the straight chain
/// by t random self-avoiding pivots.
RfInstance gen_rf(int n, int t, std::uint64_t seed);

/// The chain (0,0), (1,0), ..., (n,0).
std::vector<Point> rf_initial(int n);

}  // namespace casp::bench

#endif  // CASP_BENCH_GENERATORS_HPP
