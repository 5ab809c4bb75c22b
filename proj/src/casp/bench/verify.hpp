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

#ifndef CASP_BENCH_VERIFY_HPP
#define CASP_BENCH_VERIFY_HPP

#include <string>

#include "casp/bench/instances.hpp"

namespace casp::bench {

struct Verdict {
  bool ok = false;
  std::string message;
};

/// Checks a decoded solution against the instance alone. These routines
/// deliberately reimplement the domain rules instead of reusing encoder or
/// generator code.
Verdict verify_wseq(const WseqInstance& i, const Solution& s);
Verdict verify_is(const IsInstance& i, const Solution& s);
Verdict verify_rf(const RfInstance& i, const Solution& s);
Verdict verify(const Instance& i, const Solution& s);

}  // namespace casp::bench

#endif  // CASP_BENCH_VERIFY_HPP
