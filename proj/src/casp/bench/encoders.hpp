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

#ifndef CASP_BENCH_ENCODERS_HPP
#define CASP_BENCH_ENCODERS_HPP

#include <string>

#include "casp/bench/instances.hpp"
#include "casp/program.hpp"

namespace casp::bench {

/// Ground program text for an instance. Throws casp::Error(unsupported)
/// for rf with pure-csp.
std::string encode_wseq_text(const WseqInstance& i, Encoding e);
std::string encode_is_text(const IsInstance& i, Encoding e);
std::string encode_rf_text(const RfInstance& i, Encoding e);
std::string encode_text(const Instance& i, Encoding e);

Program encode_wseq(const WseqInstance& i, Encoding e);
Program encode_is(const IsInstance& i, Encoding e);
Program encode_rf(const RfInstance& i, Encoding e);
Program encode(const Instance& i, Encoding e);

}  // namespace casp::bench

#endif  // CASP_BENCH_ENCODERS_HPP
