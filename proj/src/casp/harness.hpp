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

#ifndef CASP_HARNESS_HPP
#define CASP_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "casp/bench/instances.hpp"
#include "casp/integration.hpp"

namespace casp {

/// Experiment matrix. Sizes per domain: wseq and is take one number (leaves,
/// jobs), rf takes [segments, moves].
struct BenchConfig {
  std::vector<bench::DomainKind> domains;
  std::vector<int> wseq_sizes;
  std::vector<int> is_sizes;
  std::vector<std::pair<int, int>> rf_sizes;
  std::vector<std::uint64_t> seeds;
  std::vector<bench::Encoding> encodings;
  std::vector<Schema> schemas;
  BlockingMode blocking = BlockingMode::theory_only;
  /// Core minimization per domain, indexed by DomainKind. In JSON either a
  /// bool for all domains or an object such as {"wseq": true}.
  std::array<bool, 3> minimize_core{};
  double timeout_s = 60;
  unsigned workers = 1;
};

/// Parses the JSON config; missing axes are empty, so `{}` is an empty
/// matrix.
BenchConfig bench_config_from_json(std::string_view text);

struct RunRecord {
  bench::DomainKind domain{};
  bench::Encoding encoding{};
  std::string instance;
  Schema schema{};
  /// "model" or "theory" for the lazy schemas, "none" for clear-box.
  std::string blocking;
  /// sat, unsat, timeout or error
  std::string result;
  RunStats stats;
  std::optional<bool> verified;
  std::string message;
};

struct BenchReport {
  std::vector<RunRecord> records;  // sorted by (domain, instance, encoding, schema)
  std::vector<std::string> schema_disagreements;
  std::vector<std::string> encoding_disagreements;
  std::vector<std::string> verifier_failures;

  bool ok() const {
    return schema_disagreements.empty() && encoding_disagreements.empty() && verifier_failures.empty();
  }
};

BenchReport run_bench(const BenchConfig& config);

inline constexpr std::string_view kCsvHeader =
    "domain,encoding,instance,schema,blocking,result,wall_ms,decisions,conflicts,candidates,"
    "theory_calls,theory_conflicts,base_instantiations,learned_count";

std::string bench_csv(const BenchReport& r);
/// Per (schema, encoding) totals followed by the audit summary.
std::string bench_totals(const BenchReport& r);

/// Human-readable report for a single solve: outcome line, true atoms,
/// constraint literals, witness and counters.
std::string format_solve_text(const Program& p, const SolveResult& r);
std::string format_enumeration_text(const Program& p, const EnumerationResult& r);
/// Solution file (see bench::Solution) for a SAT result; `{}` otherwise.
std::string format_solution_json(const Program& p, const SolveResult& r);

/// 10 sat, 20 unsat, 30 timeout.
int exit_code(Outcome o);

}  // namespace casp

#endif  // CASP_HARNESS_HPP
