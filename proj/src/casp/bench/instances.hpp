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

#ifndef CASP_BENCH_INSTANCES_HPP
#define CASP_BENCH_INSTANCES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace casp::bench {

enum class DomainKind { wseq, is, rf };
enum class Encoding { pure_asp, true_casp, pure_csp };

std::string_view to_string(DomainKind d);
std::string_view to_string(Encoding e);
std::optional<DomainKind> parse_domain(std::string_view s);
/// Accepts both `pure-asp` and `pure_asp` spellings.
std::optional<Encoding> parse_encoding(std::string_view s);
bool supports(DomainKind d, Encoding e);

struct Leaf {
  std::int64_t weight = 0;
  std::int64_t cardinality = 0;
};

struct WseqInstance {
  std::vector<Leaf> leaves;
  std::int64_t max_cost = 0;
  int num_colors = 3;
};

struct Device {
  std::string id;
  int instance_count = 1;
};

struct Job {
  std::string id;
  std::string device;
  std::int64_t len = 1;
  std::int64_t deadline = 0;
  std::int64_t importance = 1;
};

struct OfflineInstance {
  std::string device;
  int instance = 0;
};

struct IsInstance {
  std::vector<Device> devices;
  std::vector<Job> jobs;
  std::vector<std::pair<std::string, std::string>> precedences;
  std::vector<OfflineInstance> offline;
  std::int64_t max_penalty = 0;
  std::int64_t horizon = 0;

  const Device& device_of(const Job& j) const;
  bool is_offline(const std::string& device, int instance) const;
};

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

struct RfInstance {
  int n_segments = 0;
  int t_moves = 0;
  std::vector<Point> goal;
};

using Instance = std::variant<WseqInstance, IsInstance, RfInstance>;

DomainKind domain_of(const Instance& i);

/// Throws casp::Error(invalid_argument) describing the first violated
/// instance invariant.
void validate(const WseqInstance& i);
void validate(const IsInstance& i);
void validate(const RfInstance& i);
void validate(const Instance& i);

/// Pretty-printed JSON with a stable key order.
std::string to_json(const Instance& i);
/// Parses and validates; the "domain" tag selects the type.
Instance instance_from_json(std::string_view text);

/// One pivot: at `step` (1-based), segment `segment` (0-based) turns about
/// its start point; dir = +1 maps (x, y) to (cx + (y - cy), cy - (x - cx)),
/// dir = -1 to (cx - (y - cy), cy + (x - cx)).
struct Move {
  int step = 0;
  int segment = 0;
  int dir = 1;
  friend bool operator==(const Move&, const Move&) = default;
};

/// Solution file contents.
struct Solution {
  std::map<std::string, std::int64_t> assignments;
  std::vector<Move> moves;
};

std::string to_json(const Solution& s);
Solution solution_from_json(std::string_view text);

}  // namespace casp::bench

#endif  // CASP_BENCH_INSTANCES_HPP
