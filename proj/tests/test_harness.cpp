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

#include <doctest.h>

#include <sstream>

#include "casp/error.hpp"
#include "casp/harness.hpp"
#include "casp/parser.hpp"

using namespace casp;

namespace {

std::vector<std::vector<std::string>> csv_rows(const std::string& csv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      f.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(f));
  }
  return rows;
}

/// The CSV with the wall_ms column blanked.
std::string without_wall(const std::string& csv) {
  std::string out;
  for (auto row : csv_rows(csv)) {
    row[6] = "";
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
    out += "\n";
  }
  return out;
}

constexpr const char* kSmall = R"({
  "domains": ["wseq", "is", "rf"],
  "sizes": {"wseq": [4], "is": [3], "rf": [[3, 2]]},
  "seeds": [1, 2],
  "encodings": ["pure-asp", "true-casp", "pure-csp"],
  "schemas": ["black", "grey", "clear"],
  "blocking": "theory",
  "minimize_core": {"wseq": true},
  "timeout_s": 60
})";

}  // namespace

TEST_CASE("empty matrix gives the header only") {
  const auto r = run_bench(bench_config_from_json("{}"));
  CHECK(r.records.empty());
  CHECK(r.ok());
  CHECK(bench_csv(r) == std::string(kCsvHeader) + "\n");
}

TEST_CASE("config parsing") {
  const auto c = bench_config_from_json(kSmall);
  CHECK(c.domains.size() == 3);
  CHECK(c.rf_sizes == std::vector<std::pair<int, int>>{{3, 2}});
  CHECK(c.minimize_core == std::array<bool, 3>{true, false, false});
  CHECK(bench_config_from_json(R"({"minimize_core": true})").minimize_core == std::array<bool, 3>{true, true, true});
  CHECK(c.blocking == BlockingMode::theory_only);
  CHECK_THROWS_AS(bench_config_from_json(R"({"domains": ["chess"]})"), Error);
  CHECK_THROWS_AS(bench_config_from_json(R"({"schemas": ["white"]})"), Error);
  CHECK_THROWS_AS(bench_config_from_json(R"({"minimize_core": {"go": true}})"), Error);
  CHECK_THROWS_AS(bench_config_from_json("not json"), Error);
}

TEST_CASE("small matrix: shape, order, audits and determinism") {
  auto c = bench_config_from_json(kSmall);
  const auto r = run_bench(c);
  // wseq and is: 2 seeds x 3 encodings x 3 schemas; rf has two encodings.
  CHECK(r.records.size() == 18 + 18 + 12);
  CHECK(r.ok());
  const std::string csv = bench_csv(r);
  const auto rows = csv_rows(csv);
  REQUIRE(rows.size() == r.records.size() + 1);
  CHECK(csv.substr(0, csv.find('\n')) == kCsvHeader);
  for (const auto& row : rows) CHECK(row.size() == 14);
  for (std::size_t i = 2; i < rows.size(); ++i) {
    const auto key = [](const auto& f) { return std::tie(f[0], f[2], f[1], f[3]); };
    CHECK(key(rows[i - 1]) <= key(rows[i]));
  }
  for (const auto& rec : r.records) {
    CHECK(rec.result == "sat");
    CHECK(rec.verified == true);
    CHECK(rec.blocking == (rec.schema == Schema::clear_box ? "none" : "theory"));
    const auto& s = rec.stats;
    if (rec.schema == Schema::black_box) CHECK(s.base_instantiations == s.candidates);
    else CHECK(s.base_instantiations == 1);
    if (rec.schema == Schema::clear_box) CHECK(s.final_rejections == 0);
  }
  c.workers = 3;
  CHECK(without_wall(bench_csv(run_bench(c))) == without_wall(csv));
  CHECK(without_wall(bench_csv(run_bench(bench_config_from_json(kSmall)))) == without_wall(csv));

  const std::string totals = bench_totals(r);
  CHECK(totals.find("schema disagreements: 0") != std::string::npos);
}

TEST_CASE("bad instances become error rows") {
  const auto r = run_bench(bench_config_from_json(
      R"({"domains": ["wseq"], "sizes": {"wseq": [1, 4]}, "seeds": [1], "encodings": ["pure-asp"], "schemas": ["clear"]})"));
  REQUIRE(r.records.size() == 2);
  CHECK(r.records[0].result == "error");
  CHECK(r.records[1].result == "sat");
  CHECK(csv_rows(bench_csv(r))[1].size() == 14);
}

TEST_CASE("single solve reports") {
  const Program p = parse_program("#var X 0..24.\nam :- X #< 12.\nlightOn :- switch, not am.\n{switch}.\n#false :- not lightOn.\n");
  SolveOptions o;
  const auto r = solve(p, o);
  const std::string text = format_solve_text(p, r);
  CHECK(text.rfind("SAT", 0) == 0);
  CHECK(text.find("atoms: lightOn switch") != std::string::npos);
  CHECK(text.find("not X #< 12") != std::string::npos);
  CHECK(text.find("witness: X=12") != std::string::npos);
  CHECK(format_solution_json(p, r).find("\"lightOn\": 1") != std::string::npos);
  CHECK(exit_code(Outcome::sat) == 10);
  CHECK(exit_code(Outcome::unsat) == 20);
  CHECK(exit_code(Outcome::timeout) == 30);
  const auto all = enumerate_all(p, o);
  CHECK(format_enumeration_text(p, all).find("answer sets: 1") != std::string::npos);
}
