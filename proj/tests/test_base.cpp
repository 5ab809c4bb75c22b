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

#include <random>

#include "casp/base_solver.hpp"
#include "casp/error.hpp"
#include "casp/integration.hpp"
#include "casp/parser.hpp"
#include "casp/semantics.hpp"
#include "oracles.hpp"

using namespace casp;

namespace {

constexpr const char* kLightSwitch = R"(#var X 0..24.
am :- X #< 12.
lightOn :- switch, not am.
{switch}.
#false :- not lightOn.
)";

Rule block(const CandidateModel& m) {
  Rule r;
  for (AtomId a = 0; a < m.size(); ++a) (m.value(a) ? r.pos : r.neg).push_back(a);
  return r;
}

/// Every model of the handle, blocking each one as it comes.
std::vector<std::vector<bool>> drain(BaseSolver& s) {
  std::vector<std::vector<bool>> out;
  while (s.solve() == BaseResult::sat) {
    out.push_back(s.model().values());
    const Rule r = block(s.model());
    s.add_falsum_rules(std::span(&r, 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Stable models of Pi^C with no theory filtering.
std::vector<std::vector<bool>> stable_models(const Program& pic) {
  std::vector<std::vector<bool>> out;
  for (const auto& m : enumerate_answer_sets_oracle(pic, [](std::span<const ConstraintLit>) { return true; })) {
    out.push_back(m.values());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("light switch candidate") {
  const Program p = parse_program(kLightSwitch);
  BaseSolver s(extend_with_choices(p));
  REQUIRE(s.solve() == BaseResult::sat);
  const auto& m = s.model();
  CHECK(m.value(*p.find_atom("switch")));
  CHECK(m.value(*p.find_atom("lightOn")));
  CHECK_FALSE(m.value(*p.find_atom("am")));
  CHECK_FALSE(m.value(*p.find_atom("X #< 12")));
  CHECK_THROWS_AS(BaseSolver{p}, Error);
}

TEST_CASE("small base programs") {
  BaseSolver empty(parse_program(""));
  REQUIRE(empty.solve() == BaseResult::sat);
  CHECK(empty.model().size() == 0);

  BaseSolver forced(parse_program("#false :- not a."));
  CHECK(forced.solve() == BaseResult::unsat);

  for (const char* text : {"a :- b. b :- a.", "a :- a."}) {
    BaseSolver s(parse_program(text));
    REQUIRE(s.solve() == BaseResult::sat);
    for (bool v : s.model().values()) CHECK_FALSE(v);
    BaseSolver all(parse_program(text));
    CHECK(drain(all) == std::vector<std::vector<bool>>{s.model().values()});
  }
}

TEST_CASE("positive loops are refuted by loop formulas") {
  const Program p = parse_program("{c}. a :- b. b :- a. a :- c. #false :- not a.");
  BaseSolver s(p);
  CHECK(drain(s) == stable_models(p));
  BaseSolver t(p);
  REQUIRE(t.solve() == BaseResult::sat);
  CHECK(t.model().value(*p.find_atom("c")));
}

TEST_CASE("blocking enumerates choice models") {
  BaseSolver s(parse_program("{a}. {b}."));
  CHECK(drain(s).size() == 4);
  CHECK(s.solve() == BaseResult::unsat);

  BaseSolver u(parse_program("{a}. {b}."));
  REQUIRE(u.solve() == BaseResult::sat);
  const auto first = u.model();
  u.add_falsum_rules({});
  REQUIRE(u.solve() == BaseResult::sat);
  CHECK(u.model() == first);
  Rule not_falsum{AtomId{0}, {}, {}, {}};
  CHECK_THROWS_AS(u.add_falsum_rules(std::span(&not_falsum, 1)), Error);
}

TEST_CASE("callbacks") {
  const Program pic = extend_with_choices(parse_program(kLightSwitch));
  BaseSolver plain(pic);
  BaseSolver quiet(pic);
  quiet.set_callbacks({[](auto, auto) { return CallbackResult::ok(); }});
  REQUIRE(plain.solve() == BaseResult::sat);
  REQUIRE(quiet.solve() == BaseResult::sat);
  CHECK(plain.model() == quiet.model());
  CHECK(quiet.stats().callback_calls >= 1);

  // Reject X #< 12 whenever it is assumed true.
  const Program free = extend_with_choices(parse_program("#var X 0..24.\n{am}.\nam :- X #< 12.\n"));
  const AtomId flt = *free.find_atom("X #< 12");
  BaseSolver picky(free);
  picky.set_callbacks({[&](auto, std::span<const ConstraintLit> all) {
    for (const auto& l : all) {
      if (l.atom == flt && l.positive) return CallbackResult::conflict({l});
    }
    return CallbackResult::ok();
  }});
  auto models = drain(picky);
  CHECK(models.size() == 2);
  for (const auto& m : models) CHECK_FALSE(m[flt]);
  CHECK(picky.stats().callback_calls >= 1);

  BaseSolver hostile(extend_with_choices(parse_program("#var X 0..3.\n#false :- not X #< 2.\n")));
  hostile.set_callbacks({[](auto, std::span<const ConstraintLit> all) {
    return all.empty() ? CallbackResult::ok()
                       : CallbackResult::conflict(std::vector<ConstraintLit>(all.begin(), all.end()));
  }});
  CHECK(hostile.solve() == BaseResult::unsat);

  BaseSolver broken(pic);
  broken.set_callbacks({[&](auto, std::span<const ConstraintLit> all) {
    std::vector<ConstraintLit> r(all.begin(), all.end());
    r.push_back({*pic.find_atom("am"), true});
    return CallbackResult::conflict(r);
  }});
  CHECK_THROWS(broken.solve());
}

TEST_CASE("random programs: models, learned clauses, determinism") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    const Program pic = extend_with_choices(parse_program(testing::random_program_text(rng, 8, 3, 5)));
    const auto expected = stable_models(pic);
    BaseSolver s(pic);
    CHECK(drain(s) == expected);
    // Clauses learned along the way may mention blocking rules, so check a
    // handle that only solved once.
    BaseSolver once(pic);
    if (once.solve() == BaseResult::sat) CHECK(is_stable(pic, once.model().values()));
    for (const auto& m : expected) CHECK(once.learned_clauses_hold(CandidateModel(m)));

    BaseSolverOptions o;
    o.seed = 5;
    BaseSolver a(pic, o), b(pic, o);
    const auto ra = a.solve();
    CHECK(ra == b.solve());
    CHECK(a.trail() == b.trail());
    CHECK(a.stats().to_map() == b.stats().to_map());
  }
}

TEST_CASE("adding falsum rules matches a fresh handle") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    const Program pic = extend_with_choices(parse_program(testing::random_program_text(rng, 8, 3, 5)));
    std::vector<Rule> extra;
    const int k = static_cast<int>(rng() % 3) + 1;
    for (int j = 0; j < k; ++j) {
      Rule r;
      const AtomId a = static_cast<AtomId>(rng() % pic.atom_count());
      ((rng() & 1U) ? r.pos : r.neg).push_back(a);
      const AtomId b = static_cast<AtomId>(rng() % pic.atom_count());
      if (b != a) ((rng() & 1U) ? r.pos : r.neg).push_back(b);
      extra.push_back(r);
    }
    BaseSolver inc(pic);
    inc.solve();
    inc.add_falsum_rules(extra);
    BaseSolver fresh(with_extra_rules(pic, extra));
    CHECK(inc.solve() == fresh.solve());
  }
}

TEST_CASE("stats never decrease") {
  const Program pic = extend_with_choices(parse_program("{a}. {b}. {c}. d :- a, b. #false :- d, c."));
  BaseSolver s(pic);
  auto last = s.stats().to_map();
  while (s.solve() == BaseResult::sat) {
    const auto now = s.stats().to_map();
    REQUIRE(now.size() == last.size());
    for (std::size_t i = 0; i < now.size(); ++i) CHECK(now[i].second >= last[i].second);
    last = now;
    const Rule r = block(s.model());
    s.add_falsum_rules(std::span(&r, 1));
  }
}
