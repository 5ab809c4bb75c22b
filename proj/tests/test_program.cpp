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

#include "casp/error.hpp"
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

std::optional<ErrorKind> kind_of(std::string_view text) {
  try {
    parse_program(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

std::vector<std::vector<bool>> oracle_models(const Program& p) {
  std::vector<std::vector<bool>> out;
  for (const auto& m : enumerate_answer_sets_oracle(p, default_theory_check(p))) out.push_back(m.values());
  return out;
}

}  // namespace

TEST_CASE("light switch parses into four rules") {
  const Program p = parse_program(kLightSwitch);
  CHECK(p.rules().size() == 4);
  CHECK(p.decls().size() == 1);
  CHECK(p.constraint_atoms().size() == 1);
  const AtomId sw = *p.find_atom("switch");
  // {switch}. is sugar for switch :- not not switch.
  bool found = false;
  for (const auto& r : p.rules()) {
    if (r.head == sw) {
      CHECK(r.pos.empty());
      CHECK(r.neg.empty());
      CHECK(r.negneg == std::vector<AtomId>{sw});
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("empty input") {
  const Program p = parse_program("");
  CHECK(p.rules().empty());
  CHECK(p.decls().empty());
  CHECK(parse_program("% only a comment\n").rules().empty());
}

TEST_CASE("parse errors") {
  CHECK(kind_of("a :- X #< 12.") == ErrorKind::undeclared_variable);
  CHECK(kind_of("#var X 0..3.\nX #< 2.") == ErrorKind::constraint_in_head);
  CHECK(kind_of("#var X 0..3.\n#var X 0..4.") == ErrorKind::duplicate_declaration);
  CHECK(kind_of("a :- b, not b.") == ErrorKind::invalid_program);
  CHECK(kind_of("a :- b") == ErrorKind::syntax);
  try {
    parse_program("a.\nb :- ,c.\n");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ErrorKind::syntax);
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);
  }
}

TEST_CASE("print then parse gives the same program") {
  std::mt19937_64 rng(11);
  CHECK(parse_program(print_program(parse_program(kLightSwitch))) == parse_program(kLightSwitch));
  for (int i = 0; i < 200; ++i) {
    const Program p = parse_program(testing::random_program_text(rng, 6, 3, 5));
    CHECK(parse_program(print_program(p)) == p);
  }
}

TEST_CASE("choice braces and double negation agree") {
  const Program a = parse_program("{a}. {b}. c :- a, not b. #false :- not c.");
  const Program b = parse_program("a :- not not a. b :- not not b. c :- a, not b. #false :- not c.");
  CHECK(a == b);
  CHECK(oracle_models(a) == oracle_models(b));
  CHECK(oracle_models(a).size() == 1);
}

TEST_CASE("extend_with_choices") {
  const Program p = parse_program(kLightSwitch);
  const Program pic = extend_with_choices(p);
  CHECK(pic.rules().size() == p.rules().size() + 1);
  const AtomId c = *p.find_atom("X #< 12");
  CHECK(pic.rules().back() == Rule{c, {}, {}, {c}});
  CHECK(extend_with_choices(pic) == pic);
  CHECK(is_choice_extended(pic));
  CHECK_FALSE(is_choice_extended(p));

  const Program plain = parse_program("{a}. b :- a. c :- not b.");
  CHECK(extend_with_choices(plain) == plain);
}

TEST_CASE("answer set checks") {
  const Program p = parse_program(kLightSwitch);
  const auto theory = default_theory_check(p);
  std::vector<bool> m(p.atom_count(), false);
  m[*p.find_atom("switch")] = true;
  m[*p.find_atom("lightOn")] = true;
  CHECK(is_answer_set(p, CandidateModel(m), theory));
  auto all = enumerate_answer_sets_oracle(p, theory);
  REQUIRE(all.size() == 1);
  CHECK(all[0].values() == m);

  // am true but X < 12 false: the reduct does not support am.
  auto bad = m;
  bad[*p.find_atom("am")] = true;
  CHECK_FALSE(is_answer_set(p, CandidateModel(bad), theory));
  CHECK_THROWS_AS(is_answer_set(p, CandidateModel({true}), theory), Error);

  const Program empty = parse_program("");
  CHECK(is_answer_set(empty, CandidateModel{}, default_theory_check(empty)));
  CHECK(enumerate_answer_sets_oracle(empty, default_theory_check(empty)).size() == 1);

  const Program odd = parse_program("a :- not a.");
  CHECK_FALSE(is_answer_set(odd, CandidateModel({true}), default_theory_check(odd)));
  CHECK_FALSE(is_answer_set(odd, CandidateModel({false}), default_theory_check(odd)));
  CHECK(enumerate_answer_sets_oracle(odd, default_theory_check(odd)).empty());
}

TEST_CASE("negative constraint literals need the complement") {
  // Both X #< 2 and its complement are satisfiable, so either sign works,
  // but X #< 0 is empty over 0..3 and so its atom must be false.
  const Program p = parse_program("#var X 0..3.\na :- X #< 2.\nb :- X #< 0.\n");
  const auto sets = oracle_models(p);
  CHECK(sets.size() == 2);
  for (const auto& m : sets) CHECK_FALSE(m[*p.find_atom("b")]);
  CHECK(sets == testing::brute_answer_sets(p));
}

TEST_CASE("oracle agrees with the independent brute force") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Program p = parse_program(testing::random_program_text(rng, 7, 3, 5));
    CHECK(oracle_models(p) == testing::brute_answer_sets(p));
  }
}

TEST_CASE("oracle refuses large programs") {
  std::string text;
  for (std::size_t i = 0; i <= kOracleAtomLimit; ++i) text += "{a" + std::to_string(i) + "}.\n";
  const Program p = parse_program(text);
  CHECK_THROWS_AS(enumerate_answer_sets_oracle(p, default_theory_check(p)), Error);
}

TEST_CASE("extending a constraint-free program keeps its answer sets") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Program p = parse_program(testing::random_program_text(rng, 7, 0, 5));
    CHECK(oracle_models(extend_with_choices(p)) == oracle_models(p));
  }
}
