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
#include "casp/theory_solver.hpp"
#include "oracles.hpp"

using namespace casp;
using testing::Signed;

namespace {

std::vector<Signed> positive(const std::vector<ConstraintExpr>& cs) {
  std::vector<Signed> out;
  for (const auto& c : cs) out.push_back({c, true});
  return out;
}

std::vector<Signed> signed_of(const Program& p, std::span<const ConstraintLit> lits) {
  std::vector<Signed> out;
  for (const auto& l : lits) out.push_back({p.gamma_table().at(l.atom), l.positive});
  return out;
}

std::vector<VarDecl> decls_of(const Program& p) { return {p.decls().begin(), p.decls().end()}; }

}  // namespace

TEST_CASE("gamma of negative literals") {
  const Program p = parse_program("#var X 0..24.\n#var Y 0..24.\na :- X #< 12.\nb :- X #= Y.\n");
  const AtomId lt = *p.find_atom("X #< 12");
  const AtomId eq = *p.find_atom("X #= Y");
  CHECK(gamma({lt, false}, p.gamma_table()).rel == Rel::ge);
  CHECK(gamma({lt, true}, p.gamma_table()) == p.gamma_table().at(lt));
  CHECK(gamma({eq, false}, p.gamma_table()).rel == Rel::ne);
  for (Rel r : {Rel::lt, Rel::le, Rel::gt, Rel::ge, Rel::eq, Rel::ne}) CHECK(complement(complement(r)) == r);
  CHECK_THROWS_AS(gamma({*p.find_atom("a"), true}, p.gamma_table()), Error);
}

TEST_CASE("solve_constraints examples") {
  const Program p = parse_program(
      "#var X 0..24.\n#var A 0..10.\n#var B 0..10.\n"
      "a :- X #< 12.\nb :- A + B #= 10, A - B #= 4.\n");
  const AtomId lt = *p.find_atom("X #< 12");
  const AtomId sum = *p.find_atom("A + B #= 10");
  const AtomId diff = *p.find_atom("A - B #= 4");

  auto v = check_literals(std::vector<ConstraintLit>{{lt, true}}, p.gamma_table(), p.decls());
  REQUIRE(v.status == TheoryVerdict::Status::sat);
  CHECK(v.witness->at(0) == 0);

  v = check_literals(std::vector<ConstraintLit>{{lt, true}, {lt, false}}, p.gamma_table(), p.decls());
  CHECK(v.status == TheoryVerdict::Status::unsat);
  CHECK(v.core == std::vector<std::size_t>{0, 1});

  v = check_literals(std::vector<ConstraintLit>{{sum, true}, {diff, true}}, p.gamma_table(), p.decls());
  REQUIRE(v.status == TheoryVerdict::Status::sat);
  CHECK(v.witness->at(1) == 7);
  CHECK(v.witness->at(2) == 3);

  // Empty set: any in-domain evaluation works.
  v = solve_constraints({}, p.decls());
  CHECK(v.status == TheoryVerdict::Status::sat);
}

TEST_CASE("declarations are checked") {
  CHECK_THROWS_AS(parse_program("#var X 3..2."), Error);
  CHECK_THROWS_AS(parse_program("#var X 0..2.\na :- 9223372036854775807*X #> 0."), Error);
}

TEST_CASE("solve_constraints matches exhaustive enumeration") {
  std::mt19937_64 rng(2026);
  int sat = 0;
  for (int i = 0; i < 500; ++i) {
    const auto t = testing::random_theory(rng, 4, 10);
    const auto expected = testing::brute_solve(positive(t.cs), t.decls);
    const auto v = solve_constraints(t.cs, t.decls);
    CAPTURE(i);
    REQUIRE(v.status != TheoryVerdict::Status::unknown);
    CHECK((v.status == TheoryVerdict::Status::sat) == expected.has_value());
    if (v.status == TheoryVerdict::Status::sat) {
      ++sat;
      REQUIRE(v.witness);
      CHECK(testing::brute_ok(positive(t.cs), *v.witness));
      for (std::size_t k = 0; k < t.decls.size(); ++k) {
        CHECK(v.witness->at(k) >= t.decls[k].lo);
        CHECK(v.witness->at(k) <= t.decls[k].hi);
      }
    } else {
      CHECK(v.core.size() == t.cs.size());
    }
  }
  // Both outcomes should be exercised.
  CHECK(sat > 50);
  CHECK(sat < 450);
}

TEST_CASE("an evaluation satisfies exactly one of a literal and its complement") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    const auto t = testing::random_theory(rng, 4, 10);
    GammaTable table{{0, t.cs[0]}};
    for (int k = 0; k < 20; ++k) {
      Evaluation e;
      for (const auto& d : t.decls) e.push_back(d.lo + static_cast<std::int64_t>(rng() % (d.hi - d.lo + 1)));
      CHECK(satisfies(gamma({0, true}, table), e) != satisfies(gamma({0, false}, table), e));
    }
  }
}

TEST_CASE("bounds pruning keeps every supported value") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 400; ++i) {
    const auto t = testing::random_theory(rng, 3, 10);
    const ConstraintExpr& c = t.cs[0];
    std::vector<Domain> dom;
    for (const auto& d : t.decls) dom.push_back({d.lo, d.hi});
    const bool alive = prune_bounds(c, dom);
    // Walk the whole grid: every solution of c must survive pruning.
    std::vector<std::int64_t> v;
    for (const auto& d : t.decls) v.push_back(d.lo);
    for (bool more = true; more;) {
      if (testing::brute_ok({{c, true}}, v)) {
        REQUIRE(alive);
        for (std::size_t k = 0; k < v.size(); ++k) {
          CHECK(v[k] >= dom[k].lo);
          CHECK(v[k] <= dom[k].hi);
        }
      }
      more = false;
      for (std::size_t k = v.size(); k-- > 0;) {
        if (v[k] < t.decls[k].hi) {
          ++v[k];
          more = true;
          break;
        }
        v[k] = t.decls[k].lo;
      }
    }
  }
}

TEST_CASE("minimize_core examples") {
  const Program p = parse_program("#var X 0..24.\n#var Y 0..24.\na :- X #< 12, Y #= 3, X #< 0.\n");
  const AtomId lt = *p.find_atom("X #< 12");
  const AtomId y3 = *p.find_atom("Y #= 3");
  const AtomId neg = *p.find_atom("X #< 0");
  const auto& g = p.gamma_table();

  std::vector<ConstraintLit> in{{lt, true}, {lt, false}, {y3, true}};
  CHECK(minimize_core(in, g, p.decls()) == std::vector<ConstraintLit>{{lt, true}, {lt, false}});
  std::vector<ConstraintLit> pair{{lt, true}, {lt, false}};
  CHECK(minimize_core(pair, g, p.decls()) == pair);
  std::vector<ConstraintLit> single{{neg, true}};
  CHECK(minimize_core(single, g, p.decls()) == single);

  std::vector<ConstraintLit> fine{{lt, true}, {y3, true}};
  CHECK_THROWS_AS(minimize_core(fine, g, p.decls()), Error);
}

TEST_CASE("minimized cores are irreducible") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const auto t = testing::random_theory(rng, 3, 10);
    GammaTable table;
    std::vector<ConstraintLit> lits;
    for (std::size_t k = 0; k < t.cs.size(); ++k) {
      table[static_cast<AtomId>(k)] = t.cs[k];
      lits.push_back({static_cast<AtomId>(k), (rng() & 1U) == 0});
    }
    std::vector<Signed> all;
    for (const auto& l : lits) all.push_back({table.at(l.atom), l.positive});
    if (testing::brute_solve(all, t.decls)) continue;
    ++checked;
    const auto core = minimize_core(lits, table, t.decls);
    REQUIRE_FALSE(core.empty());
    std::vector<Signed> sc;
    for (const auto& l : core) {
      CHECK(std::find(lits.begin(), lits.end(), l) != lits.end());
      sc.push_back({table.at(l.atom), l.positive});
    }
    CHECK_FALSE(testing::brute_solve(sc, t.decls));
    for (std::size_t k = 0; k < sc.size(); ++k) {
      auto fewer = sc;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(k));
      CHECK(testing::brute_solve(fewer, t.decls));
    }
  }
  CHECK(checked > 30);
}

TEST_CASE("an expired deadline yields unknown on a hard set") {
  // Pigeonhole over 9 variables in 0..7: all pairs distinct.
  std::string text;
  for (int i = 0; i < 9; ++i) text += "#var P" + std::to_string(i) + " 0..7.\n";
  text += "a";
  bool first = true;
  for (int i = 0; i < 9; ++i) {
    for (int j = i + 1; j < 9; ++j) {
      text += first ? " :- " : ", ";
      first = false;
      text += "P" + std::to_string(i) + " #!= P" + std::to_string(j);
    }
  }
  text += ".\n";
  const Program p = parse_program(text);
  std::vector<ConstraintLit> lits;
  for (AtomId c : p.constraint_atoms()) lits.push_back({c, true});
  TheoryLimits limits{Clock::now()};
  CHECK(check_literals(lits, p.gamma_table(), p.decls(), limits).status == TheoryVerdict::Status::unknown);
}
