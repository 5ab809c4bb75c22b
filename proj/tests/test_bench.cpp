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

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "casp/bench/decode.hpp"
#include "casp/bench/encoders.hpp"
#include "casp/bench/generators.hpp"
#include "casp/bench/verify.hpp"
#include "casp/error.hpp"
#include "casp/integration.hpp"
#include "casp/parser.hpp"

using namespace casp;
using namespace casp::bench;

namespace {

const Encoding kEncodings[] = {Encoding::pure_asp, Encoding::true_casp, Encoding::pure_csp};
const Schema kSchemas[] = {Schema::black_box, Schema::grey_box, Schema::clear_box};

std::string pred_of(const std::string& name) { return name.substr(0, name.find('(')); }

/// Cost of a coloured sequence: red (0) adds both weights, green (1) both
/// cardinalities, blue (2) the current leaf's weight and cardinality; the
/// first position is free.
std::int64_t seq_cost(const WseqInstance& w, const std::vector<int>& order, const std::vector<int>& colors) {
  std::int64_t total = 0;
  for (std::size_t p = 1; p < order.size(); ++p) {
    const Leaf& cur = w.leaves[order[p]];
    const Leaf& prev = w.leaves[order[p - 1]];
    switch (colors[p]) {
      case 0: total += cur.weight + prev.weight; break;
      case 1: total += cur.cardinality + prev.cardinality; break;
      default: total += cur.weight + cur.cardinality; break;
    }
  }
  return total;
}

Solution wseq_solution(const std::vector<int>& order, const std::vector<int>& colors) {
  Solution s;
  for (std::size_t p = 0; p < order.size(); ++p) {
    s.assignments["leaf[" + std::to_string(p) + "]"] = order[p];
    s.assignments["color[" + std::to_string(p) + "]"] = colors[p];
  }
  return s;
}

/// Visits every (permutation, colouring) pair.
template <class F>
void each_coloured_sequence(std::size_t n, F&& f) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<int> colors(n, 0);
    for (;;) {
      f(order, colors);
      std::size_t k = 0;
      while (k < n && colors[k] == 2) colors[k++] = 0;
      if (k == n) break;
      ++colors[k];
    }
  } while (std::next_permutation(order.begin(), order.end()));
}

std::int64_t brute_optimum(const WseqInstance& w) {
  std::int64_t best = -1;
  each_coloured_sequence(w.leaves.size(), [&](const auto& o, const auto& c) {
    const auto v = seq_cost(w, o, c);
    if (best < 0 || v < best) best = v;
  });
  return best;
}

std::set<std::string> brute_wseq(const WseqInstance& w) {
  std::set<std::string> out;
  each_coloured_sequence(w.leaves.size(), [&](const auto& o, const auto& c) {
    if (seq_cost(w, o, c) <= w.max_cost) out.insert(to_json(wseq_solution(o, c)));
  });
  return out;
}

std::set<std::string> brute_is(const IsInstance& in) {
  std::set<std::string> out;
  const std::size_t n = in.jobs.size();
  std::vector<std::int64_t> start(n, 0);
  std::vector<int> inst(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == n) {
      Solution s;
      for (std::size_t k = 0; k < n; ++k) {
        s.assignments["start[" + in.jobs[k].id + "]"] = start[k];
        s.assignments["instance[" + in.jobs[k].id + "]"] = inst[k];
      }
      if (verify_is(in, s).ok) out.insert(to_json(s));
      return;
    }
    for (int i = 0; i < in.device_of(in.jobs[j]).instance_count; ++i) {
      for (std::int64_t t = 0; t + in.jobs[j].len <= in.horizon; ++t) {
        inst[j] = i;
        start[j] = t;
        rec(j + 1);
      }
    }
  };
  rec(0);
  return out;
}

std::set<std::string> brute_rf(const RfInstance& r) {
  std::set<std::string> out;
  std::vector<Move> moves;
  std::function<void(int)> rec = [&](int step) {
    if (step > r.t_moves) {
      Solution s;
      s.moves = moves;
      if (verify_rf(r, s).ok) out.insert(to_json(s));
      return;
    }
    for (int seg = 0; seg < r.n_segments; ++seg) {
      for (int dir : {1, -1}) {
        moves.push_back({step, seg, dir});
        rec(step + 1);
        moves.pop_back();
      }
    }
  };
  rec(1);
  return out;
}

bool is_decision(DomainKind d, const std::string& pred) {
  switch (d) {
    case DomainKind::wseq: return pred == "leafPos" || pred == "posColor" || pred == "x" || pred == "col";
    case DomainKind::is: return pred == "start" || pred == "on_instance" || pred == "s" || pred == "a";
    case DomainKind::rf: return pred == "pivot";
  }
  return false;
}

/// Distinct decoded solutions of one encoding, found by solving, then
/// forbidding the decision part of the answer and solving again.
std::set<std::string> decoded_solutions(const Instance& inst, Encoding e) {
  const DomainKind d = domain_of(inst);
  std::string text = encode_text(inst, e);
  std::set<std::string> out;
  for (int k = 0;; ++k) {
    const Program p = parse_program(text);
    SolveOptions o;
    o.schema = Schema::clear_box;
    const auto r = solve(p, o);
    REQUIRE(r.outcome != Outcome::timeout);
    if (r.outcome == Outcome::unsat) break;
    const Solution raw = raw_solution(p, r.solution->model, r.solution->witness);
    const Solution dec = decode(d, raw);
    const auto v = verify(inst, dec);
    CHECK_MESSAGE(v.ok, v.message);
    CHECK(out.insert(to_json(dec)).second);
    const std::string ng = "nogood" + std::to_string(k);
    bool any = false;
    for (const auto& [name, value] : raw.assignments) {
      if (!is_decision(d, pred_of(name))) continue;
      if (p.find_var(name)) {
        text += ng + " :- " + name + " #!= " + std::to_string(value) + ".\n";
      } else {
        text += ng + " :- not " + name + ".\n";
      }
      any = true;
    }
    text += any ? ":- not " + ng + ".\n" : "#false.\n";
  }
  return out;
}

Outcome solve_with(const Instance& inst, Encoding e, Schema s, Solution* decoded = nullptr) {
  const Program p = encode(inst, e);
  SolveOptions o;
  o.schema = s;
  const auto r = solve(p, o);
  if (decoded && r.solution) *decoded = decode(domain_of(inst), raw_solution(p, r.solution->model, r.solution->witness));
  return r.outcome;
}

IsInstance two_jobs(std::int64_t horizon, std::int64_t max_penalty) {
  IsInstance in;
  in.devices = {{"d0", 1}};
  in.jobs = {{"j0", "d0", 2, 10, 1}, {"j1", "d0", 3, 10, 1}};
  in.max_penalty = max_penalty;
  in.horizon = horizon;
  return in;
}

RfInstance turned_up() {
  RfInstance r;
  r.n_segments = 3;
  r.t_moves = 1;
  r.goal = {{0, 0}, {1, 0}, {2, 0}, {2, 1}};
  return r;
}

}  // namespace

TEST_CASE("generators are deterministic") {
  for (std::uint64_t seed : {0u, 1u, 7u}) {
    CHECK(to_json(Instance{gen_wseq(4, seed)}) == to_json(Instance{gen_wseq(4, seed)}));
    CHECK(to_json(Instance{gen_is(5, seed)}) == to_json(Instance{gen_is(5, seed)}));
    CHECK(to_json(Instance{gen_rf(4, 3, seed)}) == to_json(Instance{gen_rf(4, 3, seed)}));
  }
  CHECK(to_json(Instance{gen_wseq(4, 1)}) != to_json(Instance{gen_wseq(4, 2)}));
  CHECK_THROWS_AS(gen_wseq(1, 0), Error);
  CHECK_THROWS_AS(gen_wseq(13, 0), Error);
  CHECK_THROWS_AS(gen_is(11, 0), Error);
  CHECK_THROWS_AS(gen_rf(9, 1, 0), Error);
  CHECK_THROWS_AS(gen_rf(3, 6, 0), Error);
}

TEST_CASE("instance and solution json round trip") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    for (const Instance& i : {Instance{gen_wseq(5, seed)}, Instance{gen_is(6, seed)}, Instance{gen_rf(5, 3, seed)}}) {
      const std::string j = to_json(i);
      CHECK(to_json(instance_from_json(j)) == j);
    }
  }
  Solution s;
  s.assignments = {{"leaf[0]", 2}, {"start[j1]", -3}};
  s.moves = {{1, 0, 1}, {2, 3, -1}};
  CHECK(to_json(solution_from_json(to_json(s))) == to_json(s));
  CHECK_THROWS_AS(instance_from_json(R"({"domain":"wseq","leaves":[{"weight":1,"cardinality":1}],"max_cost":3})"),
                  Error);
  CHECK_THROWS_AS(instance_from_json(R"({"domain":"chess"})"), Error);
}

TEST_CASE("wseq optimum and slack") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    for (int n : {2, 3, 4, 5}) {
      const auto w = gen_wseq(n, seed);
      const auto opt = brute_optimum(w);
      CHECK(wseq_optimum(w.leaves) == opt);
      CHECK(w.max_cost >= opt);
      CHECK(w.max_cost <= opt + opt / 5);
      for (const Leaf& l : w.leaves) {
        CHECK(l.weight >= 1);
        CHECK(l.weight <= 5 * n);
        CHECK(l.cardinality >= 1);
        CHECK(l.cardinality <= 5 * n);
      }
    }
  }
}

TEST_CASE("wseq verifier") {
  auto w = gen_wseq(4, 1);
  const auto opt = brute_optimum(w);
  std::optional<Solution> best;
  each_coloured_sequence(4, [&](const auto& o, const auto& c) {
    if (!best && seq_cost(w, o, c) == opt) best = wseq_solution(o, c);
  });
  REQUIRE(best);
  CHECK(verify_wseq(w, *best).ok);
  auto repeated = *best;
  repeated.assignments["leaf[1]"] = repeated.assignments["leaf[0]"];
  CHECK_FALSE(verify_wseq(w, repeated).ok);
  auto bad_color = *best;
  bad_color.assignments["color[2]"] = 3;
  CHECK_FALSE(verify_wseq(w, bad_color).ok);
  CHECK_FALSE(verify_wseq(w, Solution{}).ok);
  w.max_cost = opt - 1;
  CHECK_FALSE(verify_wseq(w, *best).ok);
  // Cost computed by the verifier matches the formula on every sequence.
  const auto tight = gen_wseq(4, 3);
  each_coloured_sequence(4, [&](const auto& o, const auto& c) {
    CHECK(verify_wseq(tight, wseq_solution(o, c)).ok == (seq_cost(tight, o, c) <= tight.max_cost));
  });
}

TEST_CASE("is hand examples") {
  const IsInstance easy = two_jobs(10, 100);
  Solution hand;
  hand.assignments = {{"start[j0]", 0}, {"instance[j0]", 0}, {"start[j1]", 2}, {"instance[j1]", 0}};
  CHECK(verify_is(easy, hand).ok);
  auto overlap = hand;
  overlap.assignments["start[j1]"] = 1;
  CHECK_FALSE(verify_is(easy, overlap).ok);

  const IsInstance cramped = two_jobs(3, 0);
  for (Encoding e : kEncodings) {
    for (Schema s : kSchemas) {
      Solution got;
      CHECK(solve_with(easy, e, s, &got) == Outcome::sat);
      CHECK(verify_is(easy, got).ok);
      CHECK(solve_with(cramped, e, s) == Outcome::unsat);
    }
  }

  IsInstance ordered = two_jobs(10, 0);
  ordered.jobs[0].deadline = 5;
  ordered.jobs[1].deadline = 3;
  ordered.precedences = {{"j0", "j1"}};
  for (Encoding e : kEncodings) CHECK(solve_with(ordered, e, Schema::clear_box) == Outcome::unsat);
  ordered.max_penalty = 2;
  for (Encoding e : kEncodings) CHECK(solve_with(ordered, e, Schema::clear_box) == Outcome::sat);
}

TEST_CASE("rf hand examples") {
  const RfInstance r = turned_up();
  Solution one;
  one.moves = {{1, 2, -1}};
  CHECK(verify_rf(r, one).ok);
  Solution wrong;
  wrong.moves = {{1, 2, 1}};
  CHECK_FALSE(verify_rf(r, wrong).ok);
  CHECK_FALSE(verify_rf(r, Solution{}).ok);

  for (Encoding e : {Encoding::pure_asp, Encoding::true_casp}) {
    for (Schema s : kSchemas) {
      Solution got;
      REQUIRE(solve_with(r, e, s, &got) == Outcome::sat);
      CHECK(got.moves == one.moves);
    }
  }

  RfInstance still;
  still.n_segments = 3;
  still.t_moves = 0;
  still.goal = rf_initial(3);
  for (Encoding e : {Encoding::pure_asp, Encoding::true_casp}) {
    Solution got;
    CHECK(solve_with(still, e, Schema::clear_box, &got) == Outcome::sat);
    CHECK(got.moves.empty());
    CHECK(verify_rf(still, got).ok);
  }
  CHECK_THROWS_AS(encode_rf(r, Encoding::pure_csp), Error);
  try {
    encode_rf(r, Encoding::pure_csp);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::unsupported);
  }
}

TEST_CASE("encoding layering") {
  auto regular_preds = [](const Program& p) {
    std::set<std::string> out;
    for (AtomId a = 0; a < p.atom_count(); ++a) {
      if (!p.is_constraint(a)) out.insert(pred_of(p.atom(a).name));
    }
    return out;
  };
  auto var_preds = [](const Program& p) {
    std::set<std::string> out;
    for (const auto& d : p.decls()) out.insert(pred_of(d.name));
    return out;
  };
  const auto w = gen_wseq(4, 1);
  const Program wa = encode_wseq(w, Encoding::pure_asp);
  CHECK(wa.constraint_atoms().empty());
  CHECK(wa.decls().empty());
  CHECK(regular_preds(wa).count("posCost") == 1);
  const Program wt = encode_wseq(w, Encoding::true_casp);
  CHECK(regular_preds(wt).count("leafPos") == 1);
  CHECK(regular_preds(wt).count("posColor") == 1);
  CHECK(regular_preds(wt).count("posCost") == 0);
  CHECK_FALSE(wt.constraint_atoms().empty());
  const Program wc = encode_wseq(w, Encoding::pure_csp);
  for (const char* pred : {"leafPos", "posColor", "posCost"}) CHECK(regular_preds(wc).count(pred) == 0);

  const auto is = gen_is(5, 2);
  const Program ia = encode_is(is, Encoding::pure_asp);
  CHECK(ia.constraint_atoms().empty());
  for (const char* pred : {"start", "on_instance", "penalty"}) CHECK(regular_preds(ia).count(pred) == 1);
  const Program it = encode_is(is, Encoding::true_casp);
  CHECK(regular_preds(it).count("on_instance") == 1);
  CHECK(regular_preds(it).count("start") == 0);
  CHECK(var_preds(it).count("s") == 1);
  CHECK(var_preds(it).count("pen") == 1);
  const Program ic = encode_is(is, Encoding::pure_csp);
  for (const char* pred : {"start", "on_instance", "penalty"}) CHECK(regular_preds(ic).count(pred) == 0);
  for (const char* pred : {"a", "s", "pen"}) CHECK(var_preds(ic).count(pred) == 1);

  const auto rf = gen_rf(4, 2, 1);
  const Program ra = encode_rf(rf, Encoding::pure_asp);
  CHECK(ra.constraint_atoms().empty());
  for (const char* pred : {"pivot", "tfoldx", "tfoldy"}) CHECK(regular_preds(ra).count(pred) == 1);
  const Program rt = encode_rf(rf, Encoding::true_casp);
  CHECK(regular_preds(rt).count("pivot") == 1);
  CHECK(regular_preds(rt).count("tfoldx") == 0);
  CHECK(var_preds(rt).count("x") == 1);
}

TEST_CASE("encodings are ground and every body atom is defined") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    for (const Instance& inst : {Instance{gen_wseq(5, seed)}, Instance{gen_is(6, seed)}, Instance{gen_rf(5, 3, seed)}}) {
      for (Encoding e : kEncodings) {
        if (!supports(domain_of(inst), e)) continue;
        const std::string text = encode_text(inst, e);
        const Program p = parse_program(text);
        std::set<AtomId> heads;
        for (const auto& r : p.rules()) {
          if (r.head) heads.insert(*r.head);
        }
        for (const auto& r : p.rules()) {
          for (const auto* list : {&r.pos, &r.neg, &r.negneg}) {
            for (AtomId a : *list) {
              if (!p.is_constraint(a)) CHECK_MESSAGE(heads.count(a) == 1, p.atom(a).name);
            }
          }
        }
        CHECK(print_program(parse_program(print_program(p))) == print_program(p));
      }
    }
  }
}

TEST_CASE("encodings agree on the projected solutions") {
  for (std::uint64_t seed = 1; seed <= 2; ++seed) {
    const auto w = gen_wseq(4, seed);
    const auto expected = brute_wseq(w);
    CAPTURE(seed);
    for (Encoding e : kEncodings) CHECK(decoded_solutions(Instance{w}, e) == expected);
    // leafPos/posColor fix everything else, so answer sets match one to one.
    SolveOptions o;
    CHECK(enumerate_all(encode_wseq(w, Encoding::pure_asp), o).solutions.size() == expected.size());
    CHECK(enumerate_all(encode_wseq(w, Encoding::true_casp), o).solutions.size() == expected.size());
  }
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    for (int jobs : {2, 3}) {
      const auto in = gen_is(jobs, seed);
      const auto expected = brute_is(in);
      CAPTURE(seed);
      CAPTURE(jobs);
      for (Encoding e : kEncodings) CHECK(decoded_solutions(Instance{in}, e) == expected);
    }
  }
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    for (auto [n, t] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{4, 2}}) {
      const auto r = gen_rf(n, t, seed);
      const auto expected = brute_rf(r);
      CHECK_FALSE(expected.empty());
      for (Encoding e : {Encoding::pure_asp, Encoding::true_casp}) CHECK(decoded_solutions(Instance{r}, e) == expected);
    }
  }
}

TEST_CASE("generated rf instances are satisfiable under every schema") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto r = gen_rf(4, 2, seed);
    for (Encoding e : {Encoding::pure_asp, Encoding::true_casp}) {
      for (Schema s : kSchemas) {
        Solution got;
        REQUIRE(solve_with(r, e, s, &got) == Outcome::sat);
        CHECK(verify_rf(r, got).ok);
      }
    }
  }
}
