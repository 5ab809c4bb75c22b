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

#include "casp/bench/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace casp::bench {

namespace {

Verdict fail(std::string m) { return {false, std::move(m)}; }
Verdict pass(std::string m) { return {true, std::move(m)}; }

const std::int64_t* lookup(const Solution& s, const std::string& k) {
  auto it = s.assignments.find(k);
  return it == s.assignments.end() ? nullptr : &it->second;
}

}  // namespace

Verdict verify_wseq(const WseqInstance& w, const Solution& s) {
  const std::size_t n = w.leaves.size();
  std::vector<std::size_t> order(n);
  std::vector<int> color(n);
  std::vector<bool> used(n, false);
  for (std::size_t p = 0; p < n; ++p) {
    const auto* l = lookup(s, "leaf[" + std::to_string(p) + "]");
    const auto* c = lookup(s, "color[" + std::to_string(p) + "]");
    if (!l || !c) return fail("position " + std::to_string(p) + " has no leaf or colour");
    if (*l < 0 || *l >= static_cast<std::int64_t>(n)) return fail("leaf index out of range");
    if (*c < 0 || *c > 2) return fail("colour out of range");
    if (used[*l]) return fail("leaf " + std::to_string(*l) + " placed twice");
    used[*l] = true;
    order[p] = static_cast<std::size_t>(*l);
    color[p] = static_cast<int>(*c);
  }
  std::int64_t cost = 0;
  for (std::size_t p = 1; p < n; ++p) {
    const Leaf& a = w.leaves[order[p]];
    const Leaf& b = w.leaves[order[p - 1]];
    if (color[p] == 0) cost += a.weight + b.weight;
    else if (color[p] == 1) cost += a.cardinality + b.cardinality;
    else cost += a.weight + a.cardinality;
  }
  if (cost > w.max_cost) return fail("cost " + std::to_string(cost) + " exceeds " + std::to_string(w.max_cost));
  return pass("cost " + std::to_string(cost) + " <= " + std::to_string(w.max_cost));
}

Verdict verify_is(const IsInstance& x, const Solution& s) {
  struct Slot {
    std::int64_t start, end;
    int instance;
  };
  std::map<std::string, Slot> slot;
  std::int64_t penalty = 0;
  for (const auto& j : x.jobs) {
    const auto* st = lookup(s, "start[" + j.id + "]");
    const auto* in = lookup(s, "instance[" + j.id + "]");
    if (!st || !in) return fail("job " + j.id + " lacks a start or an instance");
    auto dev = std::find_if(x.devices.begin(), x.devices.end(), [&](const Device& d) { return d.id == j.device; });
    if (dev == x.devices.end()) return fail("job " + j.id + " has no device");
    if (*in < 0 || *in >= dev->instance_count) return fail("job " + j.id + " uses a missing instance");
    for (const auto& o : x.offline)
      if (o.device == j.device && o.instance == *in) return fail("job " + j.id + " uses an offline instance");
    if (*st < 0 || *st + j.len > x.horizon) return fail("job " + j.id + " runs outside the horizon");
    slot[j.id] = {*st, *st + j.len, static_cast<int>(*in)};
    penalty += std::max<std::int64_t>(0, *st + j.len - j.deadline) * j.importance;
  }
  for (std::size_t a = 0; a < x.jobs.size(); ++a) {
    for (std::size_t b = a + 1; b < x.jobs.size(); ++b) {
      const auto& ja = x.jobs[a];
      const auto& jb = x.jobs[b];
      if (ja.device != jb.device) continue;
      const Slot& sa = slot[ja.id];
      const Slot& sb = slot[jb.id];
      if (sa.instance == sb.instance && sa.start < sb.end && sb.start < sa.end) {
        return fail("jobs " + ja.id + " and " + jb.id + " overlap");
      }
    }
  }
  for (const auto& [before, after] : x.precedences) {
    if (slot[after].start < slot[before].end) return fail(after + " starts before " + before + " ends");
  }
  if (penalty > x.max_penalty) {
    return fail("penalty " + std::to_string(penalty) + " exceeds " + std::to_string(x.max_penalty));
  }
  return pass("penalty " + std::to_string(penalty) + " <= " + std::to_string(x.max_penalty));
}

Verdict verify_rf(const RfInstance& r, const Solution& s) {
  if (static_cast<int>(s.moves.size()) != r.t_moves) {
    return fail(std::to_string(s.moves.size()) + " moves instead of " + std::to_string(r.t_moves));
  }
  std::vector<Move> moves = s.moves;
  std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) { return a.step < b.step; });
  std::vector<Point> chain;
  for (int k = 0; k <= r.n_segments; ++k) chain.push_back({k, 0});
  for (std::size_t m = 0; m < moves.size(); ++m) {
    const Move& mv = moves[m];
    if (mv.step != static_cast<int>(m) + 1) return fail("steps must be 1..t, one move each");
    if (mv.segment < 0 || mv.segment >= r.n_segments) return fail("segment out of range");
    if (mv.dir != 1 && mv.dir != -1) return fail("direction must be +1 or -1");
    const Point c = chain[mv.segment];
    for (std::size_t k = mv.segment + 1; k < chain.size(); ++k) {
      const Point old = chain[k];
      chain[k] = {c.x + mv.dir * (old.y - c.y), c.y - mv.dir * (old.x - c.x)};
    }
    std::set<Point> seen(chain.begin(), chain.end());
    if (seen.size() != chain.size()) return fail("chain intersects itself after step " + std::to_string(mv.step));
  }
  if (chain != r.goal) return fail("final configuration differs from the goal");
  return pass("goal reached in " + std::to_string(r.t_moves) + " moves");
}

Verdict verify(const Instance& i, const Solution& s) {
  return std::visit(
      [&](const auto& x) -> Verdict {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, WseqInstance>) return verify_wseq(x, s);
        else if constexpr (std::is_same_v<T, IsInstance>) return verify_is(x, s);
        else return verify_rf(x, s);
      },
      i);
}

}  // namespace casp::bench
