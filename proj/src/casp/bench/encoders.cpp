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

#include "casp/bench/encoders.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <tuple>

#include "casp/error.hpp"
#include "casp/parser.hpp"

namespace casp::bench {

namespace {

/// Linear expression text; terms keep insertion order.
class Lin {
 public:
  Lin& add(std::int64_t coef, const std::string& var) {
    if (coef != 0) terms_.emplace_back(coef, var);
    return *this;
  }
  Lin& add(std::int64_t constant) {
    constant_ += constant;
    return *this;
  }
  Lin& add(const Lin& o, std::int64_t scale = 1) {
    for (const auto& [c, v] : o.terms_) add(c * scale, v);
    constant_ += o.constant_ * scale;
    return *this;
  }

  std::string str() const {
    std::string out;
    auto piece = [&](std::int64_t c, const std::string* v) {
      const std::int64_t mag = std::llabs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (!v) out += std::to_string(mag);
      else if (mag == 1) out += *v;
      else out += std::to_string(mag) + "*" + *v;
    };
    for (const auto& [c, v] : terms_) piece(c, &v);
    if (constant_ != 0) piece(constant_, nullptr);
    return out.empty() ? "0" : out;
  }

 private:
  std::vector<std::pair<std::int64_t, std::string>> terms_;
  std::int64_t constant_ = 0;
};

std::string cx(const Lin& lhs, const char* rel, const Lin& rhs) { return lhs.str() + " " + rel + " " + rhs.str(); }
std::string cx(const Lin& lhs, const char* rel, std::int64_t rhs) { return cx(lhs, rel, Lin().add(rhs)); }

/// Accumulates program text.
class Out {
 public:
  void comment(const std::string& c) { text_ += "% " + c + "\n"; }
  void var(const std::string& name, std::int64_t lo, std::int64_t hi) {
    text_ += "#var " + name + " " + std::to_string(lo) + ".." + std::to_string(hi) + ".\n";
  }
  void fact(const std::string& a) { text_ += a + ".\n"; }
  void choice(const std::string& a) { text_ += "{" + a + "}.\n"; }
  void rule(const std::string& head, const std::vector<std::string>& body) {
    text_ += head;
    if (!body.empty()) text_ += " :- " + join(body);
    text_ += ".\n";
  }
  void forbid(const std::vector<std::string>& body) {
    if (body.empty()) text_ += "#false.\n";
    else text_ += ":- " + join(body) + ".\n";
  }
  /// The constraint must hold in every answer set.
  void require(const std::string& cexpr) { forbid({"not " + cexpr}); }
  /// Regular atom `a` is true exactly when constraint `c` is.
  void tie(const std::string& a, const std::string& c) {
    forbid({a, "not " + c});
    forbid({"not " + a, c});
  }
  /// Exactly one of `atoms` is true, via a helper atom and pairwise bans.
  void exactly_one(const std::vector<std::string>& atoms, const std::string& some) {
    for (const auto& a : atoms) rule(some, {a});
    forbid({"not " + some});
    for (std::size_t i = 0; i < atoms.size(); ++i)
      for (std::size_t j = i + 1; j < atoms.size(); ++j) forbid({atoms[i], atoms[j]});
  }
  std::string take() { return std::move(text_); }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s;
  }
  std::string text_;
};

std::string args(std::initializer_list<std::string> xs) {
  std::string s = "(";
  bool first = true;
  for (const auto& x : xs) {
    s += (first ? "" : ",") + x;
    first = false;
  }
  return s + ")";
}

std::string num(std::int64_t v) { return std::to_string(v); }

// ---------------------------------------------------------------- wseq ----

std::string leaf_pos(std::size_t l, std::size_t p) { return "leafPos" + args({num(l), num(p)}); }
std::string pos_color(std::size_t p, int k) { return "posColor" + args({num(p), num(k)}); }

void wseq_sequence_choices(Out& o, std::size_t n) {
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<std::string> at;
    for (std::size_t l = 0; l < n; ++l) {
      o.choice(leaf_pos(l, p));
      at.push_back(leaf_pos(l, p));
    }
    o.exactly_one(at, "hasLeaf" + args({num(p)}));
  }
  for (std::size_t l = 0; l < n; ++l) {
    std::vector<std::string> at;
    for (std::size_t p = 0; p < n; ++p) at.push_back(leaf_pos(l, p));
    o.exactly_one(at, "placed" + args({num(l)}));
  }
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<std::string> cs;
    for (int k = 0; k < 3; ++k) {
      o.choice(pos_color(p, k));
      cs.push_back(pos_color(p, k));
    }
    o.exactly_one(cs, "hasColor" + args({num(p)}));
  }
}

std::int64_t step_cost(const WseqInstance& w, std::size_t cur, std::size_t prev, int k) {
  const Leaf& a = w.leaves[cur];
  const Leaf& b = w.leaves[prev];
  if (k == 0) return a.weight + b.weight;
  if (k == 1) return a.cardinality + b.cardinality;
  return a.weight + a.cardinality;
}

/// Every (cost, leaf, predecessor, colour) combination for positions > 0.
template <class F>
void wseq_combinations(const WseqInstance& w, F&& f) {
  const std::size_t n = w.leaves.size();
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t q = 0; q < n; ++q)
      if (l != q)
        for (int k = 0; k < 3; ++k) f(step_cost(w, l, q, k), l, q, k);
}

std::string wseq_pure_asp(const WseqInstance& w) {
  Out o;
  const std::size_t n = w.leaves.size();
  o.comment("wseq, pure ASP");
  wseq_sequence_choices(o, n);
  std::set<std::int64_t> values;
  wseq_combinations(w, [&](std::int64_t v, auto, auto, auto) { values.insert(v); });
  o.fact("posCost(0,0)");
  for (std::size_t p = 1; p < n; ++p) {
    wseq_combinations(w, [&](std::int64_t v, std::size_t l, std::size_t q, int k) {
      o.rule("posCost" + args({num(p), num(v)}), {leaf_pos(l, p), leaf_pos(q, p - 1), pos_color(p, k)});
    });
  }
  // ps(p,s): the costs of positions 0..p add up to s.
  std::set<std::int64_t> reach{0};
  o.fact("ps(0,0)");
  for (std::size_t p = 1; p < n; ++p) {
    std::set<std::int64_t> next;
    for (std::int64_t s : reach) {
      for (std::int64_t v : values) {
        const std::vector<std::string> body{"ps" + args({num(p - 1), num(s)}), "posCost" + args({num(p), num(v)})};
        if (s + v <= w.max_cost) {
          o.rule("ps" + args({num(p), num(s + v)}), body);
          next.insert(s + v);
        } else {
          o.forbid(body);
        }
      }
    }
    reach = std::move(next);
  }
  return o.take();
}

std::pair<std::int64_t, std::int64_t> wseq_cost_range(const WseqInstance& w) {
  std::int64_t lo = std::numeric_limits<std::int64_t>::max(), hi = 0;
  wseq_combinations(w, [&](std::int64_t v, auto, auto, auto) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  });
  return {lo, hi};
}

std::string cost_var(std::size_t p) { return "c" + args({num(p)}); }

void wseq_bound(Out& o, std::size_t n, std::int64_t m) {
  Lin total;
  for (std::size_t p = 1; p < n; ++p) total.add(1, cost_var(p));
  o.require(cx(total, "#<=", m));
}

std::string wseq_true_casp(const WseqInstance& w) {
  Out o;
  const std::size_t n = w.leaves.size();
  o.comment("wseq, CASP: position costs and their bound are constraints");
  const auto [lo, hi] = wseq_cost_range(w);
  for (std::size_t p = 1; p < n; ++p) o.var(cost_var(p), lo, hi);
  wseq_sequence_choices(o, n);
  for (std::size_t p = 1; p < n; ++p) {
    std::set<std::int64_t> values;
    wseq_combinations(w, [&](std::int64_t v, std::size_t l, std::size_t q, int k) {
      values.insert(v);
      o.rule("costIs" + args({num(p), num(v)}), {leaf_pos(l, p), leaf_pos(q, p - 1), pos_color(p, k)});
    });
    for (std::int64_t v : values) o.tie("costIs" + args({num(p), num(v)}), cx(Lin().add(1, cost_var(p)), "#=", v));
  }
  wseq_bound(o, n, w.max_cost);
  return o.take();
}

std::string wseq_pure_csp(const WseqInstance& w) {
  Out o;
  const std::size_t n = w.leaves.size();
  o.comment("wseq, pure CSP: 0/1 placement and colour indicators");
  auto x = [](std::size_t l, std::size_t p) { return "x" + args({num(l), num(p)}); };
  auto col = [](std::size_t p, int k) { return "col" + args({num(p), num(k)}); };
  auto wv = [](std::size_t p) { return "w" + args({num(p)}); };
  auto kv = [](std::size_t p) { return "k" + args({num(p)}); };
  std::int64_t wsum = 0, ksum = 0, big = 0;
  for (const auto& l : w.leaves) {
    wsum = std::max(wsum, l.weight);
    ksum = std::max(ksum, l.cardinality);
  }
  big = 2 * std::max(wsum, ksum);
  // Position-major order steers the search to fill the sequence left to right.
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t l = 0; l < n; ++l) o.var(x(l, p), 0, 1);
    for (int k = 0; k < 3; ++k) o.var(col(p, k), 0, 1);
  }
  for (std::size_t p = 0; p < n; ++p) {
    o.var(wv(p), 0, wsum);
    o.var(kv(p), 0, ksum);
  }
  const auto [lo, hi] = wseq_cost_range(w);
  for (std::size_t p = 1; p < n; ++p) o.var(cost_var(p), lo, hi);

  for (std::size_t p = 0; p < n; ++p) {
    Lin row, colours, weight, card;
    for (std::size_t l = 0; l < n; ++l) {
      row.add(1, x(l, p));
      weight.add(w.leaves[l].weight, x(l, p));
      card.add(w.leaves[l].cardinality, x(l, p));
    }
    for (int k = 0; k < 3; ++k) colours.add(1, col(p, k));
    o.require(cx(row, "#=", 1));
    o.require(cx(colours, "#=", 1));
    o.require(cx(Lin().add(1, wv(p)), "#=", weight));
    o.require(cx(Lin().add(1, kv(p)), "#=", card));
  }
  for (std::size_t l = 0; l < n; ++l) {
    Lin column;
    for (std::size_t p = 0; p < n; ++p) column.add(1, x(l, p));
    o.require(cx(column, "#=", 1));
  }
  // c(p) >= colour cost - big * (1 - col(p,k))
  for (std::size_t p = 1; p < n; ++p) {
    const Lin red = Lin().add(1, wv(p)).add(1, wv(p - 1));
    const Lin green = Lin().add(1, kv(p)).add(1, kv(p - 1));
    const Lin blue = Lin().add(1, wv(p)).add(1, kv(p));
    const Lin* costs[] = {&red, &green, &blue};
    for (int k = 0; k < 3; ++k) {
      Lin lhs;
      lhs.add(*costs[k]).add(-1, cost_var(p)).add(big, col(p, k));
      o.require(cx(lhs, "#<=", big));
    }
  }
  wseq_bound(o, n, w.max_cost);
  return o.take();
}

// ------------------------------------------------------------------ is ----

struct IsIndex {
  const IsInstance& inst;
  std::vector<std::vector<int>> online;  // per job
  std::vector<std::pair<std::size_t, std::size_t>> shared;  // job pairs on one device
  std::vector<std::pair<std::size_t, std::size_t>> prec;

  explicit IsIndex(const IsInstance& s) : inst(s) {
    for (const auto& j : s.jobs) {
      const Device& d = s.device_of(j);
      std::vector<int> ok;
      for (int i = 0; i < d.instance_count; ++i)
        if (!s.is_offline(d.id, i)) ok.push_back(i);
      online.push_back(ok);
    }
    for (std::size_t a = 0; a < s.jobs.size(); ++a)
      for (std::size_t b = a + 1; b < s.jobs.size(); ++b)
        if (s.jobs[a].device == s.jobs[b].device) shared.emplace_back(a, b);
    auto idx = [&](const std::string& id) {
      for (std::size_t k = 0; k < s.jobs.size(); ++k)
        if (s.jobs[k].id == id) return k;
      throw Error(ErrorKind::invalid_argument, "unknown job " + id);
    };
    for (const auto& [a, b] : s.precedences) prec.emplace_back(idx(a), idx(b));
  }

  std::int64_t last_start(std::size_t j) const { return inst.horizon - inst.jobs[j].len; }
  std::int64_t max_pen(std::size_t j) const {
    const auto& job = inst.jobs[j];
    return std::max<std::int64_t>(0, inst.horizon - job.deadline) * job.importance;
  }
  std::int64_t pen_at(std::size_t j, std::int64_t s) const {
    const auto& job = inst.jobs[j];
    return std::max<std::int64_t>(0, s + job.len - job.deadline) * job.importance;
  }
};

std::string on_inst(const IsInstance& s, std::size_t j, int i) { return "on_instance" + args({s.jobs[j].id, num(i)}); }

void is_instance_choices(Out& o, const IsIndex& x) {
  for (std::size_t j = 0; j < x.inst.jobs.size(); ++j) {
    std::vector<std::string> at;
    for (int i : x.online[j]) {
      o.choice(on_inst(x.inst, j, i));
      at.push_back(on_inst(x.inst, j, i));
    }
    o.exactly_one(at, "assigned" + args({x.inst.jobs[j].id}));
  }
}

std::string is_pure_asp(const IsInstance& s) {
  Out o;
  const IsIndex x(s);
  o.comment("is, pure ASP over the discretised horizon");
  const auto& J = s.jobs;
  auto start = [&](std::size_t j, std::int64_t t) { return "start" + args({J[j].id, num(t)}); };
  auto ge = [&](std::size_t j, std::int64_t t) { return "startGe" + args({J[j].id, num(t)}); };
  auto run = [&](std::size_t j, std::int64_t t) { return "run" + args({J[j].id, num(t)}); };
  for (std::size_t j = 0; j < J.size(); ++j) {
    const std::int64_t last = x.last_start(j);
    for (std::int64_t t = 0; t <= last; ++t) {
      o.choice(start(j, t));
      o.rule(ge(j, t), {start(j, t)});
      if (t < last) {
        o.rule(ge(j, t), {ge(j, t + 1)});
        o.forbid({start(j, t), ge(j, t + 1)});
      }
      for (std::int64_t u = t; u < t + J[j].len; ++u) o.rule(run(j, u), {start(j, t)});
    }
    o.forbid({"not " + ge(j, 0)});
  }
  is_instance_choices(o, x);
  for (const auto& [a, b] : x.shared) {
    for (int i : x.online[a]) {
      for (std::int64_t t = 0; t < s.horizon; ++t) {
        o.forbid({on_inst(s, a, i), on_inst(s, b, i), run(a, t), run(b, t)});
      }
    }
  }
  for (const auto& [a, b] : x.prec) {
    for (std::int64_t t = 0; t <= x.last_start(b); ++t) {
      const std::int64_t lim = t - J[a].len + 1;  // a must start before lim
      if (lim <= 0) o.forbid({start(b, t)});
      else if (lim <= x.last_start(a)) o.forbid({start(b, t), ge(a, lim)});
    }
  }
  auto pen = [&](std::size_t j, std::int64_t v) { return "penalty" + args({J[j].id, num(v)}); };
  std::vector<std::set<std::int64_t>> pens(J.size());
  for (std::size_t j = 0; j < J.size(); ++j) {
    for (std::int64_t t = 0; t <= x.last_start(j); ++t) {
      o.rule(pen(j, x.pen_at(j, t)), {start(j, t)});
      pens[j].insert(x.pen_at(j, t));
    }
  }
  // tot(k,v): the penalties of jobs 0..k add up to v.
  auto tot = [](std::size_t k, std::int64_t v) { return "tot" + args({num(k), num(v)}); };
  std::set<std::int64_t> reach{0};
  for (std::size_t j = 0; j < J.size(); ++j) {
    std::set<std::int64_t> next;
    for (std::int64_t r : reach) {
      for (std::int64_t v : pens[j]) {
        std::vector<std::string> body{pen(j, v)};
        if (j > 0) body.push_back(tot(j - 1, r));
        if (r + v <= s.max_penalty) {
          o.rule(tot(j, r + v), body);
          next.insert(r + v);
        } else {
          o.forbid(body);
        }
      }
    }
    reach = std::move(next);
  }
  return o.take();
}

/// Start, penalty, precedence and non-overlap constraints shared by the
/// two encodings with constraint variables. `same(a,b)` is a 0/1 variable
/// that is 1 when jobs a and b share an instance.
void is_timing(Out& o, const IsIndex& x) {
  const auto& s = x.inst;
  const auto& J = s.jobs;
  auto sv = [&](std::size_t j) { return "s" + args({J[j].id}); };
  auto pv = [&](std::size_t j) { return "pen" + args({J[j].id}); };
  Lin total;
  for (std::size_t j = 0; j < J.size(); ++j) {
    const auto& job = J[j];
    // imp * (s + len - deadline) <= pen
    o.require(cx(Lin().add(job.importance, sv(j)).add(-1, pv(j)), "#<=", job.importance * (job.deadline - job.len)));
    total.add(1, pv(j));
  }
  o.require(cx(total, "#<=", s.max_penalty));
  for (const auto& [a, b] : x.prec) o.require(cx(Lin().add(1, sv(a)).add(J[a].len), "#<=", Lin().add(1, sv(b))));
  const std::int64_t big = s.horizon + 1;
  for (const auto& [a, b] : x.shared) {
    const std::string same = "same" + args({J[a].id, J[b].id});
    const std::string ord = "ord" + args({J[a].id, J[b].id});
    // ord = 1: a first; only binding when same = 1.
    o.require(cx(Lin().add(1, sv(a)).add(-1, sv(b)).add(big, ord).add(big, same), "#<=", 2 * big - J[a].len));
    o.require(cx(Lin().add(1, sv(b)).add(-1, sv(a)).add(-big, ord).add(big, same), "#<=", big - J[b].len));
  }
}

void is_timing_vars(Out& o, const IsIndex& x) {
  const auto& J = x.inst.jobs;
  for (const auto& [a, b] : x.shared) {
    o.var("same" + args({J[a].id, J[b].id}), 0, 1);
    o.var("ord" + args({J[a].id, J[b].id}), 0, 1);
  }
  for (std::size_t j = 0; j < J.size(); ++j) {
    o.var("s" + args({J[j].id}), 0, std::max<std::int64_t>(0, x.last_start(j)));
    if (x.last_start(j) < 0) o.forbid({});
  }
  for (std::size_t j = 0; j < J.size(); ++j) o.var("pen" + args({J[j].id}), 0, x.max_pen(j));
}

std::string is_true_casp(const IsInstance& s) {
  Out o;
  const IsIndex x(s);
  o.comment("is, CASP: instance choice regular, times and penalties as constraints");
  is_timing_vars(o, x);
  is_instance_choices(o, x);
  const auto& J = s.jobs;
  for (const auto& [a, b] : x.shared) {
    const std::string shared = "shared" + args({J[a].id, J[b].id});
    for (int i : x.online[a]) o.rule(shared, {on_inst(s, a, i), on_inst(s, b, i)});
    o.tie(shared, cx(Lin().add(1, "same" + args({J[a].id, J[b].id})), "#=", 1));
  }
  is_timing(o, x);
  return o.take();
}

std::string is_pure_csp(const IsInstance& s) {
  Out o;
  const IsIndex x(s);
  o.comment("is, pure CSP: 0/1 instance indicators");
  const auto& J = s.jobs;
  auto av = [&](std::size_t j, int i) { return "a" + args({J[j].id, num(i)}); };
  for (std::size_t j = 0; j < J.size(); ++j)
    for (int i : x.online[j]) o.var(av(j, i), 0, 1);
  is_timing_vars(o, x);
  for (std::size_t j = 0; j < J.size(); ++j) {
    Lin one;
    for (int i : x.online[j]) one.add(1, av(j, i));
    o.require(cx(one, "#=", 1));
  }
  for (const auto& [a, b] : x.shared) {
    for (int i : x.online[a]) {
      o.require(cx(Lin().add(1, av(a, i)).add(1, av(b, i)).add(-1, "same" + args({J[a].id, J[b].id})), "#<=", 1));
    }
  }
  is_timing(o, x);
  return o.take();
}

// ------------------------------------------------------------------ rf ----

const char* kTurn[] = {"cw", "ccw"};
constexpr int kTurnSign[] = {1, -1};
// Unit steps E, N, W, S; ccw turns add 1, cw turns add 3 (mod 4).
constexpr std::int64_t kDx[] = {1, 0, -1, 0};
constexpr std::int64_t kDy[] = {0, 1, 0, -1};

std::string pivot_atom(int s, int i, int d) { return "pivot" + args({num(s), num(i), kTurn[d]}); }

void rf_moves(Out& o, const RfInstance& r) {
  for (int s = 1; s <= r.t_moves; ++s) {
    std::vector<std::string> all;
    for (int i = 0; i < r.n_segments; ++i)
      for (int d = 0; d < 2; ++d) {
        o.choice(pivot_atom(s, i, d));
        all.push_back(pivot_atom(s, i, d));
      }
    o.exactly_one(all, "moveAt" + args({num(s)}));
  }
}

std::string rf_pure_asp(const RfInstance& r) {
  Out o;
  const int n = r.n_segments;
  o.comment("rf, pure ASP: segment directions and folded coordinates");
  rf_moves(o, r);
  auto dir = [](int s, int k, int d) { return "dir" + args({num(s), num(k), num(d)}); };
  auto fx = [](int s, int k, std::int64_t v) { return "tfoldx" + args({num(s), num(k), num(v)}); };
  auto fy = [](int s, int k, std::int64_t v) { return "tfoldy" + args({num(s), num(k), num(v)}); };
  // Directions that can hold at each step; others get no rules at all.
  std::set<std::tuple<int, int, int>> reach;
  for (int k = 0; k < n; ++k) {
    o.fact(dir(0, k, 0));
    reach.insert({0, k, 0});
  }
  for (int s = 1; s <= r.t_moves; ++s) {
    for (int k = 0; k < n; ++k) {
      const std::string moved = "moved" + args({num(s), num(k)});
      for (int i = 0; i <= k; ++i)
        for (int d = 0; d < 2; ++d) {
          o.rule(moved, {pivot_atom(s, i, d)});
          o.rule("turned" + args({num(s), num(k), kTurn[d]}), {pivot_atom(s, i, d)});
        }
      for (int D = 0; D < 4; ++D) {
        if (!reach.count({s - 1, k, D})) continue;
        for (int E : {D, (D + 1) % 4, (D + 3) % 4}) reach.insert({s, k, E});
        o.rule(dir(s, k, D), {dir(s - 1, k, D), "not " + moved});
        o.rule(dir(s, k, (D + 3) % 4), {dir(s - 1, k, D), "turned" + args({num(s), num(k), "cw"})});
        o.rule(dir(s, k, (D + 1) % 4), {dir(s - 1, k, D), "turned" + args({num(s), num(k), "ccw"})});
      }
    }
  }
  // (step, vertex, value) triples with at least one rule, per axis.
  std::set<std::tuple<int, int, std::int64_t>> has_x, has_y;
  for (int s = 0; s <= r.t_moves; ++s) {
    o.fact(fx(s, 0, 0));
    o.fact(fy(s, 0, 0));
    has_x.insert({s, 0, 0});
    has_y.insert({s, 0, 0});
    for (int k = 0; k < n; ++k)
      for (std::int64_t v = -k; v <= k; ++v)
        for (int D = 0; D < 4; ++D) {
          if (!reach.count({s, k, D})) continue;
          if (has_x.count({s, k, v})) {
            o.rule(fx(s, k + 1, v + kDx[D]), {fx(s, k, v), dir(s, k, D)});
            has_x.insert({s, k + 1, v + kDx[D]});
          }
          if (has_y.count({s, k, v})) {
            o.rule(fy(s, k + 1, v + kDy[D]), {fy(s, k, v), dir(s, k, D)});
            has_y.insert({s, k + 1, v + kDy[D]});
          }
        }
  }
  auto at = [](int s, int k, std::int64_t px, std::int64_t py) { return "at" + args({num(s), num(k), num(px), num(py)}); };
  for (int s = 1; s <= r.t_moves; ++s) {
    std::set<std::tuple<int, std::int64_t, std::int64_t>> has_at;
    for (int k = 0; k <= n; ++k)
      for (std::int64_t px = -k; px <= k; ++px)
        for (std::int64_t py = -k; py <= k; ++py)
          if (std::llabs(px) + std::llabs(py) <= k && (px + py - k) % 2 == 0 && has_x.count({s, k, px}) &&
              has_y.count({s, k, py})) {
            o.rule(at(s, k, px, py), {fx(s, k, px), fy(s, k, py)});
            has_at.insert({k, px, py});
          }
    // Vertices an odd number of steps apart never meet; neighbours neither.
    for (int a = 0; a <= n; ++a)
      for (int b = a + 2; b <= n; b += 2)
        for (std::int64_t px = -a; px <= a; ++px)
          for (std::int64_t py = -a; py <= a; ++py)
            if (has_at.count({a, px, py}) && has_at.count({b, px, py})) o.forbid({at(s, a, px, py), at(s, b, px, py)});
  }
  for (int k = 0; k <= n; ++k) {
    if (!has_x.count({r.t_moves, k, r.goal[k].x}) || !has_y.count({r.t_moves, k, r.goal[k].y})) {
      o.forbid({});
      continue;
    }
    o.forbid({"not " + fx(r.t_moves, k, r.goal[k].x)});
    o.forbid({"not " + fy(r.t_moves, k, r.goal[k].y)});
  }
  return o.take();
}

std::string rf_true_casp(const RfInstance& r) {
  Out o;
  const int n = r.n_segments;
  const int t = r.t_moves;
  o.comment("rf, CASP: coordinates as constraint variables");
  // Position of vertex k after step s: a variable, or a constant for the
  // anchor vertex and the initial chain.
  auto X = [&](int s, int k) {
    if (k == 0) return Lin();
    if (s == 0) return Lin().add(k);
    return Lin().add(1, "x" + args({num(s), num(k)}));
  };
  auto Y = [&](int s, int k) {
    if (k == 0 || s == 0) return Lin();
    return Lin().add(1, "y" + args({num(s), num(k)}));
  };
  auto mv = [](int s, int i, int d) { return "m" + args({num(s), num(i), kTurn[d]}); };
  for (int s = 1; s <= t; ++s) {
    for (int i = 0; i < n; ++i)
      for (int d = 0; d < 2; ++d) o.var(mv(s, i, d), 0, 1);
  }
  for (int s = 1; s <= t; ++s)
    for (int k = 1; k <= n; ++k) {
      o.var("x" + args({num(s), num(k)}), -k, k);
      o.var("y" + args({num(s), num(k)}), -k, k);
    }
  rf_moves(o, r);
  for (int s = 1; s <= t; ++s)
    for (int i = 0; i < n; ++i)
      for (int d = 0; d < 2; ++d) o.tie(pivot_atom(s, i, d), cx(Lin().add(1, mv(s, i, d)), "#=", 1));

  const std::int64_t big = 4 * static_cast<std::int64_t>(n);
  // |e| <= big * (1 - m), written as two rows.
  auto equal_when = [&](const Lin& e, const std::string& m) {
    o.require(cx(Lin().add(e).add(big, m), "#<=", big));
    o.require(cx(Lin().add(e, -1).add(big, m), "#<=", big));
  };
  for (int s = 1; s <= t; ++s) {
    for (int i = 0; i < n; ++i)
      for (int d = 0; d < 2; ++d) {
        const int sg = kTurnSign[d];
        for (int k = i + 1; k <= n; ++k) {
          // x' = cx + sg (y - cy), y' = cy - sg (x - cx)
          Lin ex = X(s, k);
          ex.add(X(s - 1, i), -1).add(Y(s - 1, k), -sg).add(Y(s - 1, i), sg);
          Lin ey = Y(s, k);
          ey.add(Y(s - 1, i), -1).add(X(s - 1, k), sg).add(X(s - 1, i), -sg);
          equal_when(ex, mv(s, i, d));
          equal_when(ey, mv(s, i, d));
        }
      }
    // Vertex k stays put unless the pivot segment lies before it.
    for (int k = 1; k <= n; ++k) {
      Lin moving;
      for (int i = 0; i < k; ++i)
        for (int d = 0; d < 2; ++d) moving.add(big, mv(s, i, d));
      for (const auto& [a, b] : {std::pair{X(s, k), X(s - 1, k)}, std::pair{Y(s, k), Y(s - 1, k)}}) {
        o.require(cx(Lin().add(a).add(b, -1).add(moving, -1), "#<=", 0));
        o.require(cx(Lin().add(b).add(a, -1).add(moving, -1), "#<=", 0));
      }
    }
    const std::int64_t w = 2 * static_cast<std::int64_t>(n) + 1;
    for (int a = 0; a <= n; ++a)
      for (int b = a + 2; b <= n; b += 2) {
        Lin e;
        e.add(X(s, a), w).add(X(s, b), -w).add(Y(s, a)).add(Y(s, b), -1);
        o.require(cx(e, "#!=", 0));
      }
  }
  for (int k = 0; k <= n; ++k) {
    if (k == 0 || t == 0) {
      const Point fixed{k == 0 ? 0 : k, 0};
      if (fixed != r.goal[k]) o.forbid({});
      continue;
    }
    o.require(cx(X(t, k), "#=", r.goal[k].x));
    o.require(cx(Y(t, k), "#=", r.goal[k].y));
  }
  return o.take();
}

}  // namespace

std::string encode_wseq_text(const WseqInstance& i, Encoding e) {
  validate(i);
  switch (e) {
    case Encoding::pure_asp: return wseq_pure_asp(i);
    case Encoding::true_casp: return wseq_true_casp(i);
    case Encoding::pure_csp: return wseq_pure_csp(i);
  }
  return {};
}

std::string encode_is_text(const IsInstance& i, Encoding e) {
  validate(i);
  switch (e) {
    case Encoding::pure_asp: return is_pure_asp(i);
    case Encoding::true_casp: return is_true_casp(i);
    case Encoding::pure_csp: return is_pure_csp(i);
  }
  return {};
}

std::string encode_rf_text(const RfInstance& i, Encoding e) {
  validate(i);
  switch (e) {
    case Encoding::pure_asp: return rf_pure_asp(i);
    case Encoding::true_casp: return rf_true_casp(i);
    case Encoding::pure_csp: break;
  }
  throw Error(ErrorKind::unsupported, "rf has no pure-csp encoding");
}

std::string encode_text(const Instance& i, Encoding e) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, WseqInstance>) return encode_wseq_text(x, e);
        else if constexpr (std::is_same_v<T, IsInstance>) return encode_is_text(x, e);
        else return encode_rf_text(x, e);
      },
      i);
}

Program encode_wseq(const WseqInstance& i, Encoding e) { return parse_program(encode_wseq_text(i, e)); }
Program encode_is(const IsInstance& i, Encoding e) { return parse_program(encode_is_text(i, e)); }
Program encode_rf(const RfInstance& i, Encoding e) { return parse_program(encode_rf_text(i, e)); }
Program encode(const Instance& i, Encoding e) { return parse_program(encode_text(i, e)); }

}  // namespace casp::bench
