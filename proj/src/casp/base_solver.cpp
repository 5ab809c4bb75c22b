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

#include "casp/base_solver.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <random>
#include <stdexcept>

#include "casp/error.hpp"

namespace casp {

std::vector<std::pair<std::string, std::uint64_t>> BaseStats::to_map() const {
  return {{"decisions", decisions},         {"propagations", propagations},
          {"conflicts", conflicts},         {"restarts", restarts},
          {"learned_count", learned_count}, {"callback_calls", callback_calls},
          {"loop_formulas", loop_formulas}};
}

BaseStats& BaseStats::operator+=(const BaseStats& o) {
  decisions += o.decisions;
  propagations += o.propagations;
  conflicts += o.conflicts;
  restarts += o.restarts;
  learned_count += o.learned_count;
  callback_calls += o.callback_calls;
  loop_formulas += o.loop_formulas;
  return *this;
}

namespace {

using Var = std::uint32_t;
using Lit = std::uint32_t;
using CRef = std::uint32_t;

constexpr CRef kNoReason = ~CRef{0};

Lit mk_lit(Var v, bool negative) { return (v << 1) | (negative ? 1U : 0U); }
Var var_of(Lit l) { return l >> 1; }
bool is_neg(Lit l) { return (l & 1U) != 0; }
Lit neg(Lit l) { return l ^ 1U; }

/// Truth of a rule body as seen by the completion.
struct Body {
  enum class Kind { always, never, lit } kind = Kind::always;
  Lit lit = 0;
};

struct RuleInfo {
  std::optional<AtomId> head;
  std::vector<AtomId> pos;
  std::vector<AtomId> neg;
  std::vector<AtomId> negneg;
  Body body;
};

struct Clause {
  std::vector<Lit> lits;
  bool learnt = false;
};

double luby(double y, std::uint64_t x) {
  std::uint64_t size = 1;
  int seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  double r = 1;
  for (int i = 0; i < seq; ++i) r *= y;
  return r;
}

}  // namespace

struct BaseSolver::Impl {
  // Problem
  std::size_t atom_count = 0;
  std::vector<bool> constraint_var;
  std::vector<AtomId> constraint_atoms;
  std::vector<RuleInfo> rules;
  std::vector<std::vector<std::size_t>> rules_by_head;
  std::map<std::vector<Lit>, Var> aux_by_body;
  std::vector<std::vector<Lit>> aux_def;  // per aux var (index var - atom_count)

  // Assignment
  std::vector<std::int8_t> assigns;  // 1 true, -1 false, 0 unassigned
  std::vector<int> level;
  std::vector<CRef> reason;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim;
  std::size_t qhead = 0;
  bool ok = true;

  // Clauses
  std::vector<Clause> clauses;
  std::vector<std::vector<CRef>> watches;
  std::vector<std::vector<Lit>> learnt_units;

  // Heuristic
  std::vector<double> activity;
  double var_inc = 1.0;
  std::vector<bool> phase;
  std::vector<bool> decision_var;
  std::vector<Var> heap;
  std::vector<int> heap_pos;
  std::vector<bool> seen;

  BaseSolverOptions opts;
  BaseStats stats;
  std::uint64_t restart_count = 0;

  OnlineCallbacks callbacks;
  std::size_t cb_head = 0;

  CandidateModel model;

  std::size_t num_vars() const { return assigns.size(); }
  int decision_level() const { return static_cast<int>(trail_lim.size()); }

  std::int8_t value(Lit l) const {
    std::int8_t a = assigns[var_of(l)];
    return is_neg(l) ? static_cast<std::int8_t>(-a) : a;
  }

  Var new_var(bool decision) {
    Var v = static_cast<Var>(assigns.size());
    assigns.push_back(0);
    level.push_back(0);
    reason.push_back(kNoReason);
    activity.push_back(0.0);
    phase.push_back(false);
    decision_var.push_back(decision);
    heap_pos.push_back(-1);
    seen.push_back(false);
    watches.emplace_back();
    watches.emplace_back();
    return v;
  }

  // ---- activity heap (max activity first, lower index breaks ties) ----
  bool heap_less(Var a, Var b) const {
    return activity[a] > activity[b] || (activity[a] == activity[b] && a < b);
  }
  void heap_up(std::size_t i) {
    Var v = heap[i];
    while (i > 0) {
      std::size_t p = (i - 1) / 2;
      if (!heap_less(v, heap[p])) break;
      heap[i] = heap[p];
      heap_pos[heap[i]] = static_cast<int>(i);
      i = p;
    }
    heap[i] = v;
    heap_pos[v] = static_cast<int>(i);
  }
  void heap_down(std::size_t i) {
    Var v = heap[i];
    for (;;) {
      std::size_t c = 2 * i + 1;
      if (c >= heap.size()) break;
      if (c + 1 < heap.size() && heap_less(heap[c + 1], heap[c])) ++c;
      if (!heap_less(heap[c], v)) break;
      heap[i] = heap[c];
      heap_pos[heap[i]] = static_cast<int>(i);
      i = c;
    }
    heap[i] = v;
    heap_pos[v] = static_cast<int>(i);
  }
  void heap_insert(Var v) {
    if (!decision_var[v] || heap_pos[v] >= 0) return;
    heap.push_back(v);
    heap_up(heap.size() - 1);
  }
  Var heap_pop() {
    Var top = heap.front();
    heap_pos[top] = -1;
    Var last = heap.back();
    heap.pop_back();
    if (!heap.empty()) {
      heap[0] = last;
      heap_pos[last] = 0;
      heap_down(0);
    }
    return top;
  }

  void bump(Var v) {
    if ((activity[v] += var_inc) > 1e100) {
      for (auto& a : activity) a *= 1e-100;
      var_inc *= 1e-100;
    }
    if (heap_pos[v] >= 0) heap_up(static_cast<std::size_t>(heap_pos[v]));
  }
  void decay() { var_inc /= 0.95; }

  // ---- assignment ----
  void enqueue(Lit l, CRef from) {
    Var v = var_of(l);
    assigns[v] = is_neg(l) ? -1 : 1;
    level[v] = decision_level();
    reason[v] = from;
    trail_.push_back(l);
  }

  void cancel_until(int lvl) {
    if (decision_level() <= lvl) return;
    for (std::size_t i = trail_.size(); i > trail_lim[lvl]; --i) {
      Var v = var_of(trail_[i - 1]);
      phase[v] = assigns[v] > 0;
      assigns[v] = 0;
      reason[v] = kNoReason;
      heap_insert(v);
    }
    trail_.resize(trail_lim[lvl]);
    trail_lim.resize(lvl);
    qhead = std::min(qhead, trail_.size());
    cb_head = std::min(cb_head, trail_.size());
  }

  void attach(CRef cr) {
    const auto& c = clauses[cr];
    watches[c.lits[0]].push_back(cr);
    watches[c.lits[1]].push_back(cr);
  }

  std::optional<CRef> propagate() {
    while (qhead < trail_.size()) {
      Lit p = trail_[qhead++];
      Lit false_lit = neg(p);
      ++stats.propagations;
      auto& ws = watches[false_lit];
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < ws.size()) {
        CRef cr = ws[i++];
        auto& lits = clauses[cr].lits;
        if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
        if (value(lits[0]) > 0) {
          ws[j++] = cr;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < lits.size(); ++k) {
          if (value(lits[k]) >= 0) {
            std::swap(lits[1], lits[k]);
            watches[lits[1]].push_back(cr);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = cr;
        if (value(lits[0]) < 0) {
          while (i < ws.size()) ws[j++] = ws[i++];
          ws.resize(j);
          qhead = trail_.size();
          return cr;
        }
        enqueue(lits[0], cr);
      }
      ws.resize(j);
    }
    return std::nullopt;
  }

  // ---- clause addition ----
  static bool normalize(std::vector<Lit>& lits) {
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (std::size_t i = 1; i < lits.size(); ++i) {
      if (lits[i] == neg(lits[i - 1])) return false;  // tautology
    }
    return true;
  }

  /// Root-level addition during construction or between solves.
  void add_root_clause(std::vector<Lit> lits) {
    if (!ok) return;
    assert(decision_level() == 0);
    if (!normalize(lits)) return;
    std::vector<Lit> kept;
    for (Lit l : lits) {
      std::int8_t v = value(l);
      if (v > 0) return;
      if (v == 0) kept.push_back(l);
    }
    if (kept.empty()) {
      ok = false;
    } else if (kept.size() == 1) {
      enqueue(kept[0], kNoReason);
      if (propagate()) ok = false;
    } else {
      clauses.push_back(Clause{std::move(kept), false});
      attach(static_cast<CRef>(clauses.size() - 1));
    }
  }

  /// Adds a clause at any point of the search, restoring the watch
  /// invariants by backjumping. A clause falsified by the current
  /// assignment is treated as a conflict. Returns false on unsatisfiability.
  bool add_clause_in_search(std::vector<Lit> lits) {
    if (!ok) return false;
    if (!normalize(lits)) return true;
    if (lits.empty()) return ok = false;
    auto rank = [&](Lit l) -> std::pair<int, int> {
      std::int8_t v = value(l);
      if (v == 0) return {0, 0};
      if (v > 0) return {1, level[var_of(l)]};
      return {2, -level[var_of(l)]};
    };
    std::stable_sort(lits.begin(), lits.end(), [&](Lit a, Lit b) { return rank(a) < rank(b); });

    if (lits.size() == 1) {
      Lit l = lits[0];
      if (value(l) < 0 && level[var_of(l)] == 0) return ok = false;
      cancel_until(0);
      if (value(l) == 0) enqueue(l, kNoReason);
      learnt_units.push_back(lits);
      return true;
    }

    const std::int8_t v0 = value(lits[0]);
    const std::int8_t v1 = value(lits[1]);
    if (v0 < 0) {
      // Falsified: a conflict.
      const int top = level[var_of(lits[0])];
      ++stats.conflicts;
      if (top == 0) return ok = false;
      cancel_until(top);
      clauses.push_back(Clause{std::move(lits), false});
      CRef cr = static_cast<CRef>(clauses.size() - 1);
      attach(cr);
      const auto& cl = clauses[cr].lits;
      if (level[var_of(cl[1])] < top) {
        cancel_until(level[var_of(cl[1])]);
        enqueue(cl[0], cr);
        return true;
      }
      return learn_from(cr);
    }
    if (v1 < 0 && (v0 == 0 || level[var_of(lits[0])] > level[var_of(lits[1])])) {
      // Unit under the current assignment.
      cancel_until(level[var_of(lits[1])]);
      clauses.push_back(Clause{std::move(lits), false});
      CRef cr = static_cast<CRef>(clauses.size() - 1);
      attach(cr);
      enqueue(clauses[cr].lits[0], cr);
      return true;
    }
    clauses.push_back(Clause{std::move(lits), false});
    attach(static_cast<CRef>(clauses.size() - 1));
    return true;
  }

  // ---- conflict analysis ----
  bool removable(Lit q) const {
    CRef r = reason[var_of(q)];
    if (r == kNoReason) return false;
    const auto& lits = clauses[r].lits;
    for (std::size_t k = 1; k < lits.size(); ++k) {
      Var v = var_of(lits[k]);
      if (!seen[v] && level[v] > 0) return false;
    }
    return true;
  }

  void analyze(CRef confl, std::vector<Lit>& out, int& bt_level) {
    int path = 0;
    std::optional<Lit> p;
    out.assign(1, 0);
    std::size_t idx = trail_.size();
    std::vector<Var> touched;
    do {
      const auto& lits = clauses[confl].lits;
      for (std::size_t k = p ? 1 : 0; k < lits.size(); ++k) {
        Lit q = lits[k];
        Var v = var_of(q);
        if (!seen[v] && level[v] > 0) {
          bump(v);
          seen[v] = true;
          touched.push_back(v);
          if (level[v] >= decision_level()) {
            ++path;
          } else {
            out.push_back(q);
          }
        }
      }
      while (!seen[var_of(trail_[--idx])]) {
      }
      p = trail_[idx];
      confl = reason[var_of(*p)];
      seen[var_of(*p)] = false;
      --path;
    } while (path > 0);
    out[0] = neg(*p);

    std::size_t j = 1;
    for (std::size_t i = 1; i < out.size(); ++i) {
      if (!removable(out[i])) out[j++] = out[i];
    }
    out.resize(j);
    for (Var v : touched) seen[v] = false;

    bt_level = 0;
    if (out.size() > 1) {
      std::size_t max_i = 1;
      for (std::size_t i = 2; i < out.size(); ++i) {
        if (level[var_of(out[i])] > level[var_of(out[max_i])]) max_i = i;
      }
      std::swap(out[1], out[max_i]);
      bt_level = level[var_of(out[1])];
    }
  }

  bool learn_from(CRef confl) {
    if (decision_level() == 0) return ok = false;
    std::vector<Lit> learnt;
    int bt = 0;
    analyze(confl, learnt, bt);
    cancel_until(bt);
    ++stats.learned_count;
    if (learnt.size() == 1) {
      enqueue(learnt[0], kNoReason);
      learnt_units.push_back(learnt);
    } else {
      clauses.push_back(Clause{learnt, true});
      CRef cr = static_cast<CRef>(clauses.size() - 1);
      attach(cr);
      enqueue(learnt[0], cr);
    }
    decay();
    return true;
  }

  // ---- completion ----
  Lit atom_lit(AtomId a, bool positive) const { return mk_lit(a, !positive); }

  Body make_body(const RuleInfo& r) {
    std::vector<Lit> lits;
    for (AtomId a : r.pos) lits.push_back(atom_lit(a, true));
    for (AtomId a : r.neg) lits.push_back(atom_lit(a, false));
    for (AtomId a : r.negneg) lits.push_back(atom_lit(a, true));
    if (!normalize(lits)) return Body{Body::Kind::never, 0};
    if (lits.empty()) return Body{Body::Kind::always, 0};
    if (lits.size() == 1) return Body{Body::Kind::lit, lits[0]};
    auto it = aux_by_body.find(lits);
    if (it != aux_by_body.end()) return Body{Body::Kind::lit, mk_lit(it->second, false)};
    Var b = new_var(false);
    aux_by_body.emplace(lits, b);
    aux_def.push_back(lits);
    Lit bl = mk_lit(b, false);
    std::vector<Lit> big{bl};
    for (Lit l : lits) {
      add_root_clause({neg(bl), l});
      big.push_back(neg(l));
    }
    add_root_clause(big);
    return Body{Body::Kind::lit, bl};
  }

  void load(const Program& pic) {
    atom_count = pic.atom_count();
    for (std::size_t a = 0; a < atom_count; ++a) new_var(true);
    constraint_var.assign(atom_count, false);
    for (AtomId c : pic.constraint_atoms()) {
      constraint_var[c] = true;
      constraint_atoms.push_back(c);
    }
    rules_by_head.assign(atom_count, {});
    for (const auto& r : pic.rules()) add_rule(r);
    for (AtomId a = 0; a < atom_count; ++a) add_support_clause(a);
    for (Var v = 0; v < atom_count; ++v) heap_insert(v);
    if (ok && propagate()) ok = false;
  }

  void add_rule(const Rule& r) {
    RuleInfo info{r.head, r.pos, r.neg, r.negneg, {}};
    info.body = make_body(info);
    std::size_t idx = rules.size();
    rules.push_back(info);
    const Body& b = rules.back().body;
    if (!r.head) {
      if (b.kind == Body::Kind::always) ok = false;
      if (b.kind == Body::Kind::lit) add_root_clause({neg(b.lit)});
      return;
    }
    rules_by_head[*r.head].push_back(idx);
    Lit h = atom_lit(*r.head, true);
    if (b.kind == Body::Kind::always) add_root_clause({h});
    if (b.kind == Body::Kind::lit && b.lit != h) add_root_clause({neg(b.lit), h});
  }

  void add_support_clause(AtomId a) {
    Lit h = atom_lit(a, true);
    std::vector<Lit> c{neg(h)};
    for (std::size_t ri : rules_by_head[a]) {
      const Body& b = rules[ri].body;
      if (b.kind == Body::Kind::always) return;
      if (b.kind == Body::Kind::lit) c.push_back(b.lit);
    }
    add_root_clause(std::move(c));
  }

  // ---- stability ----
  bool body_true(const Body& b) const {
    return b.kind == Body::Kind::always || (b.kind == Body::Kind::lit && value(b.lit) > 0);
  }

  /// Atoms true in the assignment but missing from the least model of the
  /// reduct.
  std::vector<AtomId> unfounded_atoms() const {
    std::vector<bool> in_lm(atom_count, false);
    std::vector<std::size_t> missing(rules.size(), 0);
    std::vector<std::vector<std::size_t>> waiting(atom_count);
    std::vector<AtomId> queue;
    auto derive = [&](AtomId a) {
      if (!in_lm[a]) {
        in_lm[a] = true;
        queue.push_back(a);
      }
    };
    for (std::size_t ri = 0; ri < rules.size(); ++ri) {
      const auto& r = rules[ri];
      if (!r.head) continue;
      bool applicable = std::none_of(r.neg.begin(), r.neg.end(), [&](AtomId a) { return assigns[a] > 0; }) &&
                        std::all_of(r.negneg.begin(), r.negneg.end(), [&](AtomId a) { return assigns[a] > 0; });
      if (!applicable) continue;
      missing[ri] = r.pos.size();
      for (AtomId a : r.pos) waiting[a].push_back(ri);
      if (r.pos.empty()) derive(*r.head);
    }
    while (!queue.empty()) {
      AtomId a = queue.back();
      queue.pop_back();
      for (std::size_t ri : waiting[a]) {
        if (--missing[ri] == 0) derive(*rules[ri].head);
      }
    }
    std::vector<AtomId> out;
    for (AtomId a = 0; a < atom_count; ++a) {
      if (assigns[a] > 0 && !in_lm[a]) out.push_back(a);
    }
    return out;
  }

  /// Smallest sink component of the supported positive dependency graph
  /// restricted to the unfounded atoms.
  std::vector<AtomId> pick_loop(const std::vector<AtomId>& unfounded) const {
    const std::size_t n = unfounded.size();
    std::vector<int> local(atom_count, -1);
    for (std::size_t i = 0; i < n; ++i) local[unfounded[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> succ(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t ri : rules_by_head[unfounded[i]]) {
        const auto& r = rules[ri];
        if (!body_true(r.body)) continue;
        for (AtomId b : r.pos) {
          if (local[b] >= 0) succ[i].push_back(local[b]);
        }
      }
    }
    // Iterative Tarjan.
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    std::vector<std::pair<int, std::size_t>> call;
    int counter = 0;
    int ncomp = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (index[s] >= 0) continue;
      call.emplace_back(static_cast<int>(s), 0);
      while (!call.empty()) {
        auto& [v, k] = call.back();
        if (k == 0 && index[v] < 0) {
          index[v] = low[v] = counter++;
          stack.push_back(v);
          on_stack[v] = true;
        }
        if (k < succ[v].size()) {
          int w = succ[v][k++];
          if (index[w] < 0) {
            call.emplace_back(w, 0);
          } else if (on_stack[w]) {
            low[v] = std::min(low[v], index[w]);
          }
          continue;
        }
        if (low[v] == index[v]) {
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = ncomp;
          } while (w != v);
          ++ncomp;
        }
        int done = v;
        call.pop_back();
        if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      }
    }
    std::vector<bool> is_sink(ncomp, true);
    std::vector<std::size_t> size(ncomp, 0);
    std::vector<AtomId> first(ncomp, ~AtomId{0});
    for (std::size_t i = 0; i < n; ++i) {
      ++size[comp[i]];
      first[comp[i]] = std::min(first[comp[i]], unfounded[i]);
      for (int w : succ[i]) {
        if (comp[w] != comp[i]) is_sink[comp[i]] = false;
      }
    }
    int best = -1;
    for (int c = 0; c < ncomp; ++c) {
      if (!is_sink[c]) continue;
      if (best < 0 || size[c] < size[best] || (size[c] == size[best] && first[c] < first[best])) best = c;
    }
    std::vector<AtomId> out;
    for (std::size_t i = 0; i < n; ++i) {
      if (comp[i] == best) out.push_back(unfounded[i]);
    }
    return out;
  }

  /// Loop formula clauses for `loop`: each member implies one of the
  /// bodies of its rules that have no positive body atom inside the loop.
  std::vector<std::vector<Lit>> loop_clauses(const std::vector<AtomId>& loop) const {
    std::vector<bool> in_loop(atom_count, false);
    for (AtomId a : loop) in_loop[a] = true;
    std::vector<Lit> external;
    for (AtomId a : loop) {
      for (std::size_t ri : rules_by_head[a]) {
        const auto& r = rules[ri];
        if (std::any_of(r.pos.begin(), r.pos.end(), [&](AtomId b) { return in_loop[b]; })) continue;
        if (r.body.kind == Body::Kind::never) continue;
        if (r.body.kind == Body::Kind::always) throw std::logic_error("unfounded atom has an unconditional rule");
        external.push_back(r.body.lit);
      }
    }
    std::vector<std::vector<Lit>> out;
    for (AtomId a : loop) {
      std::vector<Lit> c{atom_lit(a, false)};
      c.insert(c.end(), external.begin(), external.end());
      out.push_back(std::move(c));
    }
    return out;
  }

  // ---- callbacks ----
  /// Returns false if the search should stop (unsat or abort); sets
  /// `aborted` for the latter.
  bool run_callbacks(bool& aborted) {
    if (!callbacks.on_constraint_literals_extended) return true;
    std::vector<ConstraintLit> fresh;
    for (std::size_t i = cb_head; i < trail_.size(); ++i) {
      Var v = var_of(trail_[i]);
      if (v < atom_count && constraint_var[v]) fresh.push_back(ConstraintLit{v, !is_neg(trail_[i])});
    }
    cb_head = trail_.size();
    if (fresh.empty()) return true;
    std::vector<ConstraintLit> all;
    for (AtomId c : constraint_atoms) {
      if (assigns[c] != 0) all.push_back(ConstraintLit{c, assigns[c] > 0});
    }
    ++stats.callback_calls;
    CallbackResult res = callbacks.on_constraint_literals_extended(fresh, all);
    if (res.kind == CallbackResult::Kind::ok) return true;
    if (res.kind == CallbackResult::Kind::abort) {
      aborted = true;
      return false;
    }
    std::vector<Lit> clause;
    for (const auto& l : res.reason) {
      if (l.atom >= atom_count || !constraint_var[l.atom]) {
        throw std::logic_error("callback reason mentions a non-constraint atom");
      }
      if (assigns[l.atom] == 0 || (assigns[l.atom] > 0) != l.positive) {
        throw std::logic_error("callback reason contains a literal that is not currently assigned");
      }
      clause.push_back(atom_lit(l.atom, !l.positive));
    }
    return add_clause_in_search(std::move(clause));
  }

  std::optional<Lit> pick_branch() {
    while (!heap.empty()) {
      Var v = heap_pop();
      if (assigns[v] == 0) return mk_lit(v, !phase[v]);
    }
    return std::nullopt;
  }

  BaseResult search(const SolveBudget& budget) {
    const std::uint64_t conflicts_at_start = stats.conflicts;
    std::uint64_t since_restart = 0;
    double restart_limit = luby(2, restart_count) * static_cast<double>(opts.restart_unit);
    std::uint64_t steps = 0;
    auto out_of_budget = [&] {
      if (budget.conflict_limit && stats.conflicts - conflicts_at_start >= *budget.conflict_limit) return true;
      return budget.deadline && Clock::now() >= *budget.deadline;
    };
    if (budget.deadline && Clock::now() >= *budget.deadline) return BaseResult::unknown;

    for (;;) {
      if (auto confl = propagate()) {
        ++stats.conflicts;
        ++since_restart;
        if (!learn_from(*confl)) return BaseResult::unsat;
        if ((++steps % opts.check_interval) == 0 && out_of_budget()) return BaseResult::unknown;
        if (budget.conflict_limit && stats.conflicts - conflicts_at_start >= *budget.conflict_limit) {
          return BaseResult::unknown;
        }
        if (static_cast<double>(since_restart) >= restart_limit) {
          cancel_until(0);
          ++stats.restarts;
          ++restart_count;
          since_restart = 0;
          restart_limit = luby(2, restart_count) * static_cast<double>(opts.restart_unit);
        }
        continue;
      }
      bool aborted = false;
      std::size_t trail_before = trail_.size();
      int level_before = decision_level();
      if (!run_callbacks(aborted)) return aborted ? BaseResult::unknown : BaseResult::unsat;
      if (trail_.size() != trail_before || decision_level() != level_before || qhead < trail_.size()) continue;

      std::optional<Lit> next = pick_branch();
      if (!next) {
        auto unfounded = unfounded_atoms();
        if (unfounded.empty()) {
          std::vector<bool> m(atom_count);
          for (AtomId a = 0; a < atom_count; ++a) m[a] = assigns[a] > 0;
          model = CandidateModel(std::move(m));
          return BaseResult::sat;
        }
        ++stats.loop_formulas;
        for (auto& c : loop_clauses(pick_loop(unfounded))) {
          if (!add_clause_in_search(std::move(c))) return BaseResult::unsat;
        }
        if ((++steps % opts.check_interval) == 0 && out_of_budget()) return BaseResult::unknown;
        continue;
      }
      ++stats.decisions;
      if ((++steps % opts.check_interval) == 0 && out_of_budget()) return BaseResult::unknown;
      trail_lim.push_back(trail_.size());
      enqueue(*next, kNoReason);
    }
  }
};

BaseSolver::BaseSolver(const Program& pic, BaseSolverOptions options) : impl_(std::make_unique<Impl>()) {
  if (!is_choice_extended(pic)) {
    throw Error(ErrorKind::invalid_argument, "base solver needs a choice-extended program (Pi^C)");
  }
  impl_->opts = options;
  impl_->load(pic);
  if (options.seed != 0) {
    std::mt19937_64 rng(options.seed);
    for (Var v = 0; v < impl_->num_vars(); ++v) {
      impl_->activity[v] = static_cast<double>(rng() % 1000) * 1e-6;
    }
    impl_->heap.clear();
    for (auto& p : impl_->heap_pos) p = -1;
    for (Var v = 0; v < impl_->num_vars(); ++v) {
      if (impl_->assigns[v] == 0) impl_->heap_insert(v);
    }
  }
}

BaseSolver::~BaseSolver() = default;
BaseSolver::BaseSolver(BaseSolver&&) noexcept = default;
BaseSolver& BaseSolver::operator=(BaseSolver&&) noexcept = default;

BaseResult BaseSolver::solve(const SolveBudget& budget) {
  auto& s = *impl_;
  if (!s.ok) return BaseResult::unsat;
  s.cancel_until(0);
  s.cb_head = 0;
  return s.search(budget);
}

const CandidateModel& BaseSolver::model() const { return impl_->model; }

void BaseSolver::add_falsum_rules(std::span<const Rule> rules) {
  auto& s = *impl_;
  for (const auto& r : rules) {
    if (!r.is_falsum()) throw Error(ErrorKind::invalid_argument, "add_falsum_rules expects rules with falsum heads");
    auto known = [&](const std::vector<AtomId>& v) {
      return std::all_of(v.begin(), v.end(), [&](AtomId a) { return a < s.atom_count; });
    };
    if (!known(r.pos) || !known(r.neg) || !known(r.negneg)) {
      throw Error(ErrorKind::invalid_argument, "falsum rule mentions an atom unknown to the solver");
    }
  }
  s.cancel_until(0);
  for (const auto& r : rules) {
    std::vector<Lit> c;
    for (AtomId a : r.pos) c.push_back(s.atom_lit(a, false));
    for (AtomId a : r.neg) c.push_back(s.atom_lit(a, true));
    for (AtomId a : r.negneg) c.push_back(s.atom_lit(a, false));
    s.add_root_clause(std::move(c));
  }
  if (s.ok && s.propagate()) s.ok = false;
}

void BaseSolver::set_callbacks(OnlineCallbacks callbacks) { impl_->callbacks = std::move(callbacks); }

const BaseStats& BaseSolver::stats() const { return impl_->stats; }

std::vector<std::int64_t> BaseSolver::trail() const {
  std::vector<std::int64_t> out;
  for (Lit l : impl_->trail_) {
    auto v = static_cast<std::int64_t>(var_of(l)) + 1;
    out.push_back(is_neg(l) ? -v : v);
  }
  return out;
}

std::size_t BaseSolver::learned_clause_count() const {
  std::size_t n = impl_->learnt_units.size();
  for (const auto& c : impl_->clauses) n += c.learnt ? 1 : 0;
  return n;
}

bool BaseSolver::learned_clauses_hold(const CandidateModel& m) const {
  const auto& s = *impl_;
  std::vector<bool> val(s.num_vars(), false);
  for (AtomId a = 0; a < s.atom_count; ++a) val[a] = m.value(a);
  auto lit_true = [&](Lit l) { return val[var_of(l)] != is_neg(l); };
  for (std::size_t i = 0; i < s.aux_def.size(); ++i) {
    const auto& def = s.aux_def[i];
    val[s.atom_count + i] = std::all_of(def.begin(), def.end(), lit_true);
  }
  auto holds_clause = [&](const std::vector<Lit>& c) { return std::any_of(c.begin(), c.end(), lit_true); };
  for (const auto& c : s.clauses) {
    if (c.learnt && !holds_clause(c.lits)) return false;
  }
  return std::all_of(s.learnt_units.begin(), s.learnt_units.end(), holds_clause);
}

}  // namespace casp
