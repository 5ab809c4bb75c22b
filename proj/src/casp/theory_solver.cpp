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

#include "casp/theory_solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "casp/error.hpp"

namespace casp {
namespace {

Wide floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Wide ceil_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

/// sum(coef * var) <= bound, or sum(coef * var) != bound.
struct Row {
  std::vector<std::pair<VarIndex, Wide>> terms;
  Wide bound = 0;
  bool not_equal = false;
};

/// Normal form of `lhs - rhs`: merged coefficients plus a constant.
struct Linear {
  std::map<VarIndex, Wide> coefs;
  Wide constant = 0;
};

Linear difference(const ConstraintExpr& c) {
  Linear out;
  auto add = [&](const LinExpr& e, Wide sign) {
    for (const auto& t : e.terms) {
      if (t.var) {
        out.coefs[*t.var] += sign * t.coef;
      } else {
        out.constant += sign * t.coef;
      }
    }
  };
  add(c.lhs, 1);
  add(c.rhs, -1);
  std::erase_if(out.coefs, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Row make_row(const Linear& l, Wide sign, Wide bound, bool ne) {
  Row r;
  for (const auto& [v, a] : l.coefs) r.terms.emplace_back(v, sign * a);
  r.bound = bound;
  r.not_equal = ne;
  return r;
}

/// Rows for `lhs - rhs REL 0`; a constant constraint yields either no rows
/// (true) or nullopt (false).
std::optional<std::vector<Row>> normalize(const ConstraintExpr& c) {
  Linear l = difference(c);
  if (l.coefs.empty()) {
    if (holds(c.rel, l.constant, 0)) return std::vector<Row>{};
    return std::nullopt;
  }
  const Wide k = l.constant;
  switch (c.rel) {
    case Rel::le: return std::vector<Row>{make_row(l, 1, -k, false)};
    case Rel::lt: return std::vector<Row>{make_row(l, 1, -k - 1, false)};
    case Rel::ge: return std::vector<Row>{make_row(l, -1, k, false)};
    case Rel::gt: return std::vector<Row>{make_row(l, -1, k - 1, false)};
    case Rel::eq: return std::vector<Row>{make_row(l, 1, -k, false), make_row(l, -1, k, false)};
    case Rel::ne: return std::vector<Row>{make_row(l, 1, -k, true)};
  }
  return std::nullopt;
}

enum class Prop { unchanged, changed, failed };

Prop tighten(Domain& d, Wide lo, Wide hi) {
  bool changed = false;
  if (lo > d.lo) {
    if (lo > d.hi) return Prop::failed;
    d.lo = static_cast<std::int64_t>(lo);
    changed = true;
  }
  if (hi < d.hi) {
    if (hi < d.lo) return Prop::failed;
    d.hi = static_cast<std::int64_t>(hi);
    changed = true;
  }
  return changed ? Prop::changed : Prop::unchanged;
}

/// One pass over a row. For a single inequality one pass already reaches
/// bounds consistency; callers re-run until nothing changes anyway.
template <typename OnChange>
bool propagate_row(const Row& r, std::vector<Domain>& dom, OnChange&& on_change) {
  if (r.not_equal) {
    Wide fixed_sum = 0;
    std::optional<std::pair<VarIndex, Wide>> open;
    for (const auto& [v, a] : r.terms) {
      const auto& d = dom[v];
      if (d.lo == d.hi) {
        fixed_sum += a * d.lo;
      } else if (open) {
        return true;
      } else {
        open = std::make_pair(v, a);
      }
    }
    if (!open) return fixed_sum != r.bound;
    auto [v, a] = *open;
    Wide rest = r.bound - fixed_sum;
    if (rest % a != 0) return true;
    Wide forbidden = rest / a;
    Domain& d = dom[v];
    Prop p = Prop::unchanged;
    if (forbidden == d.lo) p = tighten(d, Wide{d.lo} + 1, d.hi);
    else if (forbidden == d.hi) p = tighten(d, d.lo, Wide{d.hi} - 1);
    if (p == Prop::failed) return false;
    if (p == Prop::changed) on_change(v);
    return true;
  }

  Wide min_sum = 0;
  for (const auto& [v, a] : r.terms) min_sum += a > 0 ? a * dom[v].lo : a * dom[v].hi;
  if (min_sum > r.bound) return false;
  for (const auto& [v, a] : r.terms) {
    Domain& d = dom[v];
    Wide own_min = a > 0 ? a * d.lo : a * d.hi;
    Wide room = r.bound - (min_sum - own_min);
    Prop p = a > 0 ? tighten(d, d.lo, floor_div(room, a)) : tighten(d, ceil_div(room, a), d.hi);
    if (p == Prop::failed) return false;
    if (p == Prop::changed) on_change(v);
  }
  return true;
}

class Search {
 public:
  Search(std::vector<Row> rows, std::span<const VarDecl> decls, const TheoryLimits& limits)
      : rows_(std::move(rows)), limits_(limits) {
    dom_.reserve(decls.size());
    for (const auto& d : decls) dom_.push_back(Domain{d.lo, d.hi});
    watches_.resize(decls.size());
    std::vector<bool> seen(decls.size(), false);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (const auto& [v, a] : rows_[i].terms) {
        watches_[v].push_back(i);
        if (!seen[v]) {
          seen[v] = true;
          vars_.push_back(v);
        }
      }
    }
    std::sort(vars_.begin(), vars_.end());
    queued_.assign(rows_.size(), false);
  }

  TheoryVerdict::Status run() {
    for (std::size_t i = 0; i < rows_.size(); ++i) enqueue(i);
    if (!propagate()) return TheoryVerdict::Status::unsat;
    return dfs() ? TheoryVerdict::Status::sat : TheoryVerdict::Status::unsat;
  }

  Evaluation witness() const {
    Evaluation out;
    out.reserve(dom_.size());
    for (const auto& d : dom_) out.push_back(d.lo);
    return out;
  }

 private:
  void enqueue(std::size_t row) {
    if (!queued_[row]) {
      queued_[row] = true;
      queue_.push_back(row);
    }
  }

  bool propagate() {
    if ((++nodes_ & 1023U) == 0 && limits_.deadline && Clock::now() >= *limits_.deadline) {
      throw BudgetExhausted();
    }
    auto on_change = [this](VarIndex v) {
      for (std::size_t r : watches_[v]) enqueue(r);
    };
    while (!queue_.empty()) {
      std::size_t r = queue_.back();
      queue_.pop_back();
      queued_[r] = false;
      if (!propagate_row(rows_[r], dom_, on_change)) {
        for (std::size_t q : queue_) queued_[q] = false;
        queue_.clear();
        return false;
      }
    }
    return true;
  }

  std::optional<VarIndex> pick() const {
    std::optional<VarIndex> best;
    Wide best_width = 0;
    for (VarIndex v : vars_) {
      Wide width = Wide{dom_[v].hi} - dom_[v].lo;
      if (width == 0) continue;
      if (!best || width < best_width) {
        best = v;
        best_width = width;
      }
    }
    return best;
  }

  bool dfs() {
    auto var = pick();
    if (!var) return true;
    const VarIndex x = *var;
    std::vector<Domain> saved = dom_;
    for (;;) {
      const std::int64_t v = dom_[x].lo;
      dom_[x].hi = v;
      for (std::size_t r : watches_[x]) enqueue(r);
      if (propagate() && dfs()) return true;
      dom_ = saved;
      if (v == dom_[x].hi) return false;
      dom_[x].lo = v + 1;
      for (std::size_t r : watches_[x]) enqueue(r);
      if (!propagate()) return false;
      saved = dom_;
      if (dom_[x].lo == dom_[x].hi) return dfs();
    }
  }

  std::vector<Row> rows_;
  std::vector<Domain> dom_;
  std::vector<std::vector<std::size_t>> watches_;
  std::vector<VarIndex> vars_;
  std::vector<std::size_t> queue_;
  std::vector<bool> queued_;
  const TheoryLimits& limits_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ConstraintExpr gamma(ConstraintLit lit, const GammaTable& table) {
  auto it = table.find(lit.atom);
  if (it == table.end()) {
    throw Error(ErrorKind::invalid_argument, "atom " + std::to_string(lit.atom) + " is not a constraint atom");
  }
  ConstraintExpr c = it->second;
  if (!lit.positive) c.rel = complement(c.rel);
  return c;
}

bool prune_bounds(const ConstraintExpr& c, std::vector<Domain>& domains) {
  auto rows = normalize(c);
  if (!rows) return false;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : *rows) {
      if (!propagate_row(r, domains, [&](VarIndex) { changed = true; })) return false;
    }
  }
  return true;
}

TheoryVerdict solve_constraints(std::span<const ConstraintExpr> cs, std::span<const VarDecl> decls,
                                const TheoryLimits& limits) {
  TheoryVerdict verdict;
  std::vector<Row> rows;
  bool trivially_false = false;
  for (const auto& c : cs) {
    for (const auto& t : c.lhs.terms) {
      if (t.var && *t.var >= decls.size()) throw Error(ErrorKind::undeclared_variable, "undeclared variable");
    }
    for (const auto& t : c.rhs.terms) {
      if (t.var && *t.var >= decls.size()) throw Error(ErrorKind::undeclared_variable, "undeclared variable");
    }
    auto r = normalize(c);
    if (!r) {
      trivially_false = true;
      break;
    }
    for (auto& row : *r) rows.push_back(std::move(row));
  }
  auto unsat = [&] {
    verdict.status = TheoryVerdict::Status::unsat;
    verdict.core.resize(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) verdict.core[i] = i;
    return verdict;
  };
  if (trivially_false) return unsat();

  Search search(std::move(rows), decls, limits);
  try {
    if (search.run() == TheoryVerdict::Status::unsat) return unsat();
  } catch (const BudgetExhausted&) {
    verdict.status = TheoryVerdict::Status::unknown;
    return verdict;
  }
  Evaluation w = search.witness();
  for (const auto& c : cs) {
    if (!satisfies(c, w)) throw std::logic_error("theory solver produced a witness violating a constraint");
  }
  verdict.status = TheoryVerdict::Status::sat;
  verdict.witness = std::move(w);
  return verdict;
}

TheoryVerdict check_literals(std::span<const ConstraintLit> lits, const GammaTable& table,
                             std::span<const VarDecl> decls, const TheoryLimits& limits) {
  std::vector<ConstraintExpr> cs;
  cs.reserve(lits.size());
  for (const auto& l : lits) cs.push_back(gamma(l, table));
  return solve_constraints(cs, decls, limits);
}

std::vector<ConstraintLit> minimize_core(std::span<const ConstraintLit> lits, const GammaTable& table,
                                         std::span<const VarDecl> decls, const TheoryLimits& limits) {
  auto status = [&](std::span<const ConstraintLit> s) {
    auto st = check_literals(s, table, decls, limits).status;
    if (st == TheoryVerdict::Status::unknown) throw BudgetExhausted();
    return st;
  };
  std::vector<ConstraintLit> core(lits.begin(), lits.end());
  if (status(core) != TheoryVerdict::Status::unsat) {
    throw Error(ErrorKind::precondition, "minimize_core called on a satisfiable constraint set");
  }
  for (std::size_t i = 0; i < core.size();) {
    std::vector<ConstraintLit> trial;
    trial.reserve(core.size() - 1);
    for (std::size_t j = 0; j < core.size(); ++j) {
      if (j != i) trial.push_back(core[j]);
    }
    if (status(trial) == TheoryVerdict::Status::unsat) {
      core = std::move(trial);
    } else {
      ++i;
    }
  }
  return core;
}

}  // namespace casp
