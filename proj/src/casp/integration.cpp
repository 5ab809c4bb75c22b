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

#include "casp/integration.hpp"

#include <algorithm>
#include <stdexcept>

#include "casp/error.hpp"

namespace casp {

std::string_view to_string(Schema s) {
  switch (s) {
    case Schema::black_box: return "black";
    case Schema::grey_box: return "grey";
    case Schema::clear_box: return "clear";
  }
  return "?";
}

std::string_view to_string(BlockingMode m) { return m == BlockingMode::full_model ? "model" : "theory"; }

std::optional<Schema> parse_schema(std::string_view s) {
  if (s == "black") return Schema::black_box;
  if (s == "grey" || s == "gray") return Schema::grey_box;
  if (s == "clear") return Schema::clear_box;
  return std::nullopt;
}

std::optional<BlockingMode> parse_blocking(std::string_view s) {
  if (s == "model") return BlockingMode::full_model;
  if (s == "theory") return BlockingMode::theory_only;
  return std::nullopt;
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::sat: return "sat";
    case Outcome::unsat: return "unsat";
    case Outcome::timeout: return "timeout";
  }
  return "?";
}

std::vector<std::pair<std::string, std::uint64_t>> RunStats::to_map() const {
  std::vector<std::pair<std::string, std::uint64_t>> out{
      {"candidates", candidates},
      {"theory_calls", theory_calls},
      {"theory_conflicts", theory_conflicts},
      {"base_instantiations", base_instantiations},
      {"final_rejections", final_rejections},
  };
  for (auto& kv : base.to_map()) out.push_back(std::move(kv));
  return out;
}

namespace {

using Deadline = std::optional<Clock::time_point>;

Deadline deadline_from(const SolveOptions& o, Clock::time_point start) {
  if (!o.timeout) return std::nullopt;
  return start + std::chrono::duration_cast<Clock::duration>(*o.timeout);
}

bool expired(const Deadline& d) { return d && Clock::now() >= *d; }

/// Theory checks with call accounting. An empty literal set is vacuously
/// satisfiable and not counted as a call.
class TheoryGate {
 public:
  struct Verdict {
    TheoryVerdict::Status status = TheoryVerdict::Status::unknown;
    Evaluation witness;
    std::vector<ConstraintLit> reason;
  };

  TheoryGate(const Program& p, bool minimize, RunStats& stats, Deadline deadline)
      : p_(p), minimize_(minimize), stats_(stats), limits_{deadline} {}

  Verdict check(std::span<const ConstraintLit> lits) {
    Verdict v;
    if (lits.empty()) {
      v.status = TheoryVerdict::Status::sat;
      for (const auto& d : p_.decls()) v.witness.push_back(d.lo);
      return v;
    }
    ++stats_.theory_calls;
    TheoryVerdict t = check_literals(lits, p_.gamma_table(), p_.decls(), limits_);
    v.status = t.status;
    if (t.status == TheoryVerdict::Status::sat) {
      v.witness = std::move(*t.witness);
    } else if (t.status == TheoryVerdict::Status::unsat) {
      ++stats_.theory_conflicts;
      if (minimize_) {
        try {
          v.reason = minimize_core(lits, p_.gamma_table(), p_.decls(), limits_);
        } catch (const BudgetExhausted&) {
          v.status = TheoryVerdict::Status::unknown;
        }
      } else {
        for (std::size_t i : t.core) v.reason.push_back(lits[i]);
      }
    }
    return v;
  }

 private:
  const Program& p_;
  bool minimize_;
  RunStats& stats_;
  TheoryLimits limits_;
};

Rule block_model(const CandidateModel& m) {
  Rule r;
  for (AtomId a = 0; a < m.size(); ++a) (m.value(a) ? r.pos : r.neg).push_back(a);
  return r;
}

Rule block_literals(std::span<const ConstraintLit> lits) {
  Rule r;
  for (const auto& l : lits) (l.positive ? r.pos : r.neg).push_back(l.atom);
  return r;
}

/// Shared driver of the three schemas. `next` yields the next theory
/// consistent answer set not excluded so far.
class Driver {
 public:
  Driver(const Program& p, const SolveOptions& o, Clock::time_point start)
      : p_(p),
        pic_(extend_with_choices(p)),
        options_(o),
        deadline_(deadline_from(o, start)),
        gate_(p, o.minimize_core, stats_, deadline_) {}

  Outcome next(BlockingMode mode, CaspSolution& out) {
    switch (options_.schema) {
      case Schema::black_box: return next_lazy(mode, out, true);
      case Schema::grey_box: return next_lazy(mode, out, false);
      case Schema::clear_box: return next_online(out);
    }
    return Outcome::unsat;
  }

  void exclude(const CandidateModel& m) {
    Rule r = block_model(m);
    blocking_.push_back(r);
    if (handle_) handle_->add_falsum_rules(std::span<const Rule>(&r, 1));
  }

  RunStats& stats() { return stats_; }

 private:
  BaseSolverOptions base_options() const {
    BaseSolverOptions b;
    b.seed = options_.seed;
    return b;
  }

  SolveBudget budget() const { return SolveBudget{deadline_, std::nullopt}; }

  Outcome next_lazy(BlockingMode mode, CaspSolution& out, bool fresh_each_time) {
    for (;;) {
      if (expired(deadline_)) return Outcome::timeout;
      std::optional<BaseSolver> fresh;
      BaseSolver* h = nullptr;
      if (fresh_each_time) {
        fresh.emplace(with_extra_rules(pic_, blocking_), base_options());
        ++stats_.base_instantiations;
        h = &*fresh;
      } else {
        if (!handle_) {
          handle_.emplace(pic_, base_options());
          ++stats_.base_instantiations;
        }
        h = &*handle_;
      }
      BaseResult r = h->solve(budget());
      if (fresh_each_time) {
        stats_.base += h->stats();
      } else {
        stats_.base = h->stats();
      }
      stats_.learned_trace.push_back(stats_.base.learned_count);
      if (r == BaseResult::unknown) return Outcome::timeout;
      if (r == BaseResult::unsat) return Outcome::unsat;

      ++stats_.candidates;
      const CandidateModel m = h->model();
      const auto lits = m.constraint_literals(p_);
      auto v = gate_.check(lits);
      if (v.status == TheoryVerdict::Status::unknown) return Outcome::timeout;
      if (v.status == TheoryVerdict::Status::sat) {
        out = CaspSolution{m, std::move(v.witness)};
        return Outcome::sat;
      }
      Rule block = mode == BlockingMode::full_model ? block_model(m) : block_literals(v.reason);
      blocking_.push_back(block);
      if (!fresh_each_time) h->add_falsum_rules(std::span<const Rule>(&block, 1));
    }
  }

  Outcome next_online(CaspSolution& out) {
    if (!handle_) {
      handle_.emplace(pic_, base_options());
      ++stats_.base_instantiations;
      handle_->set_callbacks(OnlineCallbacks{
          [this](std::span<const ConstraintLit>, std::span<const ConstraintLit> all) -> CallbackResult {
            auto v = gate_.check(all);
            if (v.status == TheoryVerdict::Status::unknown) return CallbackResult::abort();
            if (v.status == TheoryVerdict::Status::sat) return CallbackResult::ok();
            return CallbackResult::conflict(std::move(v.reason));
          }});
    }
    for (;;) {
      if (expired(deadline_)) return Outcome::timeout;
      BaseResult r = handle_->solve(budget());
      stats_.base = handle_->stats();
      stats_.learned_trace.push_back(stats_.base.learned_count);
      if (r == BaseResult::unknown) return Outcome::timeout;
      if (r == BaseResult::unsat) return Outcome::unsat;
      ++stats_.candidates;
      const CandidateModel m = handle_->model();
      const auto lits = m.constraint_literals(p_);
      auto v = gate_.check(lits);
      if (v.status == TheoryVerdict::Status::unknown) return Outcome::timeout;
      if (v.status == TheoryVerdict::Status::sat) {
        out = CaspSolution{m, std::move(v.witness)};
        return Outcome::sat;
      }
      // Every constraint literal was already checked during search, so a
      // rejection here means the online check is broken.
      ++stats_.final_rejections;
      Rule block = block_literals(v.reason);
      handle_->add_falsum_rules(std::span<const Rule>(&block, 1));
    }
  }

  const Program& p_;
  Program pic_;
  SolveOptions options_;
  Deadline deadline_;
  RunStats stats_;
  TheoryGate gate_;
  std::vector<Rule> blocking_;
  std::optional<BaseSolver> handle_;
};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

SolveResult run_single(const Program& p, SolveOptions o) {
  const auto start = Clock::now();
  Driver d(p, o, start);
  SolveResult res;
  CaspSolution sol;
  res.outcome = d.next(o.blocking, sol);
  if (res.outcome == Outcome::sat) res.solution = std::move(sol);
  res.stats = d.stats();
  res.stats.wall_ms = elapsed_ms(start);
  return res;
}

}  // namespace

SolveResult solve_black(const Program& p, const SolveOptions& options) {
  SolveOptions o = options;
  o.schema = Schema::black_box;
  return run_single(p, o);
}

SolveResult solve_grey(const Program& p, const SolveOptions& options) {
  SolveOptions o = options;
  o.schema = Schema::grey_box;
  return run_single(p, o);
}

SolveResult solve_clear(const Program& p, const SolveOptions& options) {
  SolveOptions o = options;
  o.schema = Schema::clear_box;
  return run_single(p, o);
}

SolveResult solve(const Program& p, const SolveOptions& options) { return run_single(p, options); }

EnumerationResult enumerate_all(const Program& p, const SolveOptions& options) {
  const auto start = Clock::now();
  Driver d(p, options, start);
  EnumerationResult res;
  for (;;) {
    CaspSolution sol;
    Outcome o = d.next(BlockingMode::full_model, sol);
    if (o == Outcome::unsat) break;
    if (o == Outcome::timeout) {
      res.complete = false;
      break;
    }
    d.exclude(sol.model);
    res.solutions.push_back(std::move(sol));
  }
  std::sort(res.solutions.begin(), res.solutions.end(),
            [](const CaspSolution& a, const CaspSolution& b) { return a.model < b.model; });
  res.stats = d.stats();
  res.stats.wall_ms = elapsed_ms(start);
  return res;
}

}  // namespace casp
