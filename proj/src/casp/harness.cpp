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

#include "casp/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "casp/bench/decode.hpp"
#include "casp/bench/encoders.hpp"
#include "casp/bench/generators.hpp"
#include "casp/bench/verify.hpp"
#include "casp/error.hpp"

namespace casp {

using bench::DomainKind;
using bench::Encoding;

namespace {

[[noreturn]] void bad_config(const std::string& m) { throw Error(ErrorKind::invalid_argument, "bench config: " + m); }

template <class T, class F>
std::vector<T> parse_list(const nlohmann::json& j, const char* key, F&& f) {
  std::vector<T> out;
  if (!j.contains(key)) return out;
  for (const auto& x : j.at(key)) out.push_back(f(x));
  return out;
}

}  // namespace

BenchConfig bench_config_from_json(std::string_view text) {
  BenchConfig c;
  try {
    const auto j = nlohmann::json::parse(text);
    c.domains = parse_list<DomainKind>(j, "domains", [](const nlohmann::json& x) {
      auto d = bench::parse_domain(x.get<std::string>());
      if (!d) bad_config("unknown domain " + x.dump());
      return *d;
    });
    c.encodings = parse_list<Encoding>(j, "encodings", [](const nlohmann::json& x) {
      auto e = bench::parse_encoding(x.get<std::string>());
      if (!e) bad_config("unknown encoding " + x.dump());
      return *e;
    });
    c.schemas = parse_list<Schema>(j, "schemas", [](const nlohmann::json& x) {
      auto s = parse_schema(x.get<std::string>());
      if (!s) bad_config("unknown schema " + x.dump());
      return *s;
    });
    c.seeds = parse_list<std::uint64_t>(j, "seeds", [](const nlohmann::json& x) { return x.get<std::uint64_t>(); });
    if (j.contains("sizes")) {
      const auto& s = j.at("sizes");
      c.wseq_sizes = parse_list<int>(s, "wseq", [](const nlohmann::json& x) { return x.get<int>(); });
      c.is_sizes = parse_list<int>(s, "is", [](const nlohmann::json& x) { return x.get<int>(); });
      c.rf_sizes = parse_list<std::pair<int, int>>(s, "rf", [](const nlohmann::json& x) {
        return std::pair{x.at(0).get<int>(), x.at(1).get<int>()};
      });
    }
    if (j.contains("blocking")) {
      auto b = parse_blocking(j.at("blocking").get<std::string>());
      if (!b) bad_config("blocking must be model or theory");
      c.blocking = *b;
    }
    if (j.contains("minimize_core")) {
      const auto& m = j.at("minimize_core");
      if (m.is_boolean()) {
        c.minimize_core.fill(m.get<bool>());
      } else if (m.is_object()) {
        for (const auto& [k, v] : m.items()) {
          auto d = bench::parse_domain(k);
          if (!d) bad_config("unknown domain in minimize_core: " + k);
          c.minimize_core[static_cast<std::size_t>(*d)] = v.get<bool>();
        }
      } else {
        bad_config("minimize_core must be a bool or an object");
      }
    }
    c.timeout_s = j.value("timeout_s", c.timeout_s);
    c.workers = j.value("workers", 1u);
    if (c.timeout_s < 0) bad_config("timeout_s must be non-negative");
    if (c.workers == 0) c.workers = 1;
  } catch (const nlohmann::json::exception& e) {
    bad_config(e.what());
  }
  return c;
}

namespace {

struct Prepared {
  DomainKind domain;
  std::string id;
  std::optional<bench::Instance> instance;
  std::string error;
};

std::vector<Prepared> prepare(const BenchConfig& c) {
  std::vector<Prepared> out;
  for (DomainKind d : c.domains) {
    for (std::uint64_t seed : c.seeds) {
      auto add = [&](std::string id, auto&& make) {
        Prepared p{d, std::move(id), std::nullopt, {}};
        try {
          p.instance = make();
        } catch (const std::exception& e) {
          p.error = e.what();
        }
        out.push_back(std::move(p));
      };
      const std::string s = "-s" + std::to_string(seed);
      switch (d) {
        case DomainKind::wseq:
          for (int n : c.wseq_sizes) add("wseq-n" + std::to_string(n) + s, [&] { return bench::Instance{bench::gen_wseq(n, seed)}; });
          break;
        case DomainKind::is:
          for (int n : c.is_sizes) add("is-j" + std::to_string(n) + s, [&] { return bench::Instance{bench::gen_is(n, seed)}; });
          break;
        case DomainKind::rf:
          for (auto [n, t] : c.rf_sizes) {
            add("rf-n" + std::to_string(n) + "-t" + std::to_string(t) + s,
                [&] { return bench::Instance{bench::gen_rf(n, t, seed)}; });
          }
          break;
      }
    }
  }
  return out;
}

std::string result_name(Outcome o) { return std::string(to_string(o)); }

auto sort_key(const RunRecord& r) {
  return std::make_tuple(std::string(bench::to_string(r.domain)), r.instance, std::string(bench::to_string(r.encoding)),
                         std::string(to_string(r.schema)));
}

}  // namespace

BenchReport run_bench(const BenchConfig& c) {
  const auto instances = prepare(c);
  struct Slot {
    std::size_t instance;
    Encoding encoding;
    std::optional<Program> program;
    std::string error;
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (Encoding e : c.encodings) {
      if (!bench::supports(instances[i].domain, e)) continue;
      Slot s{i, e, std::nullopt, instances[i].error};
      if (instances[i].instance) {
        try {
          s.program = bench::encode(*instances[i].instance, e);
        } catch (const std::exception& ex) {
          s.error = ex.what();
        }
      }
      slots.push_back(std::move(s));
    }
  }
  std::vector<std::pair<std::size_t, Schema>> tasks;
  for (std::size_t s = 0; s < slots.size(); ++s)
    for (Schema sc : c.schemas) tasks.emplace_back(s, sc);

  std::vector<RunRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= tasks.size()) return;
      const auto& [si, schema] = tasks[k];
      const Slot& slot = slots[si];
      const Prepared& inst = instances[slot.instance];
      RunRecord& rec = records[k];
      rec.domain = inst.domain;
      rec.encoding = slot.encoding;
      rec.instance = inst.id;
      rec.schema = schema;
      rec.blocking = schema == Schema::clear_box ? "none" : std::string(to_string(c.blocking));
      if (!slot.program) {
        rec.result = "error";
        rec.message = slot.error;
        continue;
      }
      try {
        SolveOptions o;
        o.schema = schema;
        o.blocking = c.blocking;
        o.minimize_core = c.minimize_core[static_cast<std::size_t>(inst.domain)];
        o.timeout = std::chrono::duration<double>(c.timeout_s);
        SolveResult r = solve(*slot.program, o);
        rec.result = result_name(r.outcome);
        rec.stats = std::move(r.stats);
        if (r.solution) {
          const auto raw = bench::raw_solution(*slot.program, r.solution->model, r.solution->witness);
          const auto v = bench::verify(*inst.instance, bench::decode(inst.domain, raw));
          rec.verified = v.ok;
          rec.message = v.message;
        }
      } catch (const std::exception& e) {
        rec.result = "error";
        rec.message = e.what();
      }
    }
  };
  const unsigned nworkers = std::max(1u, std::min<unsigned>(c.workers, static_cast<unsigned>(tasks.size())));
  if (nworkers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < nworkers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  BenchReport rep;
  rep.records = std::move(records);
  std::stable_sort(rep.records.begin(), rep.records.end(),
                   [](const RunRecord& a, const RunRecord& b) { return sort_key(a) < sort_key(b); });

  // Audits. Timeouts and errors carry no verdict and are not compared.
  std::map<std::pair<std::string, std::string>, std::set<std::string>> by_encoding;
  std::map<std::string, std::map<std::string, std::set<std::string>>> by_instance;
  for (const auto& r : rep.records) {
    const std::string enc(bench::to_string(r.encoding));
    if (r.result == "sat" || r.result == "unsat") {
      by_encoding[{r.instance, enc}].insert(r.result);
      by_instance[r.instance][enc].insert(r.result);
    }
    if (r.verified && !*r.verified) {
      rep.verifier_failures.push_back(r.instance + " " + enc + " " + std::string(to_string(r.schema)) + ": " + r.message);
    }
  }
  for (const auto& [k, v] : by_encoding) {
    if (v.size() > 1) rep.schema_disagreements.push_back(k.first + " " + k.second);
  }
  for (const auto& [inst, encs] : by_instance) {
    std::set<std::string> all;
    for (const auto& [e, v] : encs) all.insert(v.begin(), v.end());
    if (all.size() > 1) rep.encoding_disagreements.push_back(inst);
  }
  return rep;
}

std::string bench_csv(const BenchReport& r) {
  std::string out(kCsvHeader);
  out += "\n";
  char ms[64];
  for (const auto& x : r.records) {
    std::snprintf(ms, sizeof ms, "%.3f", x.stats.wall_ms);
    out += std::string(bench::to_string(x.domain)) + "," + std::string(bench::to_string(x.encoding)) + "," + x.instance +
           "," + std::string(to_string(x.schema)) + "," + x.blocking + "," + x.result + "," + ms + "," +
           std::to_string(x.stats.base.decisions) + "," + std::to_string(x.stats.base.conflicts) + "," +
           std::to_string(x.stats.candidates) + "," + std::to_string(x.stats.theory_calls) + "," +
           std::to_string(x.stats.theory_conflicts) + "," + std::to_string(x.stats.base_instantiations) + "," +
           std::to_string(x.stats.base.learned_count) + "\n";
  }
  return out;
}

std::string bench_totals(const BenchReport& r) {
  struct Tot {
    std::uint64_t runs = 0, sat = 0, unsat = 0, timeout = 0, error = 0;
    double wall = 0;
    std::uint64_t candidates = 0, calls = 0, conflicts = 0, decisions = 0;
  };
  std::map<std::pair<std::string, std::string>, Tot> tot;
  for (const auto& x : r.records) {
    Tot& t = tot[{std::string(to_string(x.schema)), std::string(bench::to_string(x.encoding))}];
    ++t.runs;
    if (x.result == "sat") ++t.sat;
    else if (x.result == "unsat") ++t.unsat;
    else if (x.result == "timeout") ++t.timeout;
    else ++t.error;
    t.wall += x.stats.wall_ms;
    t.candidates += x.stats.candidates;
    t.calls += x.stats.theory_calls;
    t.conflicts += x.stats.theory_conflicts;
    t.decisions += x.stats.base.decisions;
  }
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-7s %-10s %5s %5s %5s %7s %5s %12s %10s %12s %16s %10s\n", "schema", "encoding",
                "runs", "sat", "unsat", "timeout", "error", "wall_ms", "candidates", "theory_calls", "theory_conflicts",
                "decisions");
  out += line;
  for (const auto& [k, t] : tot) {
    std::snprintf(line, sizeof line, "%-7s %-10s %5llu %5llu %5llu %7llu %5llu %12.1f %10llu %12llu %16llu %10llu\n",
                  k.first.c_str(), k.second.c_str(), static_cast<unsigned long long>(t.runs),
                  static_cast<unsigned long long>(t.sat), static_cast<unsigned long long>(t.unsat),
                  static_cast<unsigned long long>(t.timeout), static_cast<unsigned long long>(t.error), t.wall,
                  static_cast<unsigned long long>(t.candidates), static_cast<unsigned long long>(t.calls),
                  static_cast<unsigned long long>(t.conflicts), static_cast<unsigned long long>(t.decisions));
    out += line;
  }
  out += "schema disagreements: " + std::to_string(r.schema_disagreements.size()) + "\n";
  for (const auto& s : r.schema_disagreements) out += "  " + s + "\n";
  out += "encoding disagreements: " + std::to_string(r.encoding_disagreements.size()) + "\n";
  for (const auto& s : r.encoding_disagreements) out += "  " + s + "\n";
  out += "verifier failures: " + std::to_string(r.verifier_failures.size()) + "\n";
  for (const auto& s : r.verifier_failures) out += "  " + s + "\n";
  return out;
}

namespace {

std::string model_line(const Program& p, const CandidateModel& m) {
  std::string atoms, lits;
  for (AtomId a = 0; a < p.atom_count(); ++a) {
    if (p.is_constraint(a)) {
      lits += (lits.empty() ? "" : ", ") + std::string(m.value(a) ? "" : "not ") + p.atom(a).name;
    } else if (m.value(a)) {
      atoms += (atoms.empty() ? "" : " ") + p.atom(a).name;
    }
  }
  return "atoms: " + atoms + "\nconstraints: " + lits + "\n";
}

std::string witness_line(const Program& p, const Evaluation& w) {
  std::string s = "witness:";
  for (std::size_t v = 0; v < p.decls().size() && v < w.size(); ++v) s += " " + p.decls()[v].name + "=" + std::to_string(w[v]);
  return s + "\n";
}

std::string stats_line(const RunStats& st) {
  std::string s = "stats:";
  for (const auto& [k, v] : st.to_map()) s += " " + k + "=" + std::to_string(v);
  char ms[64];
  std::snprintf(ms, sizeof ms, " wall_ms=%.3f", st.wall_ms);
  return s + ms + "\n";
}

std::string outcome_word(Outcome o) {
  switch (o) {
    case Outcome::sat: return "SAT";
    case Outcome::unsat: return "UNSAT";
    case Outcome::timeout: return "TIMEOUT";
  }
  return "?";
}

}  // namespace

std::string format_solve_text(const Program& p, const SolveResult& r) {
  std::string out = outcome_word(r.outcome) + "\n";
  if (r.solution) out += model_line(p, r.solution->model) + witness_line(p, r.solution->witness);
  return out + stats_line(r.stats);
}

std::string format_enumeration_text(const Program& p, const EnumerationResult& r) {
  std::string out;
  for (std::size_t i = 0; i < r.solutions.size(); ++i) {
    out += "Answer " + std::to_string(i + 1) + "\n" + model_line(p, r.solutions[i].model) +
           witness_line(p, r.solutions[i].witness);
  }
  out += "answer sets: " + std::to_string(r.solutions.size()) + (r.complete ? "" : " (incomplete)") + "\n";
  out += !r.complete ? "TIMEOUT\n" : r.solutions.empty() ? "UNSAT\n" : "SAT\n";
  return out + stats_line(r.stats);
}

std::string format_solution_json(const Program& p, const SolveResult& r) {
  if (!r.solution) return "{}\n";
  return bench::to_json(bench::raw_solution(p, r.solution->model, r.solution->witness));
}

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::sat: return 10;
    case Outcome::unsat: return 20;
    case Outcome::timeout: return 30;
  }
  return 1;
}

}  // namespace casp
