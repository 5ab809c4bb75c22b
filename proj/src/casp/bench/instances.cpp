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

#include "casp/bench/instances.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

#include <json.hpp>

#include "casp/error.hpp"

namespace casp::bench {

using ojson = nlohmann::ordered_json;

std::string_view to_string(DomainKind d) {
  switch (d) {
    case DomainKind::wseq: return "wseq";
    case DomainKind::is: return "is";
    case DomainKind::rf: return "rf";
  }
  return "?";
}

std::string_view to_string(Encoding e) {
  switch (e) {
    case Encoding::pure_asp: return "pure-asp";
    case Encoding::true_casp: return "true-casp";
    case Encoding::pure_csp: return "pure-csp";
  }
  return "?";
}

std::optional<DomainKind> parse_domain(std::string_view s) {
  if (s == "wseq") return DomainKind::wseq;
  if (s == "is") return DomainKind::is;
  if (s == "rf") return DomainKind::rf;
  return std::nullopt;
}

std::optional<Encoding> parse_encoding(std::string_view s) {
  if (s == "pure-asp" || s == "pure_asp") return Encoding::pure_asp;
  if (s == "true-casp" || s == "true_casp") return Encoding::true_casp;
  if (s == "pure-csp" || s == "pure_csp") return Encoding::pure_csp;
  return std::nullopt;
}

bool supports(DomainKind d, Encoding e) { return !(d == DomainKind::rf && e == Encoding::pure_csp); }

const Device& IsInstance::device_of(const Job& j) const {
  for (const auto& d : devices)
    if (d.id == j.device) return d;
  throw Error(ErrorKind::invalid_argument, "job '" + j.id + "' names unknown device '" + j.device + "'");
}

bool IsInstance::is_offline(const std::string& device, int instance) const {
  return std::any_of(offline.begin(), offline.end(),
                     [&](const OfflineInstance& o) { return o.device == device && o.instance == instance; });
}

DomainKind domain_of(const Instance& i) {
  return static_cast<DomainKind>(i.index());
}

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::invalid_argument, msg); }

}  // namespace

void validate(const WseqInstance& i) {
  if (i.leaves.size() < 2) invalid("wseq: at least two leaves required");
  if (i.num_colors != 3) invalid("wseq: num_colors must be 3");
  for (const auto& l : i.leaves) {
    if (l.weight < 0 || l.cardinality < 0) invalid("wseq: negative weight or cardinality");
  }
  if (i.max_cost < 0) invalid("wseq: negative max_cost");
}

void validate(const IsInstance& i) {
  std::set<std::string> devs;
  for (const auto& d : i.devices) {
    if (!devs.insert(d.id).second) invalid("is: duplicate device '" + d.id + "'");
    if (d.instance_count < 1) invalid("is: device '" + d.id + "' has no instances");
  }
  std::map<std::string, std::size_t> jobs;
  for (const auto& j : i.jobs) {
    if (!jobs.emplace(j.id, jobs.size()).second) invalid("is: duplicate job '" + j.id + "'");
    if (!devs.count(j.device)) invalid("is: job '" + j.id + "' names unknown device");
    if (j.len < 1) invalid("is: job '" + j.id + "' has len < 1");
    if (j.importance < 1) invalid("is: job '" + j.id + "' has importance < 1");
    if (j.deadline < 0) invalid("is: job '" + j.id + "' has a negative deadline");
  }
  for (const auto& o : i.offline) {
    auto it = std::find_if(i.devices.begin(), i.devices.end(), [&](const Device& d) { return d.id == o.device; });
    if (it == i.devices.end()) invalid("is: offline entry names unknown device");
    if (o.instance < 0 || o.instance >= it->instance_count) invalid("is: offline instance index out of range");
  }
  std::vector<std::vector<std::size_t>> succ(jobs.size());
  for (const auto& [a, b] : i.precedences) {
    if (!jobs.count(a) || !jobs.count(b)) invalid("is: precedence names unknown job");
    succ[jobs[a]].push_back(jobs[b]);
  }
  // Acyclicity by depth-first colouring.
  std::vector<int> mark(jobs.size(), 0);
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    mark[v] = 1;
    for (std::size_t w : succ[v]) {
      if (mark[w] == 1) invalid("is: precedence graph has a cycle");
      if (mark[w] == 0) visit(w);
    }
    mark[v] = 2;
  };
  for (std::size_t v = 0; v < jobs.size(); ++v)
    if (mark[v] == 0) visit(v);
  if (i.horizon < 0) invalid("is: negative horizon");
  if (i.max_penalty < 0) invalid("is: negative max_penalty");
}

void validate(const RfInstance& i) {
  if (i.n_segments < 1) invalid("rf: at least one segment required");
  if (i.t_moves < 0) invalid("rf: negative move count");
  if (i.goal.size() != static_cast<std::size_t>(i.n_segments) + 1) invalid("rf: goal must list n_segments + 1 points");
  for (std::size_t k = 1; k < i.goal.size(); ++k) {
    if (std::llabs(i.goal[k].x - i.goal[k - 1].x) + std::llabs(i.goal[k].y - i.goal[k - 1].y) != 1) {
      invalid("rf: goal segments must have unit length");
    }
  }
  std::set<Point> seen(i.goal.begin(), i.goal.end());
  if (seen.size() != i.goal.size()) invalid("rf: goal is not self-avoiding");
}

void validate(const Instance& i) {
  std::visit([](const auto& x) { validate(x); }, i);
}

namespace {

ojson wseq_json(const WseqInstance& i) {
  ojson j;
  j["domain"] = "wseq";
  ojson leaves = ojson::array();
  for (const auto& l : i.leaves) leaves.push_back({{"weight", l.weight}, {"cardinality", l.cardinality}});
  j["leaves"] = leaves;
  j["max_cost"] = i.max_cost;
  j["num_colors"] = i.num_colors;
  return j;
}

ojson is_json(const IsInstance& i) {
  ojson j;
  j["domain"] = "is";
  ojson devices = ojson::array();
  for (const auto& d : i.devices) devices.push_back({{"id", d.id}, {"instance_count", d.instance_count}});
  j["devices"] = devices;
  ojson jobs = ojson::array();
  for (const auto& x : i.jobs) {
    jobs.push_back({{"id", x.id},
                    {"device", x.device},
                    {"len", x.len},
                    {"deadline", x.deadline},
                    {"importance", x.importance}});
  }
  j["jobs"] = jobs;
  ojson prec = ojson::array();
  for (const auto& [a, b] : i.precedences) prec.push_back(ojson::array({a, b}));
  j["precedences"] = prec;
  ojson off = ojson::array();
  for (const auto& o : i.offline) off.push_back({{"device", o.device}, {"instance", o.instance}});
  j["offline"] = off;
  j["max_penalty"] = i.max_penalty;
  j["horizon"] = i.horizon;
  return j;
}

ojson rf_json(const RfInstance& i) {
  ojson j;
  j["domain"] = "rf";
  j["n_segments"] = i.n_segments;
  j["t_moves"] = i.t_moves;
  ojson goal = ojson::array();
  for (const auto& p : i.goal) goal.push_back(ojson::array({p.x, p.y}));
  j["goal"] = goal;
  return j;
}

template <class T>
T field(const ojson& j, const char* key) {
  if (!j.contains(key)) invalid(std::string("missing field '") + key + "'");
  return j.at(key).get<T>();
}

Instance parse_instance(const ojson& j) {
  const auto tag = field<std::string>(j, "domain");
  if (tag == "wseq") {
    WseqInstance w;
    for (const auto& l : j.at("leaves")) w.leaves.push_back({field<std::int64_t>(l, "weight"), field<std::int64_t>(l, "cardinality")});
    w.max_cost = field<std::int64_t>(j, "max_cost");
    w.num_colors = j.value("num_colors", 3);
    return w;
  }
  if (tag == "is") {
    IsInstance s;
    for (const auto& d : j.at("devices")) s.devices.push_back({field<std::string>(d, "id"), field<int>(d, "instance_count")});
    for (const auto& x : j.at("jobs")) {
      s.jobs.push_back({field<std::string>(x, "id"), field<std::string>(x, "device"), field<std::int64_t>(x, "len"),
                        field<std::int64_t>(x, "deadline"), field<std::int64_t>(x, "importance")});
    }
    if (j.contains("precedences")) {
      for (const auto& p : j.at("precedences")) s.precedences.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    }
    if (j.contains("offline")) {
      for (const auto& o : j.at("offline")) s.offline.push_back({field<std::string>(o, "device"), field<int>(o, "instance")});
    }
    s.max_penalty = field<std::int64_t>(j, "max_penalty");
    s.horizon = field<std::int64_t>(j, "horizon");
    return s;
  }
  if (tag == "rf") {
    RfInstance r;
    r.n_segments = field<int>(j, "n_segments");
    r.t_moves = field<int>(j, "t_moves");
    for (const auto& p : j.at("goal")) r.goal.push_back({p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>()});
    return r;
  }
  invalid("unknown domain '" + tag + "'");
}

}  // namespace

std::string to_json(const Instance& i) {
  ojson j = std::visit(
      [](const auto& x) -> ojson {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, WseqInstance>) return wseq_json(x);
        else if constexpr (std::is_same_v<T, IsInstance>) return is_json(x);
        else return rf_json(x);
      },
      i);
  return j.dump(2) + "\n";
}

Instance instance_from_json(std::string_view text) {
  Instance inst;
  try {
    inst = parse_instance(ojson::parse(text));
  } catch (const nlohmann::json::exception& e) {
    invalid(std::string("malformed instance JSON: ") + e.what());
  }
  validate(inst);
  return inst;
}

std::string to_json(const Solution& s) {
  ojson j;
  ojson a = ojson::object();
  for (const auto& [k, v] : s.assignments) a[k] = v;
  j["assignments"] = a;
  ojson moves = ojson::array();
  for (const auto& m : s.moves) moves.push_back({{"step", m.step}, {"segment", m.segment}, {"dir", m.dir}});
  j["moves"] = moves;
  return j.dump(2) + "\n";
}

Solution solution_from_json(std::string_view text) {
  Solution s;
  try {
    const ojson j = ojson::parse(text);
    if (j.contains("assignments")) {
      for (const auto& [k, v] : j.at("assignments").items()) s.assignments[k] = v.get<std::int64_t>();
    }
    if (j.contains("moves")) {
      for (const auto& m : j.at("moves")) s.moves.push_back({field<int>(m, "step"), field<int>(m, "segment"), field<int>(m, "dir")});
    }
  } catch (const nlohmann::json::exception& e) {
    invalid(std::string("malformed solution JSON: ") + e.what());
  }
  return s;
}

}  // namespace casp::bench
