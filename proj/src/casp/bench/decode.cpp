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

#include "casp/bench/decode.hpp"

#include <algorithm>
#include <charconv>

#include "casp/error.hpp"

namespace casp::bench {

Solution raw_solution(const Program& p, const CandidateModel& m, const Evaluation& witness) {
  Solution s;
  for (std::size_t v = 0; v < p.decls().size() && v < witness.size(); ++v) s.assignments[p.decls()[v].name] = witness[v];
  for (AtomId a = 0; a < p.atom_count(); ++a) {
    if (!p.is_constraint(a) && m.value(a)) s.assignments[p.atom(a).name] = 1;
  }
  return s;
}

namespace {

struct Call {
  std::string pred;
  std::vector<std::string> args;
};

/// Splits `pred(a,b)` or `pred[a]`; plain names get no arguments.
Call split(const std::string& name) {
  Call c;
  const auto open = name.find_first_of("([");
  if (open == std::string::npos) {
    c.pred = name;
    return c;
  }
  c.pred = name.substr(0, open);
  std::string inner = name.substr(open + 1, name.size() - open - 2);
  std::size_t start = 0;
  for (;;) {
    const auto comma = inner.find(',', start);
    c.args.push_back(inner.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return c;
}

std::int64_t to_int(const std::string& s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::invalid_argument, "expected an integer argument, got '" + s + "'");
  }
  return v;
}

std::string key(const std::string& pred, const std::string& arg) { return pred + "[" + arg + "]"; }

}  // namespace

Solution decode(DomainKind domain, const Solution& raw) {
  Solution out;
  out.moves = raw.moves;
  auto keep = [&](const std::string& k, std::int64_t v) { out.assignments[k] = v; };
  for (const auto& [name, value] : raw.assignments) {
    const Call c = split(name);
    const bool on = value == 1;
    switch (domain) {
      case DomainKind::wseq:
        if (c.pred == "leaf" || c.pred == "color") keep(name, value);
        else if ((c.pred == "leafPos" || c.pred == "x") && c.args.size() == 2 && on)
          keep(key("leaf", c.args[1]), to_int(c.args[0]));
        else if ((c.pred == "posColor" || c.pred == "col") && c.args.size() == 2 && on)
          keep(key("color", c.args[0]), to_int(c.args[1]));
        break;
      case DomainKind::is:
        if (c.pred == "start" && c.args.size() == 1) keep(name, value);
        else if (c.pred == "instance") keep(name, value);
        else if (c.pred == "start" && c.args.size() == 2 && on) keep(key("start", c.args[0]), to_int(c.args[1]));
        else if (c.pred == "s" && c.args.size() == 1) keep(key("start", c.args[0]), value);
        else if ((c.pred == "on_instance" || c.pred == "a") && c.args.size() == 2 && on)
          keep(key("instance", c.args[0]), to_int(c.args[1]));
        break;
      case DomainKind::rf:
        if (c.pred == "pivot" && c.args.size() == 3 && on) {
          const int dir = c.args[2] == "cw" ? 1 : c.args[2] == "ccw" ? -1 : 0;
          if (dir == 0) throw Error(ErrorKind::invalid_argument, "unknown turn '" + c.args[2] + "'");
          out.moves.push_back({static_cast<int>(to_int(c.args[0])), static_cast<int>(to_int(c.args[1])), dir});
        }
        break;
    }
  }
  std::sort(out.moves.begin(), out.moves.end(), [](const Move& a, const Move& b) {
    return std::tie(a.step, a.segment, a.dir) < std::tie(b.step, b.segment, b.dir);
  });
  return out;
}

}  // namespace casp::bench
