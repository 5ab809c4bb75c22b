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

#include "casp/bench/generators.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "casp/error.hpp"

namespace casp::bench {

std::int64_t wseq_step_cost(const Leaf& cur, const Leaf& prev, int color) {
  switch (color) {
    case 0: return cur.weight + prev.weight;
    case 1: return cur.cardinality + prev.cardinality;
    default: return cur.weight + cur.cardinality;
  }
}

std::int64_t wseq_optimum(const std::vector<Leaf>& leaves) {
  const std::size_t n = leaves.size();
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> pair(n * n, inf);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (int k = 0; k < 3; ++k) pair[a * n + b] = std::min(pair[a * n + b], wseq_step_cost(leaves[b], leaves[a], k));
  // best[mask][last]: cheapest order of `mask` ending in `last`.
  std::vector<std::int64_t> best((std::size_t{1} << n) * n, inf);
  for (std::size_t v = 0; v < n; ++v) best[(std::size_t{1} << v) * n + v] = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    for (std::size_t last = 0; last < n; ++last) {
      const std::int64_t cur = best[mask * n + last];
      if (cur >= inf) continue;
      for (std::size_t nxt = 0; nxt < n; ++nxt) {
        if (mask & (std::size_t{1} << nxt)) continue;
        auto& slot = best[(mask | (std::size_t{1} << nxt)) * n + nxt];
        slot = std::min(slot, cur + pair[last * n + nxt]);
      }
    }
  }
  std::int64_t out = inf;
  const std::size_t full = (std::size_t{1} << n) - 1;
  for (std::size_t last = 0; last < n; ++last) out = std::min(out, best[full * n + last]);
  return out;
}

WseqInstance gen_wseq(int n, std::uint64_t seed) {
  if (n < 2 || n > 12) throw Error(ErrorKind::invalid_argument, "wseq: n must be in [2, 12]");
  Rng rng(seed);
  WseqInstance w;
  for (int i = 0; i < n; ++i) {
    Leaf l;
    l.weight = rng.uniform(1, 5 * n);
    l.cardinality = rng.uniform(1, 5 * n);
    w.leaves.push_back(l);
  }
  const std::int64_t opt = wseq_optimum(w.leaves);
  const std::int64_t pct = rng.uniform(0, 20);
  w.max_cost = opt + opt * pct / 100;
  return w;
}

IsInstance gen_is(int jobs, std::uint64_t seed) {
  if (jobs < 1 || jobs > 10) throw Error(ErrorKind::invalid_argument, "is: job count must be in [1, 10]");
  Rng rng(seed);
  IsInstance s;
  const int ndev = jobs >= 4 ? static_cast<int>(rng.uniform(1, 2)) : 1;
  for (int d = 0; d < ndev; ++d) {
    Device dev{"d" + std::to_string(d), static_cast<int>(rng.uniform(1, 2))};
    if (dev.instance_count == 2 && rng.uniform(0, 2) == 0) {
      s.offline.push_back({dev.id, static_cast<int>(rng.uniform(0, 1))});
    }
    s.devices.push_back(dev);
  }
  for (int j = 0; j < jobs; ++j) {
    Job job;
    job.id = "j" + std::to_string(j);
    job.device = s.devices[static_cast<std::size_t>(rng.uniform(0, ndev - 1))].id;
    job.len = rng.uniform(1, 4);
    job.importance = rng.uniform(1, 3);
    s.jobs.push_back(job);
  }
  std::vector<std::vector<int>> preds(static_cast<std::size_t>(jobs));
  for (int b = 1; b < jobs; ++b) {
    for (int a = 0; a < b; ++a) {
      if (rng.uniform(0, 2 * jobs - 1) == 0) {
        s.precedences.emplace_back(s.jobs[a].id, s.jobs[b].id);
        preds[b].push_back(a);
      }
    }
  }
  // Greedy list schedule in index order, which is topological.
  std::map<std::pair<std::string, int>, std::int64_t> free_at;
  std::vector<std::int64_t> end(static_cast<std::size_t>(jobs), 0);
  std::int64_t makespan = 0;
  for (int j = 0; j < jobs; ++j) {
    const auto& job = s.jobs[j];
    std::int64_t earliest = 0;
    for (int p : preds[j]) earliest = std::max(earliest, end[p]);
    const Device& dev = s.device_of(job);
    std::int64_t best_start = std::numeric_limits<std::int64_t>::max();
    int best_inst = -1;
    for (int i = 0; i < dev.instance_count; ++i) {
      if (s.is_offline(dev.id, i)) continue;
      const std::int64_t st = std::max(earliest, free_at[{dev.id, i}]);
      if (st < best_start) {
        best_start = st;
        best_inst = i;
      }
    }
    end[j] = best_start + job.len;
    free_at[{dev.id, best_inst}] = end[j];
    makespan = std::max(makespan, end[j]);
  }
  std::int64_t penalty = 0;
  for (int j = 0; j < jobs; ++j) {
    auto& job = s.jobs[j];
    job.deadline = rng.uniform(std::max(job.len, end[j] - 3), end[j] + 2);
    penalty += std::max<std::int64_t>(0, end[j] - job.deadline) * job.importance;
  }
  s.max_penalty = penalty;
  s.horizon = std::min<std::int64_t>(40, makespan + rng.uniform(0, 2));
  return s;
}

std::vector<Point> rf_initial(int n) {
  std::vector<Point> out;
  for (int k = 0; k <= n; ++k) out.push_back({k, 0});
  return out;
}

namespace {

std::vector<Point> pivot(const std::vector<Point>& cfg, int segment, int dir) {
  std::vector<Point> out = cfg;
  const Point c = cfg[segment];
  for (std::size_t k = segment + 1; k < cfg.size(); ++k) {
    out[k] = {c.x + dir * (cfg[k].y - c.y), c.y - dir * (cfg[k].x - c.x)};
  }
  return out;
}

bool self_avoiding(const std::vector<Point>& cfg) {
  return std::set<Point>(cfg.begin(), cfg.end()).size() == cfg.size();
}

}  // namespace

RfInstance gen_rf(int n, int t, std::uint64_t seed) {
  if (n < 1 || n > 8) throw Error(ErrorKind::invalid_argument, "rf: n must be in [1, 8]");
  if (t < 0 || t > 5) throw Error(ErrorKind::invalid_argument, "rf: t must be in [0, 5]");
  Rng rng(seed);
  std::vector<Point> cfg = rf_initial(n);
  for (int s = 0; s < t; ++s) {
    std::vector<std::vector<Point>> options;
    for (int i = 0; i < n; ++i) {
      for (int d : {1, -1}) {
        auto next = pivot(cfg, i, d);
        if (self_avoiding(next)) options.push_back(std::move(next));
      }
    }
    cfg = options[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(options.size()) - 1))];
  }
  return RfInstance{n, t, cfg};
}

}  // namespace casp::bench
