// Copyright 2026 The pathip Authors
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

#include "pathip/oracle.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "pathip/error.hpp"
#include "pathip/validate.hpp"

namespace pathip {
namespace {

using Config = std::vector<Vertex>;

void successors(const Graph& graph, const Config& from, std::size_t robot, Config& next,
                std::vector<Config>& out) {
  if (robot == from.size()) {
    out.push_back(next);
    return;
  }
  std::vector<Vertex> options{from[robot]};
  for (Vertex w : graph.neighbors(from[robot])) options.push_back(w);
  for (Vertex w : options) {
    bool clash = false;
    for (std::size_t q = 0; q < robot && !clash; ++q) {
      if (next[q] == w) clash = true;
      if (w != from[robot] && next[q] == from[robot] && from[q] == w) clash = true;
    }
    if (clash) continue;
    next[robot] = w;
    successors(graph, from, robot + 1, next, out);
  }
}

}  // namespace

std::optional<int> mpp_oracle(const MppInstance& instance, int max_T, long state_cap) {
  instance.validate();
  const Config start = instance.starts;
  std::map<Config, int> seen{{start, 0}};
  std::vector<Config> frontier{start};
  for (int t = 0; t <= max_T; ++t) {
    for (const Config& c : frontier) {
      if (robots_at_goal(instance, c) >= instance.k) return t;
    }
    if (t == max_T) break;
    std::vector<Config> next_frontier;
    for (const Config& c : frontier) {
      std::vector<Config> succ;
      Config scratch(c.size());
      successors(instance.graph, c, 0, scratch, succ);
      for (Config& s : succ) {
        if (seen.emplace(s, t + 1).second) next_frontier.push_back(std::move(s));
      }
      if (static_cast<long>(seen.size()) > state_cap) throw Error("joint state cap exceeded");
    }
    if (next_frontier.empty()) break;
    frontier = std::move(next_frontier);
  }
  return std::nullopt;
}

int mmcr_oracle(const MmcrInstance& instance) {
  instance.validate();
  const int m = static_cast<int>(instance.obstacles.size());
  if (m > 20) throw Error("too many obstacles for subset enumeration");
  for (int size = 0; size <= m; ++size) {
    // Walk all subsets of the given size via a selection mask.
    std::vector<char> pick(m, 0);
    std::fill(pick.end() - size, pick.end(), 1);
    do {
      std::vector<int> removed;
      for (int o = 0; o < m; ++o) {
        if (pick[o]) removed.push_back(o);
      }
      auto allowed = free_vertices(instance, removed);
      bool ok = true;
      for (int r = 0; r < instance.robot_count() && ok; ++r) {
        Vertex s = instance.starts[r];
        ok = allowed[s] && allowed[instance.goals[r]] &&
             !instance.graph.shortest_path(s, instance.goals[r], allowed).empty();
      }
      if (ok) return size;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  throw InvariantError("robot blocked even with every obstacle removed");
}

std::optional<double> rcp_oracle(const RcpInstance& instance, int T, long walk_cap) {
  instance.validate();
  const Graph& g = instance.graph;
  const bool otp = instance.is_otp();
  std::optional<double> best;
  long walks = 0;
  Path walk;

  auto score = [&](double cost) {
    Vertex end = walk.back();
    if (!std::binary_search(instance.goal_set.begin(), instance.goal_set.end(), end)) return;
    if (otp && end != walk.front()) return;
    double value;
    if (otp) {
      double rate = 0;
      for (Vertex v : walk) rate = std::max(rate, instance.rates()[v]);
      value = (instance.budget - cost) * rate;
    } else {
      std::vector<char> visited(g.vertex_count(), 0);
      for (Vertex v : walk) visited[v] = 1;
      value = qcop_reward(instance, visited);
    }
    if (!best || value > *best) best = value;
  };

  auto dfs = [&](auto&& self, double cost) -> void {
    if (++walks > walk_cap) throw Error("walk enumeration cap exceeded");
    score(cost);
    if (static_cast<int>(walk.size()) > T) return;
    Vertex at = walk.back();
    for (Vertex w : g.neighbors(at)) {
      double c = cost + instance.edge_cost(at, w);
      if (c > instance.budget + 1e-9) continue;
      walk.push_back(w);
      self(self, c);
      walk.pop_back();
    }
  };

  for (Vertex s : instance.start_set) {
    walk = {s};
    dfs(dfs, 0.0);
  }
  return best;
}

}  // namespace pathip
