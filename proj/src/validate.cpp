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

#include "pathip/validate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pathip/error.hpp"

namespace pathip {

bool Verdict::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

std::string Verdict::summary() const {
  if (ok()) return "ok";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.message;
  }
  return out;
}

int robots_at_goal(const MppInstance& instance, std::span<const Vertex> final_positions) {
  const auto group_of = instance.group_of_robot();
  int count = 0;
  for (int r = 0; r < instance.robot_count(); ++r) {
    if (group_of[r] < 0) {
      count += final_positions[r] == instance.goals[r];
      continue;
    }
    const auto& group = instance.groups[group_of[r]];
    count += std::any_of(group.begin(), group.end(), [&](int other) {
      return instance.goals[other] == final_positions[r];
    });
  }
  return count;
}

Verdict validate_mpp_solution(const MppInstance& instance, const Solution& solution) {
  Verdict verdict;
  auto report = [&](ViolationKind kind, int robot, int other, int time, std::string msg) {
    verdict.violations.push_back({kind, robot, other, time, std::move(msg)});
  };
  const auto& paths = solution.paths;
  const int n = instance.robot_count();
  if (static_cast<int>(paths.size()) != n) {
    report(ViolationKind::kShape, -1, -1, -1,
           "expected " + std::to_string(n) + " paths, got " + std::to_string(paths.size()));
    return verdict;
  }
  if (n == 0) return verdict;
  const size_t length = paths[0].size();
  for (int r = 0; r < n; ++r) {
    if (paths[r].empty() || paths[r].size() != length) {
      report(ViolationKind::kShape, r, -1, -1,
             "path of robot " + std::to_string(r) + " has a different length");
      return verdict;
    }
  }
  const int horizon = static_cast<int>(length) - 1;
  const Graph& g = instance.graph;
  for (int r = 0; r < n; ++r) {
    if (paths[r][0] != instance.starts[r]) {
      report(ViolationKind::kWrongStart, r, -1, 0,
             "robot " + std::to_string(r) + " does not begin at its start");
    }
    for (int t = 0; t <= horizon; ++t) {
      Vertex v = paths[r][t];
      bool ok = g.contains(v) &&
                (t == 0 || v == paths[r][t - 1] || g.has_edge(paths[r][t - 1], v));
      if (!ok) {
        report(ViolationKind::kInvalidMove, r, -1, t,
               "robot " + std::to_string(r) + " makes an invalid move at t=" +
                   std::to_string(t));
      }
    }
  }
  for (int t = 0; t <= horizon; ++t) {
    std::map<Vertex, int> occupant;
    for (int r = 0; r < n; ++r) {
      auto [it, fresh] = occupant.emplace(paths[r][t], r);
      if (!fresh) {
        report(ViolationKind::kVertexCollision, it->second, r, t,
               "robots " + std::to_string(it->second) + " and " + std::to_string(r) +
                   " share vertex " + std::to_string(paths[r][t]) + " at t=" +
                   std::to_string(t));
      }
    }
    if (t == 0) continue;
    std::map<std::pair<Vertex, Vertex>, int> moves;
    for (int r = 0; r < n; ++r) {
      Vertex a = paths[r][t - 1], b = paths[r][t];
      if (a != b) moves.emplace(std::make_pair(a, b), r);
    }
    for (const auto& [move, r] : moves) {
      auto back = moves.find({move.second, move.first});
      if (back != moves.end() && r < back->second) {
        report(ViolationKind::kEdgeSwap, r, back->second, t,
               "robots " + std::to_string(r) + " and " + std::to_string(back->second) +
                   " swap along edge (" + std::to_string(move.first) + ", " +
                   std::to_string(move.second) + ") at t=" + std::to_string(t));
      }
    }
  }
  std::vector<Vertex> finals;
  for (const auto& p : paths) finals.push_back(p.back());
  int reached = robots_at_goal(instance, finals);
  if (reached < instance.k) {
    report(ViolationKind::kTooFewAtGoal, -1, -1, horizon,
           "only " + std::to_string(reached) + " robots at goals, need " +
               std::to_string(instance.k));
  }
  return verdict;
}

std::vector<char> free_vertices(const MmcrInstance& instance, std::span<const int> removed) {
  std::set<int> gone(removed.begin(), removed.end());
  std::vector<char> allowed(instance.graph.vertex_count(), 1);
  for (int i = 0; i < static_cast<int>(instance.obstacles.size()); ++i) {
    if (gone.count(i)) continue;
    for (Vertex v : instance.obstacles[i]) allowed[v] = 0;
  }
  return allowed;
}

Verdict validate_mmcr_solution(const MmcrInstance& instance, const Solution& solution) {
  Verdict verdict;
  const int m = static_cast<int>(instance.obstacles.size());
  for (int index : solution.removed_obstacles) {
    if (index < 0 || index >= m) {
      verdict.violations.push_back({ViolationKind::kBadRemoval, -1, -1, -1,
                                    "removed obstacle " + std::to_string(index) +
                                        " does not exist"});
      return verdict;
    }
  }
  auto allowed = free_vertices(instance, solution.removed_obstacles);
  for (int r = 0; r < instance.robot_count(); ++r) {
    Vertex s = instance.starts[r];
    auto dist = instance.graph.bfs_distances(std::span<const Vertex>(&s, 1), allowed);
    if (dist[instance.goals[r]] == kUnreachable) {
      verdict.violations.push_back({ViolationKind::kBlocked, r, -1, -1,
                                    "robot " + std::to_string(r) +
                                        " has no obstacle-free route"});
      return verdict;
    }
  }
  return verdict;
}

double qcop_reward(const RcpInstance& instance, std::span<const char> visited) {
  const Graph& g = instance.graph;
  const auto& r = instance.rewards();
  double total = 0.0;
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    if (!visited[i]) continue;
    total += r[i];
    for (Vertex j : g.neighbors(i)) {
      if (!visited[j]) total += r[j] / g.degree(j);
    }
  }
  return total;
}

RcpValue evaluate_rcp(const RcpInstance& instance, std::span<const Vertex> path,
                      std::span<const double> dwell) {
  const Graph& g = instance.graph;
  if (path.empty() || !g.is_walk(path)) throw InvariantError("path is not a walk in the graph");
  std::vector<char> visited(g.vertex_count(), 0);
  RcpValue value;
  for (size_t t = 0; t < path.size(); ++t) {
    visited[path[t]] = 1;
    if (t > 0) value.cost += instance.edge_cost(path[t - 1], path[t]);
  }
  if (!dwell.empty() && static_cast<int>(dwell.size()) != g.vertex_count()) {
    throw InvariantError("dwell times must list one value per vertex");
  }
  for (size_t v = 0; v < dwell.size(); ++v) {
    if (dwell[v] != 0.0 && !visited[v]) {
      throw InvariantError("dwell time at unvisited vertex " + std::to_string(v));
    }
  }
  if (instance.is_otp()) {
    const auto& rate = instance.rates();
    for (size_t v = 0; v < dwell.size(); ++v) {
      value.reward += rate[v] * dwell[v];
      value.cost += dwell[v];
    }
  } else {
    value.reward = qcop_reward(instance, visited);
  }
  return value;
}

}  // namespace pathip
