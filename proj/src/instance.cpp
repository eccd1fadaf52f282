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

#include "pathip/instance.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pathip/error.hpp"

namespace pathip {
namespace {

void require_connected(const Graph& graph) {
  if (graph.vertex_count() == 0) throw InvariantError("graph has no vertices");
  if (!graph.is_connected()) throw InvariantError("graph disconnected");
}

void require_vertices(const Graph& graph, const std::vector<Vertex>& list,
                      const std::string& what, bool distinct) {
  std::set<Vertex> seen;
  for (Vertex v : list) {
    if (!graph.contains(v)) {
      throw InvariantError(what + " vertex " + std::to_string(v) + " out of range");
    }
    if (distinct && !seen.insert(v).second) {
      throw InvariantError(what + " are not pairwise distinct (vertex " +
                           std::to_string(v) + " repeats)");
    }
  }
}

void require_robot_lists(const Graph& graph, const std::vector<Vertex>& starts,
                         const std::vector<Vertex>& goals) {
  if (starts.size() != goals.size()) {
    throw InvariantError("starts and goals differ in length");
  }
  require_vertices(graph, starts, "starts", true);
  require_vertices(graph, goals, "goals", true);
}

void require_nonnegative(const std::vector<double>& values, const std::string& what) {
  for (double x : values) {
    if (!std::isfinite(x) || x < 0.0) {
      throw InvariantError(what + " must be finite and non-negative");
    }
  }
}

}  // namespace

void MppInstance::validate() const {
  require_connected(graph);
  require_robot_lists(graph, starts, goals);
  const int n = robot_count();
  if (n == 0 ? k != 0 : (k < 1 || k > n)) {
    throw InvariantError("k must satisfy 1 <= k <= n (got k=" + std::to_string(k) +
                         ", n=" + std::to_string(n) + ")");
  }
  std::vector<char> used(n, 0);
  for (const auto& group : groups) {
    if (group.empty()) throw InvariantError("empty robot group");
    for (int r : group) {
      if (r < 0 || r >= n) {
        throw InvariantError("group references robot " + std::to_string(r) +
                             " out of range");
      }
      if (used[r]) {
        throw InvariantError("robot " + std::to_string(r) + " is in two groups");
      }
      used[r] = 1;
    }
  }
}

std::vector<int> MppInstance::group_of_robot() const {
  std::vector<int> out(robot_count(), -1);
  for (int g = 0; g < static_cast<int>(groups.size()); ++g) {
    for (int r : groups[g]) out[r] = g;
  }
  return out;
}

void MmcrInstance::validate() const {
  require_connected(graph);
  require_robot_lists(graph, starts, goals);
  for (size_t i = 0; i < obstacles.size(); ++i) {
    if (obstacles[i].empty()) {
      throw InvariantError("obstacle " + std::to_string(i) + " is empty");
    }
    require_vertices(graph, obstacles[i], "obstacle " + std::to_string(i), true);
  }
}

double RcpInstance::edge_cost(Vertex u, Vertex v) const {
  if (u == v) return 0.0;
  int e = graph.edge_index(u, v);
  if (e < 0) {
    throw InvariantError("no edge between " + std::to_string(u) + " and " +
                         std::to_string(v));
  }
  return edge_costs[e];
}

void RcpInstance::validate() const {
  require_connected(graph);
  if (static_cast<int>(edge_costs.size()) != graph.edge_count()) {
    throw InvariantError("edge_costs must list one cost per edge");
  }
  require_nonnegative(edge_costs, "edge costs");
  if (!std::isfinite(budget) || budget < 0.0) {
    throw InvariantError("budget must be finite and non-negative");
  }
  if (start_set.empty()) throw InvariantError("start set is empty");
  if (goal_set.empty()) throw InvariantError("goal set is empty");
  require_vertices(graph, start_set, "starts", true);
  require_vertices(graph, goal_set, "goals", true);
  const auto& values = is_otp() ? rates() : rewards();
  if (static_cast<int>(values.size()) != graph.vertex_count()) {
    throw InvariantError(std::string(is_otp() ? "rates" : "rewards") +
                         " must list one value per vertex");
  }
  require_nonnegative(values, is_otp() ? "rates" : "rewards");
  if (is_otp()) {
    auto a = start_set, b = goal_set;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw InvariantError("OTP requires the start set to equal the goal set");
  }
}

std::string problem_name(const ProblemInstance& instance) {
  if (std::holds_alternative<MppInstance>(instance)) return "mpp";
  if (std::holds_alternative<MmcrInstance>(instance)) return "mmcr";
  return std::get<RcpInstance>(instance).is_otp() ? "otp" : "qcop";
}

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kFeasible: return "feasible";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kTimeout: return "timeout";
    case SolveStatus::kError: return "error";
  }
  return "error";
}

SolveStatus solve_status_from_string(const std::string& text) {
  for (auto s : {SolveStatus::kOptimal, SolveStatus::kFeasible, SolveStatus::kInfeasible,
                 SolveStatus::kTimeout, SolveStatus::kError}) {
    if (to_string(s) == text) return s;
  }
  throw ParseError("unknown status '" + text + "'", 0, "status");
}

}  // namespace pathip
