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

#ifndef PATHIP_INSTANCE_HPP_
#define PATHIP_INSTANCE_HPP_

#include <string>
#include <variant>
#include <vector>

#include "pathip/graph.hpp"

namespace pathip {

// Multi-robot path planning with partial solutions: route at least k of the
// n robots to their goals without vertex or edge-swap collisions.
struct MppInstance {
  Graph graph;
  std::vector<Vertex> starts;
  std::vector<Vertex> goals;
  int k = 0;
  // Interchangeable robot groups. Robots not listed form singleton groups.
  std::vector<std::vector<int>> groups;

  int robot_count() const { return static_cast<int>(starts.size()); }
  // Throws InvariantError on the first violated invariant.
  void validate() const;
  // Group index per robot, -1 for robots outside every group.
  std::vector<int> group_of_robot() const;

  bool operator==(const MppInstance&) const = default;
};

// Multi-robot minimum constraint removal over vertex-set obstacles.
struct MmcrInstance {
  Graph graph;
  std::vector<Vertex> starts;
  std::vector<Vertex> goals;
  std::vector<std::vector<Vertex>> obstacles;  // each sorted, nonempty

  int robot_count() const { return static_cast<int>(starts.size()); }
  void validate() const;

  bool operator==(const MmcrInstance&) const = default;
};

struct QcopRewards {
  std::vector<double> rewards;  // r_i per vertex
  bool operator==(const QcopRewards&) const = default;
};

// Linear dwell rewards R_i(t) = rate_i * t.
struct OtpRates {
  std::vector<double> rates;
  bool operator==(const OtpRates&) const = default;
};

// Single-robot reward collection (QCOP or OTP) under a travel budget.
struct RcpInstance {
  Graph graph;
  std::vector<double> edge_costs;  // aligned with graph.edges()
  double budget = 0.0;
  std::vector<Vertex> start_set;   // sorted
  std::vector<Vertex> goal_set;    // sorted
  std::variant<QcopRewards, OtpRates> objective;

  bool is_otp() const { return std::holds_alternative<OtpRates>(objective); }
  const std::vector<double>& rewards() const {
    return std::get<QcopRewards>(objective).rewards;
  }
  const std::vector<double>& rates() const {
    return std::get<OtpRates>(objective).rates;
  }
  double edge_cost(Vertex u, Vertex v) const;
  void validate() const;

  bool operator==(const RcpInstance&) const = default;
};

using ProblemInstance = std::variant<MppInstance, MmcrInstance, RcpInstance>;

// "mpp", "mmcr", "qcop" or "otp".
std::string problem_name(const ProblemInstance& instance);

enum class SolveStatus { kOptimal, kFeasible, kInfeasible, kTimeout, kError };

std::string to_string(SolveStatus status);
SolveStatus solve_status_from_string(const std::string& text);

struct SolutionStats {
  int variable_count = 0;
  int constraint_count = 0;
  long branch_nodes = 0;
  double wall_time = 0.0;
  bool operator==(const SolutionStats&) const = default;
};

// Result of any of the three problem solvers. Only the fields relevant to the
// problem kind are populated.
struct Solution {
  std::string problem;
  SolveStatus status = SolveStatus::kOptimal;
  std::vector<Path> paths;
  int makespan = 0;                     // MPP
  std::vector<int> removed_obstacles;   // MMCR, sorted
  double reward = 0.0;                  // RCP
  std::vector<double> dwell_times;      // OTP, per vertex
  double objective = 0.0;
  SolutionStats stats;

  bool operator==(const Solution&) const = default;
};

}  // namespace pathip

#endif  // PATHIP_INSTANCE_HPP_
