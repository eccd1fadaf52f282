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

#ifndef PATHIP_VALIDATE_HPP_
#define PATHIP_VALIDATE_HPP_

#include <span>
#include <string>
#include <vector>

#include "pathip/instance.hpp"

namespace pathip {

enum class ViolationKind {
  kShape,            // wrong number of paths or unequal lengths
  kWrongStart,
  kInvalidMove,
  kVertexCollision,
  kEdgeSwap,
  kTooFewAtGoal,
  kBlocked,          // MMCR robot without an obstacle-free route
  kBadRemoval,       // MMCR removal index out of range
};

struct Violation {
  ViolationKind kind;
  int robot = -1;
  int other_robot = -1;
  int time = -1;
  std::string message;
};

struct Verdict {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
  std::string summary() const;
};

// Checks move validity, vertex collisions, edge swaps and that at least k
// robots end at their goals (as a set inside interchangeable groups). Every
// violation is reported.
Verdict validate_mpp_solution(const MppInstance& instance, const Solution& solution);

// Number of robots whose final vertex is one of their goals, with set
// semantics inside groups. Final positions are assumed pairwise distinct.
int robots_at_goal(const MppInstance& instance, std::span<const Vertex> final_positions);

// Breadth-first check that every robot still has a start-to-goal route once
// the removed obstacles are deleted. Reports the first blocked robot.
Verdict validate_mmcr_solution(const MmcrInstance& instance, const Solution& solution);

// Vertices not covered by any obstacle outside `removed`.
std::vector<char> free_vertices(const MmcrInstance& instance, std::span<const int> removed);

struct RcpValue {
  double reward = 0.0;
  double cost = 0.0;
};

// Reward and cost of a walk. QCOP: r_i for every visited vertex plus
// r_j / |N(j)| for every (visited i, unvisited neighbor j) pair; cost sums the
// traversed edge costs. OTP: sum of rate_i * dwell_i; cost adds the dwell.
// `dwell` is per vertex and may be empty for QCOP.
RcpValue evaluate_rcp(const RcpInstance& instance, std::span<const Vertex> path,
                      std::span<const double> dwell = {});

// QCOP reward of a visited set, given as a 0/1 mask.
double qcop_reward(const RcpInstance& instance, std::span<const char> visited);

}  // namespace pathip

#endif  // PATHIP_VALIDATE_HPP_
