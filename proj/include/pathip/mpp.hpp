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

#ifndef PATHIP_MPP_HPP_
#define PATHIP_MPP_HPP_

#include <memory>
#include <optional>
#include <vector>

#include "pathip/encoding.hpp"
#include "pathip/instance.hpp"
#include "pathip/solver.hpp"

namespace pathip {

struct MppHeuristic {
  enum class Kind { kNone, kTube, kSphere };
  Kind kind = Kind::kNone;
  int radius = 0;  // h_t or h_s

  static MppHeuristic none() { return {}; }
  static MppHeuristic tube(int h) { return {Kind::kTube, h}; }
  static MppHeuristic sphere(int h) { return {Kind::kSphere, h}; }
};

// Where robots may end when only k < n of them must reach their goals.
enum class FlexibleEnds {
  kAnywhere,      // any vertex
  kNeighborhood,  // within `neighborhood_radius` of the goal (set)
};

struct MppConfig {
  MppHeuristic heuristic;
  bool fallback_to_exact = true;
  std::optional<int> max_T;  // default: underestimate + 2|V|
  FlexibleEnds flexible_ends = FlexibleEnds::kAnywhere;
  int neighborhood_radius = 1;
  Reachability reachability = Reachability::kFull;
  SolveConfig solver;
  std::shared_ptr<const SolverBackend> backend;  // null: embedded

  void validate() const;
};

// Hop distance from each robot to its goal (nearest goal of its group).
// Throws Error naming the first robot that cannot reach its goal.
std::vector<int> goal_distances(const MppInstance& instance);

// Largest shortest-path length for k = n; the k-th smallest otherwise.
int underestimate_T(const MppInstance& instance);

// P_r^*: BFS shortest path from each robot's start to its own goal.
std::vector<Path> reference_paths(const MppInstance& instance);

// Copies within h of any vertex of `ref`, on every layer.
LayerMask tube_mask(const Graph& graph, const Path& ref, int horizon, int h);
// Copies of layer t within h of ref[min(floor(t |ref| / T), |ref| - 1)].
LayerMask sphere_mask(const Graph& graph, const Path& ref, int horizon, int h);

struct MppModel {
  TimeExpandedEncoding encoding;
  // Commodity index per robot; grouped robots share one.
  std::vector<int> commodity_of_robot;

  // True when a commodity lost a whole layer: the model cannot be feasible.
  bool trivially_infeasible() const { return encoding.empty_layer().has_value(); }
};

// Model for makespan T: one commodity per ungrouped robot (label = robot
// index) and per group (label g<index>), vertex and edge collision rows, and
// for k < n flexible ends plus the row "feedback into true goals >= k".
MppModel build_mpp_model(const MppInstance& instance, int horizon, const MppConfig& config,
                         const MppHeuristic& heuristic);

// Per-robot paths of length T + 1 from a feasible assignment.
std::vector<Path> extract_mpp_paths(const MppInstance& instance, const MppModel& model,
                                    std::span<const double> x);

// Smallest feasible T from underestimate_T upwards. A pruned model that is
// infeasible is re-solved without pruning at the same T when fallback is on.
Solution solve_mpp(const MppInstance& instance, const MppConfig& config = {});

}  // namespace pathip

#endif  // PATHIP_MPP_HPP_
