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

#ifndef PATHIP_MMCR_HPP_
#define PATHIP_MMCR_HPP_

#include <memory>
#include <optional>
#include <vector>

#include "pathip/encoding.hpp"
#include "pathip/instance.hpp"
#include "pathip/solver.hpp"

namespace pathip {

// Quotient of G: each region is a maximal connected vertex set whose members
// lie in exactly the same obstacles. Regions are numbered by their smallest
// vertex.
struct RegionGraph {
  std::vector<std::vector<Vertex>> regions;          // sorted members
  std::vector<std::pair<int, int>> region_edges;     // first < second, sorted
  std::vector<int> vertex_to_region;
  std::vector<std::vector<int>> region_obstacle_sets;  // sorted obstacle indices

  int region_count() const { return static_cast<int>(regions.size()); }
  Graph graph() const;
};

RegionGraph build_region_graph(const Graph& graph, const std::vector<std::vector<Vertex>>& obstacles);

// One region per vertex; solving over it is solving over G directly.
RegionGraph singleton_regions(const Graph& graph, const std::vector<std::vector<Vertex>>& obstacles);

struct MmcrConfig {
  SolveConfig solver;
  std::shared_ptr<const SolverBackend> backend;  // null: embedded
  bool use_regions = true;
};

struct MmcrModel {
  IpModel model;
  RegionGraph regions;
  // Base encoding per robot on the region graph; empty when the robot's
  // start and goal share a region.
  std::vector<std::optional<BaseVars>> robots;
  std::vector<VarId> region_vars;
  std::vector<VarId> obstacle_vars;
};

// Per-robot base encodings without subtour rows, region indicators with
// L = 2 n deg(V_i), obstacle indicators with L = regions inside O, and
// minimize the number of obstacle indicators. Obstacles holding a start or
// goal are fixed to 1.
MmcrModel build_mmcr_model(const MmcrInstance& instance, RegionGraph regions);

// BFS path per robot avoiding every obstacle not in `removed`. Throws
// InvariantError if some robot stays blocked.
std::vector<Path> extract_witness_paths(const MmcrInstance& instance,
                                        std::span<const int> removed);

Solution solve_mmcr(const MmcrInstance& instance, const MmcrConfig& config = {});

}  // namespace pathip

#endif  // PATHIP_MMCR_HPP_
