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

#include "pathip/mmcr.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <set>

#include "pathip/error.hpp"
#include "pathip/validate.hpp"

namespace pathip {
namespace {

std::vector<std::vector<int>> memberships(const Graph& graph,
                                          const std::vector<std::vector<Vertex>>& obstacles) {
  std::vector<std::vector<int>> out(graph.vertex_count());
  for (int o = 0; o < static_cast<int>(obstacles.size()); ++o) {
    for (Vertex v : obstacles[o]) out[v].push_back(o);
  }
  return out;
}

void finish_edges(const Graph& graph, RegionGraph& rg) {
  std::set<std::pair<int, int>> edges;
  for (const auto& [a, b] : graph.edges()) {
    int ra = rg.vertex_to_region[a], rb = rg.vertex_to_region[b];
    if (ra != rb) edges.insert({std::min(ra, rb), std::max(ra, rb)});
  }
  rg.region_edges.assign(edges.begin(), edges.end());
}

}  // namespace

Graph RegionGraph::graph() const {
  return Graph(region_count(), std::vector<Edge>(region_edges.begin(), region_edges.end()));
}

RegionGraph build_region_graph(const Graph& graph,
                               const std::vector<std::vector<Vertex>>& obstacles) {
  const int n = graph.vertex_count();
  const auto member = memberships(graph, obstacles);
  RegionGraph rg;
  rg.vertex_to_region.assign(n, -1);
  // Scanning vertices in id order makes each region's label its smallest vertex.
  for (Vertex seed = 0; seed < n; ++seed) {
    if (rg.vertex_to_region[seed] >= 0) continue;
    const int id = rg.region_count();
    std::vector<Vertex> region;
    std::deque<Vertex> queue{seed};
    rg.vertex_to_region[seed] = id;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      region.push_back(v);
      for (Vertex w : graph.neighbors(v)) {
        if (rg.vertex_to_region[w] < 0 && member[w] == member[seed]) {
          rg.vertex_to_region[w] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(region.begin(), region.end());
    rg.regions.push_back(std::move(region));
    rg.region_obstacle_sets.push_back(member[seed]);
  }
  finish_edges(graph, rg);
  return rg;
}

RegionGraph singleton_regions(const Graph& graph,
                              const std::vector<std::vector<Vertex>>& obstacles) {
  const auto member = memberships(graph, obstacles);
  RegionGraph rg;
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    rg.regions.push_back({v});
    rg.vertex_to_region.push_back(v);
    rg.region_obstacle_sets.push_back(member[v]);
  }
  finish_edges(graph, rg);
  return rg;
}

MmcrModel build_mmcr_model(const MmcrInstance& instance, RegionGraph regions) {
  MmcrModel out;
  out.regions = std::move(regions);
  const RegionGraph& rg = out.regions;
  const Graph quotient = rg.graph();
  IpModel& model = out.model;
  model.set_objective_sense(ObjectiveSense::kMinimize);

  int encoded = 0;
  for (int r = 0; r < instance.robot_count(); ++r) {
    int s = rg.vertex_to_region[instance.starts[r]];
    int g = rg.vertex_to_region[instance.goals[r]];
    if (s == g) {
      out.robots.emplace_back();
      continue;
    }
    out.robots.emplace_back(
        add_base_encoding(model, quotient, s, g, false, std::to_string(r)));
    ++encoded;
  }

  for (int i = 0; i < rg.region_count(); ++i) {
    out.region_vars.push_back(model.add_binary("xV[" + std::to_string(i) + "]"));
  }
  const int obstacle_count = static_cast<int>(instance.obstacles.size());
  for (int o = 0; o < obstacle_count; ++o) {
    out.obstacle_vars.push_back(model.add_binary("xO[" + std::to_string(o) + "]"));
    model.add_objective_term(1, out.obstacle_vars.back());
  }

  for (int i = 0; i < rg.region_count(); ++i) {
    const int deg = quotient.degree(i);
    if (deg == 0 || encoded == 0) continue;
    std::vector<Term> terms{{2.0 * encoded * deg, out.region_vars[i]}};
    for (const auto& robot : out.robots) {
      if (!robot) continue;
      for (Vertex j : quotient.neighbors(i)) {
        terms.push_back({-1, robot->edges.at({i, j})});
        terms.push_back({-1, robot->edges.at({j, i})});
      }
    }
    model.add_constraint(terms, Sense::kGreaterEqual, 0, "region[" + std::to_string(i) + "]");
  }

  std::vector<std::vector<int>> inside(obstacle_count);
  for (int i = 0; i < rg.region_count(); ++i) {
    for (int o : rg.region_obstacle_sets[i]) inside[o].push_back(i);
  }
  for (int o = 0; o < obstacle_count; ++o) {
    std::vector<Term> terms{{static_cast<double>(inside[o].size()), out.obstacle_vars[o]}};
    for (int i : inside[o]) terms.push_back({-1, out.region_vars[i]});
    model.add_constraint(terms, Sense::kGreaterEqual, 0, "obstacle[" + std::to_string(o) + "]");
  }

  for (int r = 0; r < instance.robot_count(); ++r) {
    for (Vertex v : {instance.starts[r], instance.goals[r]}) {
      for (int o : rg.region_obstacle_sets[rg.vertex_to_region[v]]) {
        model.set_bounds(out.obstacle_vars[o], 1, 1);
      }
    }
  }
  return out;
}

std::vector<Path> extract_witness_paths(const MmcrInstance& instance,
                                        std::span<const int> removed) {
  const auto allowed = free_vertices(instance, removed);
  std::vector<Path> paths;
  for (int r = 0; r < instance.robot_count(); ++r) {
    Path p;
    if (allowed[instance.starts[r]]) {
      p = instance.graph.shortest_path(instance.starts[r], instance.goals[r], allowed);
    }
    if (p.empty()) throw InvariantError("robot " + std::to_string(r) + " is blocked");
    paths.push_back(std::move(p));
  }
  return paths;
}

Solution solve_mmcr(const MmcrInstance& instance, const MmcrConfig& config) {
  instance.validate();
  config.solver.validate();
  const auto started = std::chrono::steady_clock::now();
  RegionGraph rg = config.use_regions ? build_region_graph(instance.graph, instance.obstacles)
                                      : singleton_regions(instance.graph, instance.obstacles);
  MmcrModel m = build_mmcr_model(instance, std::move(rg));
  std::shared_ptr<const SolverBackend> backend =
      config.backend ? config.backend : std::make_shared<EmbeddedBackend>();
  SolveOutcome outcome = backend->solve(m.model, config.solver);

  Solution sol;
  sol.problem = "mmcr";
  sol.stats.variable_count = m.model.variable_count();
  sol.stats.constraint_count = m.model.constraint_count();
  sol.stats.branch_nodes = outcome.stats.nodes;
  switch (outcome.status) {
    case OutcomeStatus::kOptimal:
      sol.status = SolveStatus::kOptimal;
      break;
    case OutcomeStatus::kFeasible:
      sol.status = SolveStatus::kFeasible;
      break;
    case OutcomeStatus::kTimeoutNoIncumbent:
      sol.status = SolveStatus::kTimeout;
      break;
    default:
      // Every instance is feasible by removing all obstacles.
      throw InvariantError("MMCR model reported " + to_string(outcome.status));
  }
  if (outcome.has_solution()) {
    for (int o = 0; o < static_cast<int>(m.obstacle_vars.size()); ++o) {
      if (outcome.assignment[m.obstacle_vars[o]] > 0.5) sol.removed_obstacles.push_back(o);
    }
    sol.objective = static_cast<double>(sol.removed_obstacles.size());
    sol.paths = extract_witness_paths(instance, sol.removed_obstacles);
  } else {
    sol.objective = outcome.bound;
  }
  sol.stats.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return sol;
}

}  // namespace pathip
