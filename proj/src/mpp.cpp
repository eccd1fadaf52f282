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

#include "pathip/mpp.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "pathip/error.hpp"

namespace pathip {
namespace {

using Clock = std::chrono::steady_clock;

std::vector<Vertex> goal_set(const MppInstance& instance, int robot,
                             const std::vector<int>& group_of) {
  if (group_of[robot] < 0) return {instance.goals[robot]};
  std::vector<Vertex> goals;
  for (int r : instance.groups[group_of[robot]]) goals.push_back(instance.goals[r]);
  std::sort(goals.begin(), goals.end());
  return goals;
}

std::vector<Vertex> flexible_ends(const MppInstance& instance, const MppConfig& config,
                                  std::span<const Vertex> goals) {
  const int n = instance.graph.vertex_count();
  std::vector<Vertex> ends;
  if (config.flexible_ends == FlexibleEnds::kAnywhere) {
    for (Vertex v = 0; v < n; ++v) ends.push_back(v);
    return ends;
  }
  auto dist = instance.graph.bfs_distances(goals);
  for (Vertex v = 0; v < n; ++v) {
    if (dist[v] != kUnreachable && dist[v] <= config.neighborhood_radius) ends.push_back(v);
  }
  return ends;
}

LayerMask mask_for(const Graph& graph, const Path& ref, int horizon, const MppHeuristic& h) {
  switch (h.kind) {
    case MppHeuristic::Kind::kNone:
      return {};
    case MppHeuristic::Kind::kTube:
      return tube_mask(graph, ref, horizon, h.radius);
    case MppHeuristic::Kind::kSphere:
      return sphere_mask(graph, ref, horizon, h.radius);
  }
  return {};
}

}  // namespace

void MppConfig::validate() const {
  if (heuristic.radius < 0) throw Error("heuristic radius must be non-negative");
  if (neighborhood_radius < 0) throw Error("neighborhood radius must be non-negative");
  if (max_T && *max_T < 0) throw Error("max_T must be non-negative");
  solver.validate();
}

std::vector<int> goal_distances(const MppInstance& instance) {
  const auto group_of = instance.group_of_robot();
  std::vector<int> out;
  for (int r = 0; r < instance.robot_count(); ++r) {
    auto goals = goal_set(instance, r, group_of);
    int d = instance.graph.bfs_distances(goals)[instance.starts[r]];
    if (d == kUnreachable) throw Error("robot " + std::to_string(r) + " cannot reach its goal");
    out.push_back(d);
  }
  return out;
}

int underestimate_T(const MppInstance& instance) {
  auto d = goal_distances(instance);
  if (d.empty() || instance.k <= 0) return 0;
  std::sort(d.begin(), d.end());
  return d[std::min<std::size_t>(instance.k, d.size()) - 1];
}

std::vector<Path> reference_paths(const MppInstance& instance) {
  std::vector<Path> refs;
  for (int r = 0; r < instance.robot_count(); ++r) {
    Path p = instance.graph.shortest_path(instance.starts[r], instance.goals[r]);
    if (p.empty()) throw Error("robot " + std::to_string(r) + " cannot reach its goal");
    refs.push_back(std::move(p));
  }
  return refs;
}

LayerMask tube_mask(const Graph& graph, const Path& ref, int horizon, int h) {
  auto dist = graph.bfs_distances(ref);
  std::vector<char> layer(graph.vertex_count(), 0);
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    layer[v] = dist[v] != kUnreachable && dist[v] <= h;
  }
  return LayerMask(horizon + 1, layer);
}

LayerMask sphere_mask(const Graph& graph, const Path& ref, int horizon, int h) {
  const int len = static_cast<int>(ref.size());
  LayerMask mask(horizon + 1, std::vector<char>(graph.vertex_count(), 0));
  std::map<Vertex, std::vector<int>> cache;
  for (int t = 0; t <= horizon; ++t) {
    int index = horizon == 0 ? 0 : std::min(t * len / horizon, len - 1);
    Vertex anchor = ref[index];
    auto it = cache.find(anchor);
    if (it == cache.end()) it = cache.emplace(anchor, graph.bfs_distances(anchor)).first;
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
      int d = it->second[v];
      mask[t][v] = d != kUnreachable && d <= h;
    }
  }
  return mask;
}

MppModel build_mpp_model(const MppInstance& instance, int horizon, const MppConfig& config,
                         const MppHeuristic& heuristic) {
  const Graph& graph = instance.graph;
  const int n = instance.robot_count();
  const bool partial = instance.k < n;
  const auto group_of = instance.group_of_robot();
  const auto refs = heuristic.kind == MppHeuristic::Kind::kNone ? std::vector<Path>{}
                                                                 : reference_paths(instance);

  MppModel out;
  out.encoding.horizon = horizon;
  out.commodity_of_robot.assign(n, -1);
  IpModel& model = out.encoding.model;
  std::vector<std::vector<Vertex>> true_goals;

  for (int r = 0; r < n; ++r) {
    if (group_of[r] >= 0) continue;
    CommoditySpec spec;
    spec.label = std::to_string(r);
    spec.starts = {instance.starts[r]};
    std::vector<Vertex> goals{instance.goals[r]};
    spec.ends = partial ? flexible_ends(instance, config, goals) : goals;
    if (!refs.empty()) spec.mask = mask_for(graph, refs[r], horizon, heuristic);
    out.commodity_of_robot[r] = static_cast<int>(out.encoding.commodities.size());
    out.encoding.commodities.push_back(
        add_commodity(model, graph, horizon, config.reachability, spec));
    true_goals.push_back(goals);
  }
  // Groups are never pruned.
  for (std::size_t g = 0; g < instance.groups.size(); ++g) {
    CommoditySpec spec;
    spec.label = "g" + std::to_string(g);
    std::vector<Vertex> goals;
    for (int r : instance.groups[g]) {
      spec.starts.push_back(instance.starts[r]);
      goals.push_back(instance.goals[r]);
      out.commodity_of_robot[r] = static_cast<int>(out.encoding.commodities.size());
    }
    std::sort(goals.begin(), goals.end());
    spec.ends = partial ? flexible_ends(instance, config, goals) : goals;
    spec.multiplicity = static_cast<int>(instance.groups[g].size());
    out.encoding.commodities.push_back(
        add_commodity(model, graph, horizon, config.reachability, spec));
    true_goals.push_back(goals);
  }
  if (out.trivially_infeasible()) return out;

  const auto& cs = out.encoding.commodities;
  const int nv = graph.vertex_count();

  // At most one robot per vertex copy.
  for (int t = 0; t <= horizon; ++t) {
    for (Vertex v = 0; v < nv; ++v) {
      std::vector<Term> terms;
      for (const auto& c : cs) {
        if (!c.kept[t][v]) continue;
        if (t == 0) {
          for (const auto& arc : c.feedback) {
            if (arc.start == v) terms.push_back({1, arc.var});
          }
        } else {
          for (const Arc& arc : c.move_in[t][v]) terms.push_back({1, arc.var});
        }
      }
      if (terms.empty()) continue;
      model.add_constraint(terms, Sense::kLessEqual, 1,
                           "vertex[" + std::to_string(t) + "][" + std::to_string(v) + "]");
    }
  }

  // No two robots on the same edge (either direction) in the same step.
  std::vector<Edge> pairs;
  for (Vertex v = 0; v < nv; ++v) pairs.push_back({v, v});
  pairs.insert(pairs.end(), graph.edges().begin(), graph.edges().end());
  std::sort(pairs.begin(), pairs.end());
  for (int t = 1; t <= horizon; ++t) {
    for (const auto& [a, b] : pairs) {
      std::vector<Term> terms;
      for (const auto& c : cs) {
        if (auto id = c.move_var(t, a, b)) terms.push_back({1, *id});
        if (a != b) {
          if (auto id = c.move_var(t, b, a)) terms.push_back({1, *id});
        }
      }
      if (terms.empty()) continue;
      model.add_constraint(terms, Sense::kLessEqual, 1,
                           "edge[" + std::to_string(t) + "][" + std::to_string(a) + "][" +
                               std::to_string(b) + "]");
    }
  }

  if (partial) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < cs.size(); ++c) {
      for (const auto& arc : cs[c].feedback) {
        if (std::binary_search(true_goals[c].begin(), true_goals[c].end(), arc.end)) {
          terms.push_back({1, arc.var});
        }
      }
    }
    model.add_constraint(terms, Sense::kGreaterEqual, instance.k, "goals");
  }
  return out;
}

std::vector<Path> extract_mpp_paths(const MppInstance& instance, const MppModel& model,
                                    std::span<const double> x) {
  const int n = instance.robot_count();
  std::vector<Path> paths(n);
  std::vector<std::vector<Path>> flows;
  for (const auto& c : model.encoding.commodities) flows.push_back(extract_paths(c, x));
  for (int r = 0; r < n; ++r) {
    auto& flow = flows[model.commodity_of_robot[r]];
    auto it = std::find_if(flow.begin(), flow.end(),
                           [&](const Path& p) { return p.front() == instance.starts[r]; });
    if (it == flow.end()) {
      throw InvariantError("no flow leaves the start of robot " + std::to_string(r));
    }
    paths[r] = *it;
  }
  return paths;
}

Solution solve_mpp(const MppInstance& instance, const MppConfig& config) {
  instance.validate();
  config.validate();
  const auto started = Clock::now();
  const auto deadline = started + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(config.solver.time_limit));
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - started).count(); };
  std::shared_ptr<const SolverBackend> backend =
      config.backend ? config.backend : std::make_shared<EmbeddedBackend>();

  Solution sol;
  sol.problem = "mpp";
  const int first = underestimate_T(instance);
  const int last = config.max_T.value_or(first + 2 * instance.graph.vertex_count());
  if (last < first) {
    throw Error("max_T " + std::to_string(last) + " is below the makespan lower bound " +
                std::to_string(first));
  }

  std::vector<MppHeuristic> attempts{config.heuristic};
  if (config.heuristic.kind != MppHeuristic::Kind::kNone && config.fallback_to_exact) {
    attempts.push_back(MppHeuristic::none());
  }

  for (int T = first; T <= last; ++T) {
    for (const auto& heuristic : attempts) {
      MppModel m = build_mpp_model(instance, T, config, heuristic);
      sol.stats.variable_count = m.encoding.model.variable_count();
      sol.stats.constraint_count = m.encoding.model.constraint_count();
      if (m.trivially_infeasible()) continue;

      double remaining = std::chrono::duration<double>(deadline - Clock::now()).count();
      if (remaining <= 0) {
        sol.status = SolveStatus::kTimeout;
        sol.objective = T;
        sol.stats.wall_time = elapsed();
        return sol;
      }
      SolveConfig sc = config.solver;
      sc.time_limit = remaining;
      SolveOutcome outcome = backend->solve(m.encoding.model, sc);
      sol.stats.branch_nodes += outcome.stats.nodes;
      if (outcome.has_solution()) {
        sol.status = SolveStatus::kOptimal;
        sol.paths = extract_mpp_paths(instance, m, outcome.assignment);
        sol.makespan = T;
        sol.objective = T;
        sol.stats.wall_time = elapsed();
        return sol;
      }
      if (outcome.status == OutcomeStatus::kTimeoutNoIncumbent) {
        sol.status = SolveStatus::kTimeout;
        sol.objective = T;  // best lower bound on the makespan
        sol.stats.wall_time = elapsed();
        return sol;
      }
    }
  }
  sol.status = SolveStatus::kTimeout;
  sol.objective = last + 1;
  sol.stats.wall_time = elapsed();
  return sol;
}

}  // namespace pathip
