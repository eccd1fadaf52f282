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

#include "pathip/rcp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "pathip/error.hpp"
#include "pathip/validate.hpp"

namespace pathip {
namespace {

std::string idx(int v) { return "[" + std::to_string(v) + "]"; }

// r_i x_i + sum over j in N(i) of r_j / |N(j)| (x_i - x_i x_j).
void add_qcop_objective(IpModel& model, const RcpInstance& instance,
                        std::span<const VarId> visit) {
  const Graph& g = instance.graph;
  const auto& r = instance.rewards();
  model.set_objective_sense(ObjectiveSense::kMaximize);
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    model.add_objective_term(r[i], visit[i]);
    for (Vertex j : g.neighbors(i)) {
      double w = r[j] / g.degree(j);
      model.add_objective_term(w, visit[i]);
      model.add_objective_product(-w, visit[i], visit[j]);
    }
  }
}

RcpModel build_walk(const RcpInstance& instance, int horizon, Reachability reachability,
                    bool otp) {
  instance.validate();
  if (horizon < 0) throw Error("negative horizon");
  const Graph& g = instance.graph;
  const int n = g.vertex_count();
  RcpModel out;
  out.horizon = horizon;
  out.kept = reachable_copies(g, instance.start_set, instance.goal_set, horizon, reachability);
  IpModel& model = out.model;

  for (Vertex v : instance.start_set) {
    if (out.kept[0][v]) out.departures.push_back({v, model.add_binary("x[0][u]" + idx(v))});
  }
  out.move_out.assign(horizon + 1, {});
  std::vector<std::vector<std::vector<Arc>>> move_in(horizon + 1);
  for (int t = 1; t <= horizon; ++t) {
    out.move_out[t].assign(n, {});
    move_in[t].assign(n, {});
    for (Vertex v = 0; v < n; ++v) {
      if (!out.kept[t - 1][v]) continue;
      std::vector<Vertex> targets(g.neighbors(v).begin(), g.neighbors(v).end());
      targets.insert(std::lower_bound(targets.begin(), targets.end(), v), v);
      for (Vertex w : targets) {
        if (!out.kept[t][w]) continue;
        VarId id = model.add_binary("x" + idx(t) + idx(v) + idx(w));
        out.move_out[t][v].push_back({w, id});
        move_in[t][w].push_back({v, id});
      }
    }
  }
  for (Vertex v : instance.goal_set) {
    if (out.kept[horizon][v]) {
      out.returns.push_back({v, model.add_binary("x" + idx(horizon + 1) + idx(v) + "[u]")});
    }
  }
  for (Vertex v = 0; v < n; ++v) out.visit.push_back(model.add_binary("xv" + idx(v)));
  if (otp) {
    for (Vertex v = 0; v < n; ++v) {
      out.dwell.push_back(model.add_continuous(0, instance.budget, "t" + idx(v)));
    }
  }

  std::vector<Term> depart, back;
  for (const Arc& a : out.departures) depart.push_back({1, a.var});
  for (const Arc& a : out.returns) back.push_back({1, a.var});
  model.add_constraint(depart, Sense::kEqual, 1, "depart");
  model.add_constraint(back, Sense::kEqual, 1, "return");

  for (int t = 0; t <= horizon; ++t) {
    for (Vertex v = 0; v < n; ++v) {
      if (!out.kept[t][v]) continue;
      std::vector<Term> terms;
      if (t < horizon) {
        for (const Arc& a : out.move_out[t + 1][v]) terms.push_back({1, a.var});
      } else {
        for (const Arc& a : out.returns) {
          if (a.other == v) terms.push_back({1, a.var});
        }
      }
      if (t == 0) {
        for (const Arc& a : out.departures) {
          if (a.other == v) terms.push_back({-1, a.var});
        }
      } else {
        for (const Arc& a : move_in[t][v]) terms.push_back({-1, a.var});
      }
      if (merge_terms(terms).empty()) continue;
      model.add_constraint(terms, Sense::kEqual, 0, "keep" + idx(t) + idx(v));
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    std::vector<Term> terms{{1, out.visit[v]}};
    for (const Arc& a : out.departures) {
      if (a.other == v) terms.push_back({-1, a.var});
    }
    for (int t = 1; t <= horizon; ++t) {
      for (const Arc& a : move_in[t][v]) terms.push_back({-1, a.var});
    }
    if (terms.size() == 1) {
      model.set_bounds(out.visit[v], 0, 0);
      continue;
    }
    model.add_constraint(terms, Sense::kLessEqual, 0, "visit" + idx(v));
  }

  std::vector<Term> budget;
  for (int t = 1; t <= horizon; ++t) {
    for (Vertex v = 0; v < n; ++v) {
      for (const Arc& a : out.move_out[t][v]) {
        if (a.other != v) budget.push_back({instance.edge_cost(v, a.other), a.var});
      }
    }
  }
  for (VarId t : out.dwell) budget.push_back({1, t});
  model.add_constraint(budget, Sense::kLessEqual, instance.budget, "budget");
  return out;
}

}  // namespace

int choose_horizon(const RcpInstance& instance, int visit_cap) {
  if (instance.graph.edge_count() == 0) return 0;
  double c_min = *std::min_element(instance.edge_costs.begin(), instance.edge_costs.end());
  if (c_min <= 0) throw Error("zero-cost edge: give the horizon explicitly");
  double steps = std::floor(instance.budget / c_min + 1e-9);
  double cap = static_cast<double>(instance.graph.vertex_count()) * visit_cap;
  return static_cast<int>(std::min(steps, cap));
}

RcpModel build_qcop(const RcpInstance& instance, int horizon, Reachability reachability) {
  if (instance.is_otp()) throw Error("instance carries OTP rates, not QCOP rewards");
  RcpModel out = build_walk(instance, horizon, reachability, false);
  add_qcop_objective(out.model, instance, out.visit);
  out.model = linearize(out.model);
  return out;
}

RcpModel build_otp(const RcpInstance& instance, int horizon, Reachability reachability) {
  if (!instance.is_otp()) throw Error("instance carries QCOP rewards, not OTP rates");
  if (instance.start_set != instance.goal_set) throw Error("OTP needs equal start and goal sets");
  RcpModel out = build_walk(instance, horizon, reachability, true);
  IpModel& model = out.model;
  for (Vertex v : instance.start_set) {
    std::vector<Term> terms;
    for (const Arc& a : out.departures) {
      if (a.other == v) terms.push_back({1, a.var});
    }
    for (const Arc& a : out.returns) {
      if (a.other == v) terms.push_back({-1, a.var});
    }
    if (terms.empty()) continue;
    model.add_constraint(terms, Sense::kEqual, 0, "pair" + idx(v));
  }
  const auto& rates = instance.rates();
  model.set_objective_sense(ObjectiveSense::kMaximize);
  for (Vertex v = 0; v < instance.graph.vertex_count(); ++v) {
    model.add_constraint({{1, out.dwell[v]}, {-instance.budget, out.visit[v]}}, Sense::kLessEqual,
                         0, "dwell" + idx(v));
    model.add_objective_term(rates[v], out.dwell[v]);
  }
  return out;
}

Path extract_rcp_walk(const RcpModel& model, std::span<const double> x) {
  std::optional<Vertex> at;
  for (const Arc& a : model.departures) {
    if (x[a.var] > 0.5) {
      if (at) throw InvariantError("more than one departure");
      at = a.other;
    }
  }
  if (!at) throw InvariantError("no departure from the virtual vertex");
  Path walk{*at};
  for (int t = 1; t <= model.horizon; ++t) {
    std::optional<Vertex> next;
    for (const Arc& a : model.move_out[t][walk.back()]) {
      if (x[a.var] > 0.5) {
        if (next) throw InvariantError("walk branches at layer " + std::to_string(t));
        next = a.other;
      }
    }
    if (!next) throw InvariantError("walk stops at layer " + std::to_string(t - 1));
    walk.push_back(*next);
  }
  return walk;
}

Solution solve_rcp(const RcpInstance& instance, const RcpConfig& config) {
  instance.validate();
  config.solver.validate();
  const auto started = std::chrono::steady_clock::now();
  const int horizon = config.horizon ? *config.horizon : choose_horizon(instance, config.visit_cap);
  RcpModel m = instance.is_otp() ? build_otp(instance, horizon, config.reachability)
                                 : build_qcop(instance, horizon, config.reachability);
  std::shared_ptr<const SolverBackend> backend =
      config.backend ? config.backend : std::make_shared<EmbeddedBackend>();
  SolveOutcome outcome = backend->solve(m.model, config.solver);

  Solution sol;
  sol.problem = instance.is_otp() ? "otp" : "qcop";
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
    case OutcomeStatus::kInfeasible:
      sol.status = SolveStatus::kInfeasible;
      break;
    case OutcomeStatus::kTimeoutNoIncumbent:
      sol.status = SolveStatus::kTimeout;
      break;
    case OutcomeStatus::kUnbounded:
      throw InvariantError("reward model reported unbounded");
  }
  if (outcome.has_solution()) {
    Path walk = extract_rcp_walk(m, outcome.assignment);
    if (instance.is_otp()) {
      sol.dwell_times.assign(instance.graph.vertex_count(), 0.0);
      for (Vertex v = 0; v < instance.graph.vertex_count(); ++v) {
        double t = outcome.assignment[m.dwell[v]];
        sol.dwell_times[v] = t > 1e-9 ? t : 0.0;
      }
    }
    sol.reward = evaluate_rcp(instance, walk, sol.dwell_times).reward;
    sol.objective = outcome.objective;
    sol.paths = {std::move(walk)};
  } else {
    sol.objective = outcome.bound;
  }
  sol.stats.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return sol;
}

BaseQcopModel build_base_qcop(const RcpInstance& instance) {
  instance.validate();
  if (instance.is_otp()) throw Error("base-graph builder covers QCOP only");
  const Graph& g = instance.graph;
  const int n = g.vertex_count();
  const Vertex source = n, sink = n + 1;
  std::vector<Edge> edges = g.edges();
  for (Vertex v : instance.start_set) edges.push_back({v, source});
  for (Vertex v : instance.goal_set) edges.push_back({v, sink});

  BaseQcopModel out;
  out.graph = Graph(n + 2, edges);
  IpModel model;
  out.vars = add_base_encoding(model, out.graph, source, sink, true);
  for (Vertex v = 0; v < n; ++v) out.visit.push_back(model.add_binary("xv" + idx(v)));
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Term> terms{{1, out.visit[v]}};
    for (Vertex w : out.graph.neighbors(v)) terms.push_back({-1, out.vars.edges.at({w, v})});
    model.add_constraint(terms, Sense::kLessEqual, 0, "visit" + idx(v));
  }
  std::vector<Term> budget;
  for (const auto& [a, b] : g.edges()) {
    double c = instance.edge_cost(a, b);
    budget.push_back({c, out.vars.edges.at({a, b})});
    budget.push_back({c, out.vars.edges.at({b, a})});
  }
  model.add_constraint(budget, Sense::kLessEqual, instance.budget, "budget");
  add_qcop_objective(model, instance, out.visit);
  out.model = linearize(model);
  return out;
}

}  // namespace pathip
