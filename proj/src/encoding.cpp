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

#include "pathip/encoding.hpp"

#include <algorithm>
#include <cmath>

#include "pathip/error.hpp"

namespace pathip {
namespace {

std::string bracket(int value) { return "[" + std::to_string(value) + "]"; }

std::string prefix(const std::string& label) { return label.empty() ? "" : "[" + label + "]"; }

bool is_one(double value) { return value > 0.5; }

}  // namespace

// ---- base graph ----

BaseVars add_base_encoding(IpModel& model, const Graph& graph, Vertex start, Vertex goal,
                           bool subtour_elimination, const std::string& label) {
  const int n = graph.vertex_count();
  if (!graph.contains(start) || !graph.contains(goal)) throw Error("terminal out of range");
  if (start == goal) throw Error("base encoding needs distinct start and goal; split the vertex");

  BaseVars vars;
  vars.label = label;
  vars.start = start;
  vars.goal = goal;
  const std::string p = prefix(label);
  for (const auto& [a, b] : graph.edges()) {
    vars.edges[{a, b}] = model.add_binary("x" + p + bracket(a) + bracket(b));
    vars.edges[{b, a}] = model.add_binary("x" + p + bracket(b) + bracket(a));
  }
  auto var = [&](Vertex a, Vertex b) { return vars.edges.at({a, b}); };

  std::vector<Term> out_s, in_g, in_s, out_g;
  for (Vertex v : graph.neighbors(start)) {
    out_s.push_back({1, var(start, v)});
    in_s.push_back({1, var(v, start)});
  }
  for (Vertex v : graph.neighbors(goal)) {
    in_g.push_back({1, var(v, goal)});
    out_g.push_back({1, var(goal, v)});
  }
  model.add_constraint(out_s, Sense::kEqual, 1, "leave" + p);
  model.add_constraint(in_g, Sense::kEqual, 1, "reach" + p);
  if (!in_s.empty()) model.add_constraint(in_s, Sense::kEqual, 0, "noreturn" + p);
  if (!out_g.empty()) model.add_constraint(out_g, Sense::kEqual, 0, "stop" + p);

  for (Vertex v = 0; v < n; ++v) {
    if (v == start || v == goal || graph.degree(v) == 0) continue;
    std::vector<Term> balance, in;
    for (Vertex w : graph.neighbors(v)) {
      balance.push_back({1, var(v, w)});
      balance.push_back({-1, var(w, v)});
      in.push_back({1, var(w, v)});
    }
    model.add_constraint(balance, Sense::kEqual, 0, "flow" + p + bracket(v));
    model.add_constraint(in, Sense::kLessEqual, 1, "once" + p + bracket(v));
  }

  if (subtour_elimination && n > 3) {
    for (Vertex v = 0; v < n; ++v) {
      if (v == start || v == goal) continue;
      vars.order[v] = model.add_integer(3, n, "u" + p + bracket(v));
    }
    const double big = n - 2;
    for (const auto& [i, ui] : vars.order) {
      for (const auto& [j, uj] : vars.order) {
        if (i == j) continue;
        // u_i - u_j + (|V|-2) x_ij <= |V| - 3
        std::vector<Term> terms{{1, ui}, {-1, uj}};
        if (graph.has_edge(i, j)) terms.push_back({big, var(i, j)});
        model.add_constraint(terms, Sense::kLessEqual, big - 1, "order" + p + bracket(i) + bracket(j));
      }
    }
  }
  return vars;
}

BaseEncoding encode_base(const Graph& graph, Vertex start, Vertex goal, bool subtour_elimination) {
  BaseEncoding encoding;
  encoding.vars = add_base_encoding(encoding.model, graph, start, goal, subtour_elimination);
  return encoding;
}

Path extract_base_path(const BaseVars& vars, const Graph& graph, std::span<const double> x) {
  Path path{vars.start};
  std::vector<char> seen(graph.vertex_count(), 0);
  seen[vars.start] = 1;
  Vertex at = vars.start;
  while (at != vars.goal) {
    std::optional<Vertex> next;
    for (Vertex w : graph.neighbors(at)) {
      if (!is_one(x[vars.edges.at({at, w})])) continue;
      if (next) throw InvariantError("path branches at vertex " + std::to_string(at));
      next = w;
    }
    if (!next) throw InvariantError("path stops at vertex " + std::to_string(at));
    if (seen[*next]) throw InvariantError("path revisits vertex " + std::to_string(*next));
    seen[*next] = 1;
    path.push_back(*next);
    at = *next;
  }
  return path;
}

void encode_base_path(const BaseVars& vars, const Graph& graph, const Path& path,
                      std::span<double> x) {
  if (path.empty() || path.front() != vars.start || path.back() != vars.goal) {
    throw InvariantError("path does not join start and goal");
  }
  std::vector<char> seen(graph.vertex_count(), 0);
  for (Vertex v : path) {
    if (!graph.contains(v) || seen[v]) throw InvariantError("path is not simple");
    seen[v] = 1;
  }
  for (const auto& [edge, id] : vars.edges) x[id] = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto it = vars.edges.find({path[i], path[i + 1]});
    if (it == vars.edges.end()) throw InvariantError("path uses a missing edge");
    x[it->second] = 1;
  }
  // Interior vertices are numbered 3, 4, ... along the path; the rest sit at 3.
  for (const auto& [v, id] : vars.order) x[id] = 3;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    auto it = vars.order.find(path[i]);
    if (it != vars.order.end()) x[it->second] = 2.0 + static_cast<double>(i);
  }
}

// ---- time expanded ----

LayerMask reachable_copies(const Graph& graph, std::span<const Vertex> starts,
                           std::span<const Vertex> ends, int horizon, Reachability reachability,
                           const LayerMask& mask) {
  const int n = graph.vertex_count();
  auto allowed = [&](int t, Vertex v) { return mask.empty() || mask[t][v]; };
  LayerMask kept(horizon + 1, std::vector<char>(n, 0));
  if (reachability == Reachability::kNone) {
    for (int t = 0; t <= horizon; ++t) {
      for (Vertex v = 0; v < n; ++v) kept[t][v] = allowed(t, v);
    }
    return kept;
  }
  for (Vertex s : starts) {
    if (allowed(0, s)) kept[0][s] = 1;
  }
  for (int t = 1; t <= horizon; ++t) {
    for (Vertex v = 0; v < n; ++v) {
      if (!kept[t - 1][v]) continue;
      if (allowed(t, v)) kept[t][v] = 1;
      for (Vertex w : graph.neighbors(v)) {
        if (allowed(t, w)) kept[t][w] = 1;
      }
    }
  }
  if (reachability == Reachability::kForward) return kept;

  LayerMask back(horizon + 1, std::vector<char>(n, 0));
  for (Vertex g : ends) {
    if (kept[horizon][g]) back[horizon][g] = 1;
  }
  for (int t = horizon - 1; t >= 0; --t) {
    for (Vertex v = 0; v < n; ++v) {
      if (!kept[t][v]) continue;
      bool ok = back[t + 1][v];
      for (Vertex w : graph.neighbors(v)) ok = ok || back[t + 1][w];
      back[t][v] = ok;
    }
  }
  return back;
}

std::optional<VarId> CommodityVars::move_var(int t, Vertex from, Vertex to) const {
  if (t < 1 || t >= static_cast<int>(move_out.size())) return std::nullopt;
  if (from < 0 || from >= static_cast<int>(move_out[t].size())) return std::nullopt;
  for (const Arc& arc : move_out[t][from]) {
    if (arc.other == to) return arc.var;
  }
  return std::nullopt;
}

std::optional<VarId> CommodityVars::feedback_var(Vertex end, Vertex start) const {
  for (const FeedbackArc& arc : feedback) {
    if (arc.end == end && arc.start == start) return arc.var;
  }
  return std::nullopt;
}

CommodityVars add_commodity(IpModel& model, const Graph& graph, int horizon,
                            Reachability reachability, const CommoditySpec& spec) {
  if (horizon < 0) throw Error("negative horizon");
  if (spec.multiplicity < 1 || spec.multiplicity > static_cast<int>(spec.starts.size())) {
    throw Error("commodity multiplicity must be between 1 and the number of starts");
  }
  const int n = graph.vertex_count();
  if (!spec.mask.empty() && static_cast<int>(spec.mask.size()) != horizon + 1) {
    throw Error("layer mask does not match the horizon");
  }

  CommodityVars c;
  c.label = spec.label;
  c.multiplicity = spec.multiplicity;
  c.starts = spec.starts;
  c.ends = spec.ends;
  c.kept = reachable_copies(graph, spec.starts, spec.ends, horizon, reachability, spec.mask);
  c.move_out.assign(horizon + 1, {});
  c.move_in.assign(horizon + 1, {});
  for (int t = 0; t <= horizon; ++t) {
    if (std::none_of(c.kept[t].begin(), c.kept[t].end(), [](char k) { return k != 0; })) {
      c.empty_layer = t;
      return c;
    }
  }

  const int before = model.variable_count();
  const std::string p = prefix(spec.label);

  // Feedback edges, in end-major order.
  std::vector<Vertex> ends = spec.ends, starts = spec.starts;
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  std::sort(starts.begin(), starts.end());
  for (Vertex g : ends) {
    if (!c.kept[horizon][g]) continue;
    for (Vertex s : starts) {
      if (!c.kept[0][s]) continue;
      VarId id = model.add_binary("x" + p + "[0]" + bracket(g) + bracket(s));
      c.feedback.push_back({g, s, id});
    }
  }

  for (int t = 1; t <= horizon; ++t) {
    c.move_out[t].assign(n, {});
    c.move_in[t].assign(n, {});
    for (Vertex v = 0; v < n; ++v) {
      if (!c.kept[t - 1][v]) continue;
      auto add = [&](Vertex w) {
        if (!c.kept[t][w]) return;
        VarId id = model.add_binary("x" + p + bracket(t) + bracket(v) + bracket(w));
        c.move_out[t][v].push_back({w, id});
        c.move_in[t][w].push_back({v, id});
      };
      // Keep target order sorted, with the wait edge in its place.
      bool waited = false;
      for (Vertex w : graph.neighbors(v)) {
        if (!waited && w > v) {
          add(v);
          waited = true;
        }
        add(w);
      }
      if (!waited) add(v);
    }
  }
  c.variable_count = model.variable_count() - before;

  const double m = spec.multiplicity;
  std::vector<Term> fb;
  for (const auto& arc : c.feedback) fb.push_back({1, arc.var});
  model.add_constraint(fb, Sense::kEqual, m, "cycle" + p);

  if (horizon > 0) {
    std::vector<Term> arrive;
    for (Vertex g : ends) {
      if (!c.kept[horizon][g]) continue;
      for (const Arc& arc : c.move_in[horizon][g]) arrive.push_back({1, arc.var});
    }
    model.add_constraint(arrive, Sense::kEqual, m, "arrive" + p);
  }

  for (int t = 0; t <= horizon; ++t) {
    for (Vertex v = 0; v < n; ++v) {
      if (!c.kept[t][v]) continue;
      std::vector<Term> terms;
      if (t < horizon) {
        for (const Arc& arc : c.move_out[t + 1][v]) terms.push_back({1, arc.var});
      } else {
        for (const auto& arc : c.feedback) {
          if (arc.end == v) terms.push_back({1, arc.var});
        }
      }
      if (t > 0) {
        for (const Arc& arc : c.move_in[t][v]) terms.push_back({-1, arc.var});
      } else {
        for (const auto& arc : c.feedback) {
          if (arc.start == v) terms.push_back({-1, arc.var});
        }
      }
      if (merge_terms(terms).empty()) continue;
      model.add_constraint(terms, Sense::kEqual, 0, "keep" + p + bracket(t) + bracket(v));
    }
  }
  return c;
}

std::optional<int> TimeExpandedEncoding::empty_layer() const {
  for (const auto& c : commodities) {
    if (c.empty_layer) return c.empty_layer;
  }
  return std::nullopt;
}

TimeExpandedEncoding encode_time_expanded(const Graph& graph, std::span<const Vertex> starts,
                                          std::span<const Vertex> goals, int horizon,
                                          Reachability reachability) {
  TimeExpandedEncoding encoding;
  encoding.horizon = horizon;
  CommoditySpec spec;
  spec.label = "0";
  spec.starts.assign(starts.begin(), starts.end());
  spec.ends.assign(goals.begin(), goals.end());
  encoding.commodities.push_back(add_commodity(encoding.model, graph, horizon, reachability, spec));
  return encoding;
}

std::vector<Path> extract_paths(const CommodityVars& vars, std::span<const double> x) {
  if (vars.empty_layer) throw InvariantError("commodity has an empty layer");
  const int horizon = static_cast<int>(vars.kept.size()) - 1;
  auto units = [&](VarId id) { return static_cast<int>(std::lround(x[id])); };

  std::vector<int> left(x.size(), 0);
  std::vector<Vertex> sources;
  for (const auto& arc : vars.feedback) {
    int u = units(arc.var);
    for (int i = 0; i < u; ++i) sources.push_back(arc.start);
  }
  for (int t = 1; t <= horizon; ++t) {
    for (const auto& arcs : vars.move_out[t]) {
      for (const Arc& arc : arcs) left[arc.var] = units(arc.var);
    }
  }
  if (static_cast<int>(sources.size()) != vars.multiplicity) {
    throw InvariantError("feedback flow does not match the commodity size");
  }
  std::sort(sources.begin(), sources.end());

  std::vector<Path> paths;
  for (Vertex s : sources) {
    Path path{s};
    for (int t = 1; t <= horizon; ++t) {
      bool moved = false;
      for (const Arc& arc : vars.move_out[t][path.back()]) {
        if (left[arc.var] > 0) {
          --left[arc.var];
          path.push_back(arc.other);
          moved = true;
          break;
        }
      }
      if (!moved) {
        throw InvariantError("flow stops at layer " + std::to_string(t - 1) + ", vertex " +
                             std::to_string(path.back()));
      }
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

Path extract_path(const CommodityVars& vars, std::span<const double> x) {
  auto paths = extract_paths(vars, x);
  if (paths.size() != 1) throw InvariantError("expected a single path");
  return paths.front();
}

void encode_paths(const CommodityVars& vars, std::span<const Path> paths, std::span<double> x) {
  if (vars.empty_layer) throw InvariantError("commodity has an empty layer");
  const int horizon = static_cast<int>(vars.kept.size()) - 1;
  if (static_cast<int>(paths.size()) != vars.multiplicity) {
    throw InvariantError("wrong number of paths for the commodity");
  }
  for (const auto& arc : vars.feedback) x[arc.var] = 0;
  for (int t = 1; t <= horizon; ++t) {
    for (const auto& arcs : vars.move_out[t]) {
      for (const Arc& arc : arcs) x[arc.var] = 0;
    }
  }
  for (const Path& path : paths) {
    if (static_cast<int>(path.size()) != horizon + 1) throw InvariantError("path has wrong length");
    auto fb = vars.feedback_var(path.back(), path.front());
    if (!fb) throw InvariantError("path does not run from a start to an end copy");
    x[*fb] += 1;
    for (int t = 1; t <= horizon; ++t) {
      auto id = vars.move_var(t, path[t - 1], path[t]);
      if (!id) {
        throw InvariantError("path leaves the kept copies at layer " + std::to_string(t));
      }
      x[*id] += 1;
    }
  }
}

}  // namespace pathip
