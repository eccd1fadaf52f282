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

#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pathip::testing {
namespace {

constexpr double kTol = 1e-9;

struct Coef {
  double value = 0;
  bool symbolic = false;
};

std::string format_coef(const Coef& c) {
  if (c.symbolic) return c.value < 0 ? "-L" : "L";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", c.value);
  return buf;
}

std::string canonical(std::map<std::string, Coef> terms, Sense sense, double rhs) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (!it->second.symbolic && std::abs(it->second.value) < kTol) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
  bool flip = sense == Sense::kGreaterEqual ||
              (sense == Sense::kEqual && !terms.empty() && terms.begin()->second.value < 0);
  if (flip) {
    for (auto& [name, c] : terms) c.value = -c.value;
    rhs = -rhs;
    if (sense == Sense::kGreaterEqual) sense = Sense::kLessEqual;
  }
  std::string out;
  for (const auto& [name, c] : terms) out += format_coef(c) + "*" + name + " ";
  out += sense == Sense::kEqual ? "= " : "<= ";
  out += format_coef({rhs == 0 ? 0.0 : rhs, false});
  return out;
}

bool is_number(const std::string& token) {
  if (token.empty()) return false;
  char* end = nullptr;
  std::strtod(token.c_str(), &end);
  return end == token.c_str() + token.size();
}

}  // namespace

void for_each_feasible(const IpModel& model,
                       const std::function<bool(const std::vector<double>&)>& visit) {
  const int n = model.variable_count();
  const auto& rows = model.constraints();
  std::vector<double> lo(n), hi(n);
  for (int j = 0; j < n; ++j) {
    const auto& v = model.variable(j);
    if (!v.integral()) throw std::runtime_error("enumeration needs integral variables");
    lo[j] = v.lower;
    hi[j] = v.upper;
  }
  std::vector<std::vector<std::pair<int, double>>> occurs(n);
  std::vector<double> min_act(rows.size(), 0), max_act(rows.size(), 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const Term& t : rows[r].terms) {
      occurs[t.var].push_back({static_cast<int>(r), t.coef});
      min_act[r] += t.coef > 0 ? t.coef * lo[t.var] : t.coef * hi[t.var];
      max_act[r] += t.coef > 0 ? t.coef * hi[t.var] : t.coef * lo[t.var];
    }
  }
  auto row_ok = [&](int r) {
    const auto& c = rows[r];
    if (c.sense != Sense::kGreaterEqual && min_act[r] > c.rhs + 1e-7) return false;
    if (c.sense != Sense::kLessEqual && max_act[r] < c.rhs - 1e-7) return false;
    return true;
  };
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!row_ok(static_cast<int>(r))) return;
  }

  std::vector<double> x(n, 0);
  bool stop = false;
  auto dfs = [&](auto&& self, int j) -> void {
    if (stop) return;
    if (j == n) {
      if (!visit(x)) stop = true;
      return;
    }
    for (double value = lo[j]; value <= hi[j] + 0.5 && !stop; value += 1) {
      bool ok = true;
      for (auto [r, a] : occurs[j]) {
        min_act[r] += a * value - (a > 0 ? a * lo[j] : a * hi[j]);
        max_act[r] += a * value - (a > 0 ? a * hi[j] : a * lo[j]);
      }
      for (auto [r, a] : occurs[j]) ok = ok && row_ok(r);
      if (ok) {
        x[j] = value;
        self(self, j + 1);
      }
      for (auto [r, a] : occurs[j]) {
        min_act[r] -= a * value - (a > 0 ? a * lo[j] : a * hi[j]);
        max_act[r] -= a * value - (a > 0 ? a * hi[j] : a * lo[j]);
      }
    }
    x[j] = 0;
  };
  dfs(dfs, 0);
}

BruteForce brute_force(const IpModel& model) {
  BruteForce out;
  const bool maximize = model.objective().sense == ObjectiveSense::kMaximize;
  for_each_feasible(model, [&](const std::vector<double>& x) {
    double value = model.evaluate(x);
    ++out.feasible_count;
    if (!out.feasible || (maximize ? value > out.objective + kTol : value < out.objective - kTol)) {
      out.feasible = true;
      out.objective = value;
      out.assignment = x;
    }
    return true;
  });
  return out;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Edge> all;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) all.push_back({a, b});
  }
  std::vector<Graph> out;
  for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < all.size(); ++e) {
      if (mask & (1u << e)) edges.push_back(all[e]);
    }
    Graph g(n, edges);
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

Graph random_connected_graph(int n, double extra_edge_probability, std::mt19937_64& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::set<Edge> edges;
  for (int i = 1; i < n; ++i) {
    int parent = order[std::uniform_int_distribution<int>(0, i - 1)(rng)];
    edges.insert({std::min(parent, order[i]), std::max(parent, order[i])});
  }
  std::bernoulli_distribution extra(extra_edge_probability);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!edges.count({a, b}) && extra(rng)) edges.insert({a, b});
    }
  }
  return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

std::vector<Path> simple_paths(const Graph& graph, Vertex s, Vertex g) {
  std::vector<Path> out;
  Path path{s};
  std::vector<char> used(graph.vertex_count(), 0);
  used[s] = 1;
  auto dfs = [&](auto&& self) -> void {
    Vertex at = path.back();
    if (at == g) {
      out.push_back(path);
      return;
    }
    for (Vertex w : graph.neighbors(at)) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      self(self);
      path.pop_back();
      used[w] = 0;
    }
  };
  dfs(dfs);
  return out;
}

std::vector<Path> timed_walks(const Graph& graph, Vertex s, Vertex g, int T) {
  std::vector<Path> out;
  Path path{s};
  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(path.size()) == T + 1) {
      if (path.back() == g) out.push_back(path);
      return;
    }
    Vertex at = path.back();
    std::vector<Vertex> next{at};
    for (Vertex w : graph.neighbors(at)) next.push_back(w);
    for (Vertex w : next) {
      path.push_back(w);
      self(self);
      path.pop_back();
    }
  };
  dfs(dfs);
  return out;
}

MppInstance path3_mpp() {
  MppInstance inst;
  inst.graph = Graph(3, {{0, 1}, {1, 2}});
  inst.starts = {0, 1};
  inst.goals = {1, 2};
  inst.k = 1;
  return inst;
}

MmcrInstance path3_mmcr() {
  MmcrInstance inst;
  inst.graph = Graph(3, {{0, 1}, {1, 2}});
  inst.starts = {0, 1};
  inst.goals = {1, 2};
  inst.obstacles = {{0, 1}, {1, 2}};
  return inst;
}

RcpInstance path3_otp() {
  RcpInstance inst;
  inst.graph = Graph(3, {{0, 1}, {1, 2}});
  inst.edge_costs = {2, 3};
  inst.budget = 10;
  inst.start_set = {0, 1};
  inst.goal_set = {0, 1};
  inst.objective = OtpRates{{1, 2, 3}};
  return inst;
}

MppInstance star_mpp(int k) {
  MppInstance inst;
  inst.graph = Graph(4, {{0, 1}, {0, 2}, {0, 3}});
  inst.starts = {1, 2};
  inst.goals = {2, 3};
  inst.k = k;
  return inst;
}

std::string canonical_row(const IpModel& model, const LinearConstraint& row,
                          const std::set<std::string>& symbolic) {
  std::map<std::string, Coef> terms;
  for (const Term& t : row.terms) {
    const std::string& name = model.variable(t.var).name;
    bool sym = symbolic.count(name) > 0;
    terms[name] = {sym ? (t.coef < 0 ? -1.0 : 1.0) : t.coef, sym};
  }
  return canonical(std::move(terms), row.sense, row.rhs);
}

std::set<std::string> canonical_rows(const IpModel& model, const std::set<std::string>& symbolic) {
  std::set<std::string> out;
  for (const auto& row : model.constraints()) out.insert(canonical_row(model, row, symbolic));
  return out;
}

std::string canonical_text(const std::string& row) {
  std::istringstream in(row);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  std::map<std::string, Coef> terms;
  double rhs = 0;
  std::optional<Sense> sense;
  double side = 1;  // +1 left of the relation, -1 right of it
  double sign = 1;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& t = tokens[i];
    if (t == "<=" || t == "=" || t == ">=") {
      sense = t == "<=" ? Sense::kLessEqual : t == "=" ? Sense::kEqual : Sense::kGreaterEqual;
      side = -1;
      sign = 1;
      continue;
    }
    if (t == "+" || t == "-") {
      sign = t == "-" ? -1 : 1;
      continue;
    }
    bool coef_token = is_number(t) || t == "L";
    bool followed_by_name = i + 1 < tokens.size() && !is_number(tokens[i + 1]) &&
                            tokens[i + 1] != "+" && tokens[i + 1] != "-" &&
                            tokens[i + 1] != "<=" && tokens[i + 1] != "=" &&
                            tokens[i + 1] != ">=" && tokens[i + 1] != "L";
    if (coef_token && !followed_by_name) {
      if (t == "L") throw std::runtime_error("dangling L in row: " + row);
      rhs -= side * sign * std::stod(t);  // constants move to the right
      sign = 1;
      continue;
    }
    Coef c{1.0, false};
    std::string name = t;
    if (coef_token) {
      c = t == "L" ? Coef{1.0, true} : Coef{std::stod(t), false};
      name = tokens[++i];
    }
    c.value *= side * sign;
    Coef& slot = terms[name];
    slot.symbolic = slot.symbolic || c.symbolic;
    slot.value += c.value;
    sign = 1;
  }
  if (!sense) throw std::runtime_error("row without relation: " + row);
  return canonical(std::move(terms), *sense, rhs);
}

std::set<std::string> variable_names(const IpModel& model) {
  std::set<std::string> out;
  for (const auto& v : model.variables()) out.insert(v.name);
  return out;
}

}  // namespace pathip::testing
