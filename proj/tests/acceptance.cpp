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


// Acceptance run: one line per criterion, "criterion N: PASS|FAIL (...)".
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pathip/encoding.hpp"
#include "pathip/error.hpp"
#include "pathip/generator.hpp"
#include "pathip/mmcr.hpp"
#include "pathip/mpp.hpp"
#include "pathip/oracle.hpp"
#include "pathip/rcp.hpp"
#include "pathip/solver.hpp"
#include "pathip/validate.hpp"
#include "support.hpp"

namespace pathip {
namespace {

using testing::canonical_row;
using testing::canonical_rows;
using testing::canonical_text;
using testing::variable_names;

// Collects failures; keeps the first few messages for the report.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 5) messages_.push_back(what);
  }
  void note(const std::string& text) { notes_.push_back(text); }
  bool ok() const { return failures_ == 0; }
  std::string detail() const {
    std::ostringstream out;
    out << checks_ << " checks";
    for (const auto& n : notes_) out << ", " << n;
    if (failures_ > 0) {
      out << ", " << failures_ << " failed";
      for (const auto& m : messages_) out << "; " << m;
    }
    return out.str();
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::vector<std::string> messages_;
  std::vector<std::string> notes_;
};

std::string fmt(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// ---- 1 ----

void star_example(Check& c) {
  for (int k : {2, 1}) {
    Solution sol = solve_mpp(testing::star_mpp(k));
    int want = k == 2 ? 3 : 2;
    c.expect(sol.status == SolveStatus::kOptimal && sol.makespan == want,
             "k=" + std::to_string(k) + " makespan " + std::to_string(sol.makespan));
    c.expect(validate_mpp_solution(testing::star_mpp(k), sol).ok(), "invalid paths");
  }
}

// ---- 2 ----

void mpp_golden(Check& c) {
  MppModel model = build_mpp_model(testing::path3_mpp(), 1, MppConfig{}, MppHeuristic::none());
  const IpModel& m = model.encoding.model;
  c.expect(variable_names(m) == std::set<std::string>{"x[0][0][0][0]", "x[0][0][1][0]",
                                                      "x[1][0][0][1]", "x[1][0][1][1]",
                                                      "x[1][0][2][1]", "x[0][1][0][0]",
                                                      "x[0][1][0][1]", "x[1][1][1][0]",
                                                      "x[1][1][1][1]", "x[1][1][1][2]"},
           "mpp variable set");
  for (const auto& v : m.variables()) c.expect(v.kind == VarKind::kBinary, v.name + " not binary");
  const std::vector<std::string> listed = {
      "x[0][1][0][0] + x[0][1][0][1] = x[0][0][0][0] + x[0][0][1][0]",
      "x[1][1][1][2] + x[1][1][1][1] + x[1][1][1][0] = x[1][0][2][1] + x[1][0][1][1] + "
      "x[1][0][0][1]",
      "x[0][0][0][0] + x[0][0][1][0] <= 1",
      "x[1][0][0][1] + x[1][0][1][1] + x[1][0][2][1] <= 1",
      "x[0][1][0][0] + x[1][1][1][0] <= 1",
      "x[0][1][0][1] + x[1][1][1][1] <= 1",
      "x[0][1][0][1] + x[1][1][1][0] <= 1",
      "x[0][0][1][0] + x[1][0][2][1] >= 1",
      "x[0][1][0][0] <= 1",
      "x[1][1][1][1] <= 1",
      "x[1][1][1][2] <= 1",
  };
  auto rows = canonical_rows(m);
  for (const auto& row : listed) c.expect(rows.count(canonical_text(row)) > 0, "mpp row " + row);
}

void mmcr_golden(Check& c) {
  MmcrInstance inst = testing::path3_mmcr();
  MmcrModel m = build_mmcr_model(inst, build_region_graph(inst.graph, inst.obstacles));
  c.expect(variable_names(m.model) ==
               std::set<std::string>{"x[0][0][1]", "x[0][1][0]", "x[0][1][2]", "x[0][2][1]",
                                     "x[1][0][1]", "x[1][1][0]", "x[1][1][2]", "x[1][2][1]",
                                     "xV[0]", "xV[1]", "xV[2]", "xO[0]", "xO[1]"},
           "mmcr variable set");
  std::set<std::string> rows;
  for (const auto& row : m.model.constraints()) {
    std::set<std::string> big;
    for (const Term& t : row.terms) {
      if (std::abs(t.coef) != 1.0) big.insert(m.model.variable(t.var).name);
    }
    rows.insert(canonical_row(m.model, row, big));
  }
  const std::vector<std::string> listed = {
      "x[0][0][1] = 1",
      "x[0][0][1] + x[0][2][1] = 1",
      "x[1][1][0] + x[1][1][2] = 1",
      "x[1][1][2] = 1",
      "x[0][1][0] = 0",
      "x[0][1][0] + x[0][1][2] = 0",
      "x[1][0][1] + x[1][2][1] = 0",
      "x[1][2][1] = 0",
      "x[0][2][1] = x[0][1][2]",
      "x[0][1][2] <= 1",
      "x[1][0][1] = x[1][1][0]",
      "x[1][1][0] <= 1",
      "L xV[0] >= x[0][0][1] + x[0][1][0] + x[1][0][1] + x[1][1][0]",
      "L xV[1] >= x[0][1][0] + x[0][0][1] + x[0][1][2] + x[0][2][1] + x[1][1][0] + x[1][0][1] + "
      "x[1][1][2] + x[1][2][1]",
      "L xV[2] >= x[0][2][1] + x[0][1][2] + x[1][2][1] + x[1][1][2]",
      "L xO[0] >= xV[0] + xV[1]",
      "L xO[1] >= xV[1] + xV[2]",
  };
  for (const auto& row : listed) c.expect(rows.count(canonical_text(row)) > 0, "mmcr row " + row);
  c.expect(m.model.constraint_count() == static_cast<int>(listed.size()), "mmcr row count");
}

void otp_golden(Check& c) {
  RcpModel m = build_otp(testing::path3_otp(), 1, Reachability::kForward);
  c.expect(variable_names(m.model) ==
               std::set<std::string>{"x[0][u][0]", "x[0][u][1]", "x[2][0][u]", "x[2][1][u]",
                                     "x[1][0][0]", "x[1][0][1]", "x[1][1][0]", "x[1][1][1]",
                                     "x[1][1][2]", "xv[0]", "xv[1]", "xv[2]", "t[0]", "t[1]",
                                     "t[2]"},
           "otp variable set");
  auto rows = canonical_rows(m.model);
  c.expect(rows.count(canonical_text(
               "2 x[1][0][1] + 2 x[1][1][0] + 3 x[1][1][2] + t[0] + t[1] + t[2] <= 10")) > 0,
           "otp budget row");
}

// ---- 3 and 5 ----

MppInstance small_mpp(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GeneratorSpec spec;
  spec.kind = "mpp";
  spec.rows = 2 + static_cast<int>(rng() % 3);
  spec.cols = 2 + static_cast<int>(rng() % 3);
  spec.robots = spec.rows * spec.cols >= 6 ? 2 + static_cast<int>(rng() % 2) : 2;
  spec.k = 1 + static_cast<int>(rng() % spec.robots);
  spec.removal = spec.rows * spec.cols >= 8 ? 0.25 * (rng() % 101) / 100.0 : 0.0;
  return std::get<MppInstance>(generate_instance(spec, seed));
}

std::vector<MppInstance> criterion3_instances() {
  std::vector<MppInstance> out;
  for (std::uint64_t seed = 0; seed < 50; ++seed) out.push_back(small_mpp(3000 + seed));
  return out;
}

// Makespan, or -1 when there is none within the default cap.
int exact_makespan(const MppInstance& inst, const MppHeuristic& h = MppHeuristic::none()) {
  MppConfig config;
  config.heuristic = h;
  Solution sol = solve_mpp(inst, config);
  if (sol.status == SolveStatus::kOptimal) return sol.makespan;
  return -1;
}

void mpp_oracle_equivalence(Check& c) {
  int solvable = 0;
  for (const MppInstance& inst : criterion3_instances()) {
    int cap = underestimate_T(inst) + 2 * inst.graph.vertex_count();
    auto want = mpp_oracle(inst, cap);
    MppConfig config;
    Solution sol = solve_mpp(inst, config);
    if (want) {
      ++solvable;
      c.expect(sol.status == SolveStatus::kOptimal && sol.makespan == *want,
               "oracle " + std::to_string(*want) + " model " + std::to_string(sol.makespan));
      c.expect(validate_mpp_solution(inst, sol).ok(), "invalid paths");
    } else {
      c.expect(sol.status != SolveStatus::kOptimal, "model solved an impossible instance");
    }
  }
  c.note(std::to_string(solvable) + "/50 solvable");
}

void heuristic_optimality(Check& c) {
  for (const MppInstance& inst : criterion3_instances()) {
    int exact = exact_makespan(inst);
    for (int h : {0, 1, 2}) {
      for (auto heur : {MppHeuristic::tube(h), MppHeuristic::sphere(h)}) {
        c.expect(exact_makespan(inst, heur) == exact,
                 "h=" + std::to_string(h) + " changed the makespan");
      }
    }
  }
}

// ---- 4 ----

void variable_reduction(Check& c) {
  GeneratorSpec spec;
  spec.kind = "mpp";
  spec.rows = 24;
  spec.cols = 18;
  spec.robots = 30;
  spec.removal = 0.1;
  double exact = 0, tube = 0, sphere = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = std::get<MppInstance>(generate_instance(spec, 4000 + seed));
    const int T = underestimate_T(inst);
    auto count = [&](const MppHeuristic& h) {
      return build_mpp_model(inst, T, MppConfig{}, h).encoding.model.variable_count();
    };
    exact += count(MppHeuristic::none());
    tube += count(MppHeuristic::tube(2));
    sphere += count(MppHeuristic::sphere(2));
  }
  c.note("tube(2) " + fmt(tube / exact) + " of exact");
  c.note("sphere(2) " + fmt(sphere / exact) + " of exact");
  c.expect(tube <= 0.4 * exact, "tube ratio above 0.4");
  c.expect(sphere <= 0.4 * exact, "sphere ratio above 0.4");
}

// ---- 6 ----

void mmcr_oracle_equivalence(Check& c) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GeneratorSpec spec;
    spec.kind = "mmcr";
    spec.rows = spec.cols = 10;
    spec.robots = 1 + static_cast<int>(seed % 2);
    spec.obstacles = 1 + static_cast<int>(seed % 10);
    spec.max_obstacle_side = 4;
    auto inst = std::get<MmcrInstance>(generate_instance(spec, 6000 + seed));
    int want = mmcr_oracle(inst);
    Solution sol = solve_mmcr(inst);
    c.expect(sol.status == SolveStatus::kOptimal &&
                 static_cast<int>(sol.removed_obstacles.size()) == want,
             "seed " + std::to_string(seed) + ": oracle " + std::to_string(want) + " model " +
                 std::to_string(sol.removed_obstacles.size()));
    c.expect(validate_mmcr_solution(inst, sol).ok(), "invalid mmcr solution");
  }
}

// ---- 7 ----

RcpInstance small_rcp(std::uint64_t seed, bool otp) {
  std::mt19937_64 rng(seed);
  if (seed % 2 == 0) {
    GeneratorSpec spec;
    spec.kind = otp ? "otp" : "qcop";
    spec.rows = 2;
    spec.cols = 2 + static_cast<int>(rng() % 3);
    spec.robots = 1 + static_cast<int>(rng() % 2);
    spec.budget = 1 + static_cast<double>(rng() % 5);
    return std::get<RcpInstance>(generate_instance(spec, seed));
  }
  const int n = 3 + static_cast<int>(rng() % 6);
  RcpInstance inst;
  inst.graph = testing::random_connected_graph(n, 0.25, rng);
  std::uniform_int_distribution<int> cost(1, 4);
  for (int e = 0; e < inst.graph.edge_count(); ++e) inst.edge_costs.push_back(0.5 * cost(rng));
  inst.budget = 0.5 * static_cast<double>(rng() % 9);
  std::uniform_real_distribution<double> value(0.05, 1.0);
  std::vector<double> values(n);
  for (double& v : values) v = value(rng);
  std::vector<Vertex> starts{static_cast<Vertex>(rng() % n)};
  Vertex extra = static_cast<Vertex>(rng() % n);
  if (extra != starts[0]) starts.push_back(extra);
  std::sort(starts.begin(), starts.end());
  inst.start_set = starts;
  if (otp) {
    inst.goal_set = starts;
    inst.objective = OtpRates{values};
  } else {
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 2 || v == starts[0]) inst.goal_set.push_back(v);
    }
    inst.objective = QcopRewards{values};
  }
  return inst;
}

void rcp_oracle_equivalence(Check& c) {
  int otp_count = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const bool otp = seed % 4 >= 2;
    otp_count += otp;
    RcpInstance inst = small_rcp(7000 + seed, otp);
    RcpConfig config;
    config.horizon = std::min(choose_horizon(inst), 6);
    auto want = rcp_oracle(inst, *config.horizon);
    Solution sol = solve_rcp(inst, config);
    const std::string tag = "seed " + std::to_string(seed);
    if (!want) {
      c.expect(sol.status == SolveStatus::kInfeasible, tag + ": expected infeasible");
      continue;
    }
    c.expect(sol.status == SolveStatus::kOptimal && std::abs(sol.objective - *want) <= 1e-6,
             tag + ": oracle " + fmt(*want, 6) + " model " + fmt(sol.objective, 6));
    if (sol.paths.size() != 1) {
      c.expect(false, tag + ": no walk");
      continue;
    }
    RcpValue value = evaluate_rcp(inst, sol.paths[0], sol.dwell_times);
    c.expect(value.cost <= inst.budget + 1e-9, tag + ": over budget");
    c.expect(std::abs(value.reward - sol.reward) <= 1e-6, tag + ": reward mismatch");
  }
  c.note(std::to_string(50 - otp_count) + " qcop, " + std::to_string(otp_count) + " otp");
}

// ---- 8 ----

void base_bijection(Check& c, const Graph& g, Vertex s, Vertex t, long& paths) {
  BaseEncoding enc = encode_base(g, s, t, true);
  std::set<Path> extracted;
  long assignments = 0;
  testing::for_each_feasible(enc.model, [&](const std::vector<double>& x) {
    ++assignments;
    Path p = extract_base_path(enc.vars, g, x);
    std::vector<double> again(x.size(), 0.0);
    encode_base_path(enc.vars, g, p, again);
    bool same_edges = true;
    for (const auto& [edge, var] : enc.vars.edges) same_edges = same_edges && again[var] == x[var];
    c.expect(same_edges, "base round trip");
    extracted.insert(p);
    return true;
  });
  auto want = testing::simple_paths(g, s, t);
  std::set<Path> want_set(want.begin(), want.end());
  c.expect(extracted == want_set, "base path set");
  // Distinct edge sets: the order variables may vary, paths may not repeat.
  std::set<std::vector<double>> edge_sets;
  testing::for_each_feasible(enc.model, [&](const std::vector<double>& x) {
    std::vector<double> edges;
    for (const auto& [edge, var] : enc.vars.edges) edges.push_back(x[var]);
    edge_sets.insert(edges);
    return true;
  });
  c.expect(edge_sets.size() == want_set.size(), "base edge sets");
  for (const Path& p : want) {
    std::vector<double> x(enc.model.variable_count(), 0.0);
    encode_base_path(enc.vars, g, p, x);
    c.expect(enc.model.is_feasible(x) && extract_base_path(enc.vars, g, x) == p,
             "encoded path infeasible");
  }
  paths += static_cast<long>(want.size());
}

void expanded_bijection(Check& c, const Graph& g, Vertex s, Vertex t, int T, long& walks) {
  auto want_list = testing::timed_walks(g, s, t, T);
  std::set<Path> want(want_list.begin(), want_list.end());
  std::vector<Vertex> starts{s}, goals{t};
  for (auto reach : {Reachability::kNone, Reachability::kForward, Reachability::kFull}) {
    auto enc = encode_time_expanded(g, starts, goals, T, reach);
    if (enc.empty_layer()) {
      c.expect(want.empty(), "empty layer with walks present");
      continue;
    }
    const CommodityVars& vars = enc.commodities[0];
    std::set<Path> got;
    testing::for_each_feasible(enc.model, [&](const std::vector<double>& x) {
      Path p = extract_path(vars, x);
      c.expect(got.insert(p).second, "two assignments for one walk");
      std::vector<double> again(x.size(), 0.0);
      encode_paths(vars, std::vector<Path>{p}, again);
      c.expect(again == x, "expanded round trip");
      return true;
    });
    c.expect(got == want, "expanded walk set");
  }
  walks += static_cast<long>(want.size());
}

void bijections(Check& c) {
  long paths = 0, walks = 0, graphs = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      ++graphs;
      for (Vertex s = 0; s < n; ++s) {
        for (Vertex t = 0; t < n; ++t) {
          if (s != t) base_bijection(c, g, s, t, paths);
          for (int T = 0; T <= 3; ++T) expanded_bijection(c, g, s, t, T, walks);
        }
      }
    }
  }
  c.note(std::to_string(graphs) + " graphs");
  c.note(std::to_string(paths) + " paths");
  c.note(std::to_string(walks) + " walks");
}

// ---- 9 ----

IpModel random_binary(std::mt19937_64& rng) {
  const int n = 1 + static_cast<int>(rng() % 15);
  const int rows = static_cast<int>(rng() % 11);
  std::uniform_int_distribution<int> coef(-5, 9);
  IpModel m;
  for (int j = 0; j < n; ++j) m.add_binary("b" + std::to_string(j));
  for (int r = 0; r < rows; ++r) {
    std::vector<Term> terms;
    double positive = 0;
    for (int j = 0; j < n; ++j) {
      if (rng() % 3 == 0) continue;
      int a = coef(rng);
      if (a == 0) continue;
      terms.push_back({static_cast<double>(a), j});
      positive += std::max(a, 0);
    }
    int kind = static_cast<int>(rng() % 6);
    Sense sense = kind < 4 ? Sense::kLessEqual : kind == 4 ? Sense::kGreaterEqual : Sense::kEqual;
    double rhs = std::floor(positive * std::uniform_real_distribution<double>(0.1, 0.7)(rng));
    if (sense == Sense::kGreaterEqual) rhs = std::floor(rhs / 3);
    m.add_constraint(terms, sense, rhs);
  }
  m.set_objective_sense(rng() % 2 ? ObjectiveSense::kMaximize : ObjectiveSense::kMinimize);
  for (int j = 0; j < n; ++j) m.add_objective_term(coef(rng), j);
  return m;
}

void solver_correctness(Check& c) {
  std::mt19937_64 rng(9009);
  long logged = 0;
  for (int trial = 0; trial < 200; ++trial) {
    IpModel m = random_binary(rng);
    auto truth = testing::brute_force(m);
    SolveConfig config;
    config.record_node_log = true;
    SolveOutcome out = solve(m, config);
    const std::string tag = "trial " + std::to_string(trial);
    if (!truth.feasible) {
      c.expect(out.status == OutcomeStatus::kInfeasible, tag + ": expected infeasible");
      continue;
    }
    c.expect(out.status == OutcomeStatus::kOptimal && out.objective == truth.objective &&
                 m.is_feasible(out.assignment),
             tag + ": optimum mismatch");
    const bool maximize = m.objective().sense == ObjectiveSense::kMaximize;
    for (const auto& node : out.node_log) {
      ++logged;
      double gap = maximize ? node.global_bound - truth.objective
                            : truth.objective - node.global_bound;
      c.expect(gap >= -1e-6, tag + ": node bound below the optimum");
    }
  }
  c.note(std::to_string(logged) + " node log entries");
}

// ---- 10 ----

void large_smoke(Check& c) {
  GeneratorSpec spec;
  spec.kind = "mpp";
  spec.rows = 24;
  spec.cols = 18;
  spec.robots = 10;
  spec.removal = 0.1;
  auto inst = std::get<MppInstance>(generate_instance(spec, 10));
  MppConfig config;
  config.solver.time_limit = 600;
  Solution sol = solve_mpp(inst, config);
  c.expect(sol.status == SolveStatus::kOptimal, "status " + to_string(sol.status));
  c.expect(validate_mpp_solution(inst, sol).ok(), "invalid paths");
  c.note("makespan " + std::to_string(sol.makespan));
  c.note(std::to_string(sol.stats.variable_count) + " variables");
}

struct Criterion {
  int id;
  double budget_seconds;
  std::function<void(Check&)> run;
};

}  // namespace
}  // namespace pathip

int main() {
  using namespace pathip;
  const std::vector<Criterion> criteria = {
      {1, 1, star_example},
      {2, 3,
       [](Check& c) {
         mpp_golden(c);
         mmcr_golden(c);
         otp_golden(c);
       }},
      {3, 120, mpp_oracle_equivalence},
      {4, 120, variable_reduction},
      {5, 600, heuristic_optimality},
      {6, 120, mmcr_oracle_equivalence},
      {7, 180, rcp_oracle_equivalence},
      {8, 60, bijections},
      {9, 600, solver_correctness},
      {10, 600, large_smoke},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    Check check;
    auto started = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    check.expect(seconds <= criterion.budget_seconds,
                 "took longer than " + fmt(criterion.budget_seconds, 0) + " s");
    bool ok = check.ok();
    failed += !ok;
    std::cout << "criterion " << criterion.id << ": " << (ok ? "PASS" : "FAIL") << " ("
              << check.detail() << ", " << fmt(seconds) << " s)" << std::endl;
  }
  return failed;
}
