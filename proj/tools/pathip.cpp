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

// pathip command-line front end.
//
// Exit codes: 0 optimal or verified, 2 feasible but not proven optimal,
// 3 infeasible, 4 timeout, 1 usage error, failed verification or any other
// error.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pathip/bench.hpp"
#include "pathip/error.hpp"
#include "pathip/generator.hpp"
#include "pathip/instance_io.hpp"
#include "pathip/lp_format.hpp"
#include "pathip/mmcr.hpp"
#include "pathip/mpp.hpp"
#include "pathip/oracle.hpp"
#include "pathip/rcp.hpp"
#include "pathip/solution_io.hpp"
#include "pathip/solver.hpp"
#include "pathip/validate.hpp"

namespace {

using namespace pathip;

struct Globals {
  std::uint64_t seed = 0;
  double time_limit = 600.0;
  std::string backend = "embedded";
};

int exit_code(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return 0;
    case SolveStatus::kFeasible:
      return 2;
    case SolveStatus::kInfeasible:
      return 3;
    case SolveStatus::kTimeout:
      return 4;
    case SolveStatus::kError:
      return 1;
  }
  return 1;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

MppHeuristic parse_heuristic(const std::string& text) {
  if (text.empty() || text == "none") return MppHeuristic::none();
  auto eq = text.find('=');
  if (eq == std::string::npos) throw Error("heuristic must be tube=H or sphere=H");
  std::string kind = text.substr(0, eq);
  int h = 0;
  try {
    h = std::stoi(text.substr(eq + 1));
  } catch (const std::exception&) {
    throw Error("heuristic radius must be an integer");
  }
  if (kind == "tube") return MppHeuristic::tube(h);
  if (kind == "sphere") return MppHeuristic::sphere(h);
  throw Error("heuristic must be tube=H or sphere=H");
}

struct SolveArgs {
  std::string problem, instance, heuristic, output, flexible = "anywhere";
  std::optional<int> k, max_T, horizon;
  std::optional<double> budget;
  int radius = 1;
  bool no_fallback = false;
  bool direct = false;
};

ProblemInstance load_checked(const std::string& path, const std::string& problem,
                             const SolveArgs* overrides = nullptr) {
  ProblemInstance instance = load_instance_file(path);
  if (!problem.empty() && problem != problem_name(instance)) {
    throw Error("instance is a " + problem_name(instance) + " problem, not " + problem);
  }
  if (overrides) {
    if (auto* mpp = std::get_if<MppInstance>(&instance); mpp && overrides->k) {
      mpp->k = *overrides->k;
      mpp->validate();
    }
    if (auto* rcp = std::get_if<RcpInstance>(&instance); rcp && overrides->budget) {
      rcp->budget = *overrides->budget;
      rcp->validate();
    }
  }
  return instance;
}

SolveConfig solver_config(const Globals& g) {
  SolveConfig config;
  config.time_limit = g.time_limit;
  config.seed = g.seed;
  return config;
}

int run_solve(const Globals& g, const SolveArgs& a) {
  ProblemInstance instance = load_checked(a.instance, a.problem, &a);
  std::shared_ptr<const SolverBackend> backend = make_backend(g.backend);
  Solution sol;
  if (const auto* mpp = std::get_if<MppInstance>(&instance)) {
    MppConfig config;
    config.heuristic = parse_heuristic(a.heuristic);
    config.fallback_to_exact = !a.no_fallback;
    config.max_T = a.max_T;
    if (a.flexible == "neighborhood") {
      config.flexible_ends = FlexibleEnds::kNeighborhood;
    } else if (a.flexible != "anywhere") {
      throw Error("--flexible must be anywhere or neighborhood");
    }
    config.neighborhood_radius = a.radius;
    config.solver = solver_config(g);
    config.backend = backend;
    sol = solve_mpp(*mpp, config);
  } else if (const auto* mmcr = std::get_if<MmcrInstance>(&instance)) {
    MmcrConfig config;
    config.solver = solver_config(g);
    config.backend = backend;
    config.use_regions = !a.direct;
    sol = solve_mmcr(*mmcr, config);
  } else {
    RcpConfig config;
    config.solver = solver_config(g);
    config.backend = backend;
    config.horizon = a.horizon;
    sol = solve_rcp(std::get<RcpInstance>(instance), config);
  }
  emit(save_solution(sol), a.output);
  return exit_code(sol.status);
}

int run_verify(const std::string& instance_path, const std::string& solution_path) {
  ProblemInstance instance = load_instance_file(instance_path);
  Solution sol = load_solution(read_text_file(solution_path));
  if (sol.problem != problem_name(instance)) {
    std::cout << "problem mismatch: solution is " << sol.problem << "\n";
    return 1;
  }
  Verdict verdict;
  if (const auto* mpp = std::get_if<MppInstance>(&instance)) {
    verdict = validate_mpp_solution(*mpp, sol);
  } else if (const auto* mmcr = std::get_if<MmcrInstance>(&instance)) {
    verdict = validate_mmcr_solution(*mmcr, sol);
  } else {
    const auto& rcp = std::get<RcpInstance>(instance);
    if (sol.paths.size() != 1) {
      std::cout << "expected exactly one walk\n";
      return 1;
    }
    const Path& walk = sol.paths.front();
    RcpValue value;
    try {
      value = evaluate_rcp(rcp, walk, sol.dwell_times);
    } catch (const InvariantError& e) {
      std::cout << e.what() << "\n";
      return 1;
    }
    auto in = [](const std::vector<Vertex>& set, Vertex v) {
      return std::find(set.begin(), set.end(), v) != set.end();
    };
    std::string problem;
    if (walk.empty() || !in(rcp.start_set, walk.front()) || !in(rcp.goal_set, walk.back())) {
      problem = "walk does not run from the start set to the goal set";
    } else if (rcp.is_otp() && walk.front() != walk.back()) {
      problem = "tour does not return to its start";
    } else if (value.cost > rcp.budget + 1e-9) {
      problem = "budget exceeded: " + format_number(value.cost);
    } else if (std::abs(value.reward - sol.reward) > 1e-6) {
      problem = "reported reward " + format_number(sol.reward) + " but the walk earns " +
                format_number(value.reward);
    }
    if (!problem.empty()) {
      std::cout << problem << "\n";
      return 1;
    }
  }
  if (!verdict.ok()) {
    std::cout << verdict.summary();
    return 1;
  }
  std::cout << "verified\n";
  return 0;
}

int run_oracle(const std::string& problem, const std::string& path, std::optional<int> max_T,
               std::optional<int> horizon) {
  ProblemInstance instance = load_checked(path, problem);
  if (const auto* mpp = std::get_if<MppInstance>(&instance)) {
    int cap = max_T.value_or(underestimate_T(*mpp) + 2 * mpp->graph.vertex_count());
    auto t = mpp_oracle(*mpp, cap);
    std::cout << (t ? std::to_string(*t) : "none") << "\n";
    return t ? 0 : 3;
  }
  if (const auto* mmcr = std::get_if<MmcrInstance>(&instance)) {
    std::cout << mmcr_oracle(*mmcr) << "\n";
    return 0;
  }
  const auto& rcp = std::get<RcpInstance>(instance);
  auto best = rcp_oracle(rcp, horizon.value_or(choose_horizon(rcp)));
  std::cout << (best ? format_number(*best) : "none") << "\n";
  return best ? 0 : 3;
}

int run_export(const std::string& path, std::optional<int> T, const std::string& heuristic,
               const std::string& output) {
  ProblemInstance instance = load_instance_file(path);
  IpModel model;
  if (const auto* mpp = std::get_if<MppInstance>(&instance)) {
    MppConfig config;
    config.heuristic = parse_heuristic(heuristic);
    MppModel m = build_mpp_model(*mpp, T.value_or(underestimate_T(*mpp)), config, config.heuristic);
    if (m.trivially_infeasible()) throw Error("some robot has no copy left at this horizon");
    model = std::move(m.encoding.model);
  } else if (const auto* mmcr = std::get_if<MmcrInstance>(&instance)) {
    model = build_mmcr_model(*mmcr, build_region_graph(mmcr->graph, mmcr->obstacles)).model;
  } else {
    const auto& rcp = std::get<RcpInstance>(instance);
    int horizon = T.value_or(choose_horizon(rcp));
    model = rcp.is_otp() ? build_otp(rcp, horizon).model : build_qcop(rcp, horizon).model;
  }
  emit(export_lp(model), output);
  return 0;
}

int run_lp_solve(const Globals& g, const std::string& lp_path, const std::string& sol_path) {
  IpModel model = parse_lp(read_text_file(lp_path));
  SolveOutcome outcome = solve(model, solver_config(g));
  write_text_file(sol_path, write_solution_file(model, outcome));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer-programming planners for multi-robot path problems"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--time-limit", g.time_limit, "Solver time limit in seconds")
      ->capture_default_str();
  app.add_option("--backend", g.backend, "embedded or external:<command>")->capture_default_str();

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance and print the solution");
  solve_cmd->add_option("--problem", sa.problem, "mpp, mmcr, qcop or otp (checked)");
  solve_cmd->add_option("--instance", sa.instance, "Instance document")->required();
  solve_cmd->add_option("--k", sa.k, "MPP: robots that must reach their goals");
  solve_cmd->add_option("--heuristic", sa.heuristic, "MPP: tube=H or sphere=H");
  solve_cmd->add_flag("--no-fallback", sa.no_fallback, "MPP: never re-solve without pruning");
  solve_cmd->add_option("--max-T", sa.max_T, "MPP: largest makespan to try");
  solve_cmd->add_option("--flexible", sa.flexible, "MPP, k < n: anywhere or neighborhood");
  solve_cmd->add_option("--radius", sa.radius, "MPP: neighborhood radius");
  solve_cmd->add_flag("--direct", sa.direct, "MMCR: build over G instead of the region graph");
  solve_cmd->add_option("--budget", sa.budget, "RCP: override the budget");
  solve_cmd->add_option("--horizon", sa.horizon, "RCP: time-expansion horizon");
  solve_cmd->add_option("--output", sa.output, "Write the solution here instead of stdout");

  std::string verify_instance, verify_solution;
  auto* verify_cmd = app.add_subcommand("verify", "Check a solution against its instance");
  verify_cmd->add_option("--instance", verify_instance, "Instance document")->required();
  verify_cmd->add_option("--solution", verify_solution, "Solution document")->required();

  std::string oracle_problem, oracle_instance;
  std::optional<int> oracle_max_T, oracle_horizon;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force optimum of a small instance");
  oracle_cmd->add_option("--problem", oracle_problem, "mpp, mmcr, qcop or otp (checked)");
  oracle_cmd->add_option("--instance", oracle_instance, "Instance document")->required();
  oracle_cmd->add_option("--max-T", oracle_max_T, "MPP: largest makespan to search");
  oracle_cmd->add_option("--horizon", oracle_horizon, "RCP: most moves per walk");

  GeneratorSpec spec;
  std::string gen_output;
  std::optional<int> gen_k;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random grid instance");
  gen_cmd->add_option("--kind", spec.kind, "mpp, mmcr, qcop or otp")->required();
  gen_cmd->add_option("--rows", spec.rows)->capture_default_str();
  gen_cmd->add_option("--cols", spec.cols)->capture_default_str();
  gen_cmd->add_option("--robots", spec.robots, "Robots, or RCP start-set size")
      ->capture_default_str();
  gen_cmd->add_option("--k", gen_k, "MPP: default all robots");
  gen_cmd->add_option("--removal", spec.removal, "MPP: fraction of cells removed")
      ->capture_default_str();
  gen_cmd->add_option("--obstacles", spec.obstacles, "MMCR: rectangle count")
      ->capture_default_str();
  gen_cmd->add_option("--max-side", spec.max_obstacle_side, "MMCR: longest rectangle side")
      ->capture_default_str();
  gen_cmd->add_option("--budget", spec.budget, "RCP budget")->capture_default_str();
  gen_cmd->add_option("--output", gen_output, "Write here instead of stdout");

  std::string suite_path, csv_path;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite and write CSV");
  bench_cmd->add_option("--suite", suite_path, "Suite document")->required();
  bench_cmd->add_option("--out", csv_path, "CSV output path (default stdout)");

  std::string export_instance, export_heuristic, export_output;
  std::optional<int> export_T;
  auto* export_cmd = app.add_subcommand("export-lp", "Write the IP model in LP format");
  export_cmd->add_option("--instance", export_instance, "Instance document")->required();
  export_cmd->add_option("--T", export_T, "MPP makespan or RCP horizon");
  export_cmd->add_option("--heuristic", export_heuristic, "MPP: tube=H or sphere=H");
  export_cmd->add_option("--output", export_output, "Write here instead of stdout");

  std::string lp_in, sol_out;
  auto* lp_cmd = app.add_subcommand("lp-solve", "Solve an LP file and write a solution file");
  lp_cmd->add_option("model", lp_in, "LP file")->required();
  lp_cmd->add_option("solution", sol_out, "Solution file to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*solve_cmd) return run_solve(g, sa);
    if (*verify_cmd) return run_verify(verify_instance, verify_solution);
    if (*oracle_cmd) return run_oracle(oracle_problem, oracle_instance, oracle_max_T, oracle_horizon);
    if (*gen_cmd) {
      spec.k = gen_k;
      emit(save_instance(generate_instance(spec, g.seed)), gen_output);
      return 0;
    }
    if (*bench_cmd) {
      auto base = std::filesystem::absolute(suite_path).parent_path().string();
      auto rows = run_bench(read_text_file(suite_path), base, make_backend(g.backend));
      emit(bench_csv(rows), csv_path);
      return 0;
    }
    if (*export_cmd) return run_export(export_instance, export_T, export_heuristic, export_output);
    if (*lp_cmd) return run_lp_solve(g, lp_in, sol_out);
  } catch (const std::exception& e) {
    std::cerr << "pathip: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
