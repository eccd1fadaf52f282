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

#include "pathip/bench.hpp"

#include <chrono>
#include <filesystem>
#include <sstream>

#include "json_util.hpp"
#include "pathip/generator.hpp"
#include "pathip/instance_io.hpp"
#include "pathip/lp_format.hpp"
#include "pathip/mmcr.hpp"
#include "pathip/mpp.hpp"
#include "pathip/oracle.hpp"
#include "pathip/rcp.hpp"

namespace pathip {
namespace {

struct SuiteInstance {
  std::string id;
  ProblemInstance instance;
};

struct Suite {
  std::vector<SuiteInstance> instances;
  std::vector<std::string> methods;
  double time_limit = 60.0;
  bool build_only = false;
  bool oracle = false;
};

GeneratorSpec read_generator(const JsonReader& g) {
  g.reject_unknown({"kind", "rows", "cols", "robots", "k", "removal", "obstacles",
                    "max_obstacle_side", "budget"});
  GeneratorSpec spec;
  spec.kind = g.get<std::string>("kind");
  spec.rows = g.get_or<int>("rows", spec.rows);
  spec.cols = g.get_or<int>("cols", spec.cols);
  spec.robots = g.get_or<int>("robots", spec.robots);
  if (g.has("k")) spec.k = g.get<int>("k");
  spec.removal = g.get_or<double>("removal", spec.removal);
  spec.obstacles = g.get_or<int>("obstacles", spec.obstacles);
  spec.max_obstacle_side = g.get_or<int>("max_obstacle_side", spec.max_obstacle_side);
  spec.budget = g.get_or<double>("budget", spec.budget);
  return spec;
}

Suite read_suite(const std::string& text, const std::string& base_dir) {
  JsonReader in{std::string_view(text)};
  in.reject_unknown({"instances", "methods", "time_limit", "build_only", "oracle"});
  Suite suite;
  suite.methods = in.get_or<std::vector<std::string>>("methods", {"exact"});
  suite.time_limit = in.get_or<double>("time_limit", suite.time_limit);
  suite.build_only = in.get_or<bool>("build_only", false);
  suite.oracle = in.get_or<bool>("oracle", false);
  if (!in.has("instances")) return suite;
  const auto& list = in.at("instances");
  if (!list.is_array()) in.fail("instances", "expected a list");
  for (const auto& node : list) {
    if (!node.is_object()) in.fail("instances", "entries must be objects");
    JsonReader entry(node, text);
    entry.reject_unknown({"id", "file", "generate", "seed", "count"});
    std::string id = entry.get<std::string>("id");
    if (entry.has("file")) {
      std::filesystem::path path = entry.get<std::string>("file");
      if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
      suite.instances.push_back({id, load_instance_file(path.string())});
      continue;
    }
    const auto& gen = entry.at("generate");
    if (!gen.is_object()) entry.fail("generate", "expected an object");
    GeneratorSpec spec = read_generator(JsonReader(gen, text));
    auto seed = entry.get_or<std::uint64_t>("seed", 0);
    int count = entry.get_or<int>("count", 1);
    for (int i = 0; i < count; ++i) {
      std::string name = count == 1 ? id : id + "-" + std::to_string(i);
      suite.instances.push_back({name, generate_instance(spec, seed + i)});
    }
  }
  return suite;
}

MppHeuristic parse_heuristic(const std::string& method) {
  if (method == "exact") return MppHeuristic::none();
  auto eq = method.find('=');
  if (eq == std::string::npos) throw Error("unknown method '" + method + "'");
  std::string kind = method.substr(0, eq);
  int h = std::stoi(method.substr(eq + 1));
  if (kind == "tube") return MppHeuristic::tube(h);
  if (kind == "sphere") return MppHeuristic::sphere(h);
  throw Error("unknown method '" + method + "'");
}

std::string oracle_value(const ProblemInstance& instance) {
  try {
    if (const auto* mpp = std::get_if<MppInstance>(&instance)) {
      int cap = underestimate_T(*mpp) + 2 * mpp->graph.vertex_count();
      auto t = mpp_oracle(*mpp, cap, 200'000);
      return t ? std::to_string(*t) : "none";
    }
    if (const auto* mmcr = std::get_if<MmcrInstance>(&instance)) {
      return std::to_string(mmcr_oracle(*mmcr));
    }
    const auto& rcp = std::get<RcpInstance>(instance);
    auto best = rcp_oracle(rcp, choose_horizon(rcp), 5'000'000);
    return best ? format_number(*best) : "none";
  } catch (const Error&) {
    return "";
  }
}

void fill(BenchRow& row, const Solution& sol) {
  row.variable_count = sol.stats.variable_count;
  row.constraint_count = sol.stats.constraint_count;
  row.nodes = sol.stats.branch_nodes;
  row.status = to_string(sol.status);
  if (sol.status == SolveStatus::kOptimal || sol.status == SolveStatus::kFeasible) {
    row.objective = format_number(sol.objective);
  }
}

void run_one(BenchRow& row, const ProblemInstance& instance, const Suite& suite,
             const std::shared_ptr<const SolverBackend>& backend) {
  SolveConfig solver;
  solver.time_limit = suite.time_limit;
  if (const auto* mpp = std::get_if<MppInstance>(&instance)) {
    MppConfig config;
    config.heuristic = parse_heuristic(row.method);
    config.solver = solver;
    config.backend = backend;
    if (suite.build_only) {
      MppModel m = build_mpp_model(*mpp, underestimate_T(*mpp), config, config.heuristic);
      row.variable_count = m.encoding.model.variable_count();
      row.constraint_count = m.encoding.model.constraint_count();
      row.status = "built";
      return;
    }
    fill(row, solve_mpp(*mpp, config));
    return;
  }
  if (const auto* mmcr = std::get_if<MmcrInstance>(&instance)) {
    MmcrConfig config;
    config.solver = solver;
    config.backend = backend;
    if (row.method == "direct") {
      config.use_regions = false;
    } else if (row.method != "exact") {
      throw Error("unknown method '" + row.method + "' for mmcr");
    }
    if (suite.build_only) {
      RegionGraph rg = config.use_regions ? build_region_graph(mmcr->graph, mmcr->obstacles)
                                          : singleton_regions(mmcr->graph, mmcr->obstacles);
      MmcrModel m = build_mmcr_model(*mmcr, std::move(rg));
      row.variable_count = m.model.variable_count();
      row.constraint_count = m.model.constraint_count();
      row.status = "built";
      return;
    }
    fill(row, solve_mmcr(*mmcr, config));
    return;
  }
  const auto& rcp = std::get<RcpInstance>(instance);
  if (row.method != "exact") throw Error("unknown method '" + row.method + "' for rcp");
  RcpConfig config;
  config.solver = solver;
  config.backend = backend;
  if (suite.build_only) {
    int T = choose_horizon(rcp);
    RcpModel m = rcp.is_otp() ? build_otp(rcp, T) : build_qcop(rcp, T);
    row.variable_count = m.model.variable_count();
    row.constraint_count = m.model.constraint_count();
    row.status = "built";
    return;
  }
  fill(row, solve_rcp(rcp, config));
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<BenchRow> run_bench(const std::string& suite_text, const std::string& base_dir,
                                std::shared_ptr<const SolverBackend> backend) {
  Suite suite = read_suite(suite_text, base_dir);
  std::vector<BenchRow> rows;
  for (const auto& item : suite.instances) {
    std::string oracle = suite.oracle ? oracle_value(item.instance) : "";
    for (const auto& method : suite.methods) {
      BenchRow row;
      row.instance_id = item.id;
      row.method = method;
      row.oracle = oracle;
      auto started = std::chrono::steady_clock::now();
      try {
        run_one(row, item.instance, suite, backend);
      } catch (const std::exception& e) {
        row.status = std::string("error: ") + e.what();
      }
      row.wall_time =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << kBenchHeader << "\n";
  for (const auto& r : rows) {
    out << csv_field(r.instance_id) << ',' << csv_field(r.method) << ',' << r.variable_count
        << ',' << r.constraint_count << ',' << r.objective << ',' << r.nodes << ','
        << format_number(r.wall_time) << ',' << csv_field(r.status) << ','
        << csv_field(r.oracle) << "\n";
  }
  return out.str();
}

}  // namespace pathip
