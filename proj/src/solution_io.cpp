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

#include "pathip/solution_io.hpp"

#include "json_util.hpp"

namespace pathip {

std::string save_solution(const Solution& s) {
  JsonWriter out;
  out.field("problem", s.problem);
  out.field("status", to_string(s.status));
  out.field("paths", s.paths);
  out.field("makespan", s.makespan);
  out.field("removed_obstacles", s.removed_obstacles);
  out.field("reward", s.reward);
  out.field("dwell_times", s.dwell_times);
  out.field("objective", s.objective);
  out.field("stats", nlohmann::ordered_json{{"variable_count", s.stats.variable_count},
                                            {"constraint_count", s.stats.constraint_count},
                                            {"branch_nodes", s.stats.branch_nodes},
                                            {"wall_time", s.stats.wall_time}});
  return out.str();
}

Solution load_solution(std::string_view text) {
  JsonReader in(text);
  in.reject_unknown({"problem", "status", "paths", "makespan", "removed_obstacles", "reward",
                     "dwell_times", "objective", "stats"});
  Solution s;
  s.problem = in.get<std::string>("problem");
  try {
    s.status = solve_status_from_string(in.get<std::string>("status"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    in.fail("status", e.what());
  }
  s.paths = in.get_or<std::vector<Path>>("paths", {});
  s.makespan = in.get_or<int>("makespan", 0);
  s.removed_obstacles = in.get_or<std::vector<int>>("removed_obstacles", {});
  s.reward = in.get_or<double>("reward", 0.0);
  s.dwell_times = in.get_or<std::vector<double>>("dwell_times", {});
  s.objective = in.get_or<double>("objective", 0.0);
  if (in.has("stats")) {
    const auto& node = in.at("stats");
    if (!node.is_object()) in.fail("stats", "expected an object");
    JsonReader stats(node, text);
    s.stats.variable_count = stats.get_or<int>("variable_count", 0);
    s.stats.constraint_count = stats.get_or<int>("constraint_count", 0);
    s.stats.branch_nodes = stats.get_or<long>("branch_nodes", 0);
    s.stats.wall_time = stats.get_or<double>("wall_time", 0.0);
  }
  return s;
}

}  // namespace pathip
