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

#include "pathip/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pathip/error.hpp"
#include "json_util.hpp"

namespace pathip {
namespace {

using nlohmann::json;

const std::set<std::string>& known_fields() {
  static const std::set<std::string> fields = {
      "problem", "vertices", "edges", "starts", "goals", "k", "groups",
      "obstacles", "edge_costs", "rewards", "rates", "budget"};
  return fields;
}

Graph read_graph(const JsonReader& in) {
  int n = in.get<int>("vertices");
  std::vector<Edge> edges;
  if (in.has("edges")) {
    for (const auto& pair : in.get<std::vector<std::vector<int>>>("edges")) {
      if (pair.size() != 2) in.fail("edges", "each edge must be a [u, v] pair");
      edges.emplace_back(pair[0], pair[1]);
    }
  }
  return Graph(n, std::move(edges));
}

std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

MppInstance read_mpp(const JsonReader& in) {
  MppInstance mpp;
  mpp.graph = read_graph(in);
  mpp.starts = in.get_or<std::vector<int>>("starts", {});
  mpp.goals = in.get_or<std::vector<int>>("goals", {});
  mpp.k = in.get_or<int>("k", static_cast<int>(mpp.starts.size()));
  mpp.groups = in.get_or<std::vector<std::vector<int>>>("groups", {});
  mpp.validate();
  return mpp;
}

MmcrInstance read_mmcr(const JsonReader& in) {
  MmcrInstance mmcr;
  mmcr.graph = read_graph(in);
  mmcr.starts = in.get_or<std::vector<int>>("starts", {});
  mmcr.goals = in.get_or<std::vector<int>>("goals", {});
  for (auto& obstacle : in.get_or<std::vector<std::vector<int>>>("obstacles", {})) {
    mmcr.obstacles.push_back(sorted(std::move(obstacle)));
  }
  mmcr.validate();
  return mmcr;
}

RcpInstance read_rcp(const JsonReader& in, bool otp) {
  RcpInstance rcp;
  rcp.graph = read_graph(in);
  rcp.edge_costs.assign(rcp.graph.edge_count(), 1.0);
  if (in.has("edge_costs")) {
    for (const auto& triple : in.get<std::vector<std::vector<double>>>("edge_costs")) {
      if (triple.size() != 3) in.fail("edge_costs", "each entry must be [u, v, cost]");
      int e = rcp.graph.edge_index(static_cast<Vertex>(triple[0]),
                                   static_cast<Vertex>(triple[1]));
      if (e < 0 || triple[0] != static_cast<Vertex>(triple[0]) ||
          triple[1] != static_cast<Vertex>(triple[1])) {
        in.fail("edge_costs", "cost given for a pair that is not an edge");
      }
      rcp.edge_costs[e] = triple[2];
    }
  }
  rcp.budget = in.get<double>("budget");
  rcp.start_set = sorted(in.get<std::vector<int>>("starts"));
  rcp.goal_set = sorted(in.get<std::vector<int>>("goals"));
  if (otp) {
    rcp.objective = OtpRates{in.get<std::vector<double>>("rates")};
  } else {
    rcp.objective = QcopRewards{in.get<std::vector<double>>("rewards")};
  }
  rcp.validate();
  return rcp;
}

void write_graph(JsonWriter& out, const Graph& graph) {
  out.field("vertices", graph.vertex_count());
  json edges = json::array();
  for (const auto& [u, v] : graph.edges()) edges.push_back({u, v});
  out.field("edges", edges);
}

}  // namespace

ProblemInstance load_instance(std::string_view text) {
  JsonReader in(text);
  in.reject_unknown(known_fields());
  std::string problem = in.get<std::string>("problem");
  if (problem == "mpp") return read_mpp(in);
  if (problem == "mmcr") return read_mmcr(in);
  if (problem == "qcop") return read_rcp(in, false);
  if (problem == "otp") return read_rcp(in, true);
  in.fail("problem", "expected one of mpp, mmcr, qcop, otp");
}

ProblemInstance load_instance_file(const std::string& path) {
  return load_instance(read_text_file(path));
}

std::string save_instance(const ProblemInstance& instance) {
  JsonWriter out;
  out.field("problem", problem_name(instance));
  if (const auto* mpp = std::get_if<MppInstance>(&instance)) {
    write_graph(out, mpp->graph);
    out.field("starts", mpp->starts);
    out.field("goals", mpp->goals);
    out.field("k", mpp->k);
    if (!mpp->groups.empty()) out.field("groups", mpp->groups);
  } else if (const auto* mmcr = std::get_if<MmcrInstance>(&instance)) {
    write_graph(out, mmcr->graph);
    out.field("starts", mmcr->starts);
    out.field("goals", mmcr->goals);
    out.field("obstacles", mmcr->obstacles);
  } else {
    const auto& rcp = std::get<RcpInstance>(instance);
    write_graph(out, rcp.graph);
    json costs = json::array();
    for (int e = 0; e < rcp.graph.edge_count(); ++e) {
      const auto& [u, v] = rcp.graph.edges()[e];
      costs.push_back({u, v, rcp.edge_costs[e]});
    }
    out.field("edge_costs", costs);
    out.field("budget", rcp.budget);
    out.field("starts", rcp.start_set);
    out.field("goals", rcp.goal_set);
    if (rcp.is_otp()) {
      out.field("rates", rcp.rates());
    } else {
      out.field("rewards", rcp.rewards());
    }
  }
  return out.str();
}

void save_instance_file(const ProblemInstance& instance, const std::string& path) {
  write_text_file(path, save_instance(instance));
}

std::string read_text_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write '" + path + "'");
  file << text;
}

}  // namespace pathip
