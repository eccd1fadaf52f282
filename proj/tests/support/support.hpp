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

// Test-only helpers: brute-force model enumeration, small graph families,
// the worked example instances, and row normalization for golden checks.

#ifndef PATHIP_TESTS_SUPPORT_HPP_
#define PATHIP_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pathip/graph.hpp"
#include "pathip/instance.hpp"
#include "pathip/ip_model.hpp"

namespace pathip::testing {

// Depth-first enumeration of every integral assignment of a model without
// continuous variables, pruning with row activity bounds. The callback sees
// each feasible assignment once; return false to stop.
void for_each_feasible(const IpModel& model,
                       const std::function<bool(const std::vector<double>&)>& visit);

struct BruteForce {
  bool feasible = false;
  double objective = 0.0;
  std::vector<double> assignment;
  long feasible_count = 0;
};

// Optimum over all feasible assignments (quadratic objectives allowed).
BruteForce brute_force(const IpModel& model);

// Every connected labeled graph on n vertices (n <= 5).
std::vector<Graph> connected_graphs(int n);

// Random connected graph: a random spanning tree plus extra edges.
Graph random_connected_graph(int n, double extra_edge_probability, std::mt19937_64& rng);

// All simple paths from s to g.
std::vector<Path> simple_paths(const Graph& graph, Vertex s, Vertex g);

// All walks of exactly T moves (waits allowed) from s ending at g.
std::vector<Path> timed_walks(const Graph& graph, Vertex s, Vertex g, int T);

// The three-vertex path v0 - v1 - v2 used by the worked examples.
MppInstance path3_mpp();
MmcrInstance path3_mmcr();
// Rates (1, 2, 3), costs c01 = 2, c12 = 3, budget 10, X^I = X^G = {v0, v1}.
RcpInstance path3_otp();
// Star with center 0 and leaves 1, 2, 3: robot 0 goes 1 -> 2, robot 1 goes
// 2 -> 3; both need the center.
MppInstance star_mpp(int k);

// Canonical text of a linear row: terms sorted by variable name, ">=" turned
// into "<=", equalities scaled so the first coefficient is positive.
// Variables listed in `symbolic` print their coefficient as L.
std::string canonical_row(const IpModel& model, const LinearConstraint& row,
                          const std::set<std::string>& symbolic = {});
std::set<std::string> canonical_rows(const IpModel& model,
                                     const std::set<std::string>& symbolic = {});
// Parses "[coef|L] name (+|-) [coef|L] name ... (<=|=|>=) rhs", where the
// right side may also hold terms, into the same canonical text.
std::string canonical_text(const std::string& row);

std::set<std::string> variable_names(const IpModel& model);

}  // namespace pathip::testing

#endif  // PATHIP_TESTS_SUPPORT_HPP_
