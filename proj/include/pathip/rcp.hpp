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

// Reward collection (QCOP, OTP) on a time-expanded graph closed through a
// virtual vertex u: u -> start copies at layer 0, goal copies at layer T -> u.

#ifndef PATHIP_RCP_HPP_
#define PATHIP_RCP_HPP_

#include <memory>
#include <optional>
#include <vector>

#include "pathip/encoding.hpp"
#include "pathip/instance.hpp"
#include "pathip/solver.hpp"

namespace pathip {

struct RcpConfig {
  SolveConfig solver;
  std::shared_ptr<const SolverBackend> backend;  // null: embedded
  std::optional<int> horizon;                    // default: choose_horizon
  int visit_cap = 2;
  Reachability reachability = Reachability::kFull;
};

// min(floor(c* / c_min), |V| * visit_cap); 0 without edges. Throws Error on a
// zero-cost edge, where the horizon must be given explicitly.
int choose_horizon(const RcpInstance& instance, int visit_cap = 2);

struct RcpModel {
  IpModel model;  // linear
  int horizon = 0;
  LayerMask kept;
  std::vector<Arc> departures;  // x[0][u][v]
  std::vector<Arc> returns;     // x[T+1][v][u]
  // move_out[t][v], t = 1..T, as in CommodityVars.
  std::vector<std::vector<std::vector<Arc>>> move_out;
  std::vector<VarId> visit;  // x_v per vertex
  std::vector<VarId> dwell;  // t_v per vertex, OTP only
};

// Visit indicators x_v <= inflow into copies of v, the budget row, and
//   maximize sum r_i x_i + sum_{i, j in N(i)} r_j / |N(j)| (x_i - x_i x_j)
// with the products linearized.
RcpModel build_qcop(const RcpInstance& instance, int horizon,
                    Reachability reachability = Reachability::kFull);

// Same walk structure; every start is paired with its own return, dwell
// t_v in [0, c*] with t_v <= c* x_v, the budget includes the dwell, and
//   maximize sum a_i t_i.
RcpModel build_otp(const RcpInstance& instance, int horizon,
                   Reachability reachability = Reachability::kFull);

// Walk of T + 1 vertices (waits included) from a feasible assignment.
Path extract_rcp_walk(const RcpModel& model, std::span<const double> x);

Solution solve_rcp(const RcpInstance& instance, const RcpConfig& config = {});

// QCOP on the base graph: virtual source s adjacent to X^I, sink k adjacent
// to X^G, subtour elimination on, same objective and budget. Only simple
// paths are representable.
struct BaseQcopModel {
  IpModel model;  // linear
  Graph graph;    // G plus s = |V| and k = |V| + 1
  BaseVars vars;
  std::vector<VarId> visit;
};

BaseQcopModel build_base_qcop(const RcpInstance& instance);

}  // namespace pathip

#endif  // PATHIP_RCP_HPP_
