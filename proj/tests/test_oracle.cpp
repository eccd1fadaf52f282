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


#include <gtest/gtest.h>

#include <random>
#include <set>

#include "pathip/error.hpp"
#include "pathip/generator.hpp"
#include "pathip/oracle.hpp"
#include "support.hpp"

namespace pathip {
namespace {

TEST(MppOracle, StarExample) {
  EXPECT_EQ(mpp_oracle(testing::star_mpp(2), 10), 3);
  EXPECT_EQ(mpp_oracle(testing::star_mpp(1), 10), 2);
}

TEST(MppOracle, SwapOnEdgeIsImpossible) {
  MppInstance inst;
  inst.graph = Graph(2, {{0, 1}});
  inst.starts = {0, 1};
  inst.goals = {1, 0};
  inst.k = 2;
  EXPECT_EQ(mpp_oracle(inst, 8), std::nullopt);
  inst.k = 1;
  EXPECT_EQ(mpp_oracle(inst, 8), std::nullopt);
}

TEST(MppOracle, CapStopsSearch) {
  MppInstance inst = testing::star_mpp(2);
  EXPECT_EQ(mpp_oracle(inst, 2), std::nullopt);
  EXPECT_THROW(mpp_oracle(inst, 10, 2), Error);
}

TEST(MppOracle, SingleRobotIsShortestPath) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    MppInstance inst;
    inst.graph = testing::random_connected_graph(n, 0.2, rng);
    inst.starts = {static_cast<Vertex>(rng() % n)};
    inst.goals = {static_cast<Vertex>(rng() % n)};
    inst.k = 1;
    int d = static_cast<int>(inst.graph.shortest_path(inst.starts[0], inst.goals[0]).size()) - 1;
    EXPECT_EQ(mpp_oracle(inst, n), d);
  }
}

TEST(MmcrOracle, Examples) {
  EXPECT_EQ(mmcr_oracle(testing::path3_mmcr()), 2);
  MmcrInstance clear = testing::path3_mmcr();
  clear.obstacles.clear();
  EXPECT_EQ(mmcr_oracle(clear), 0);
  MmcrInstance inside;
  inside.graph = Graph(3, {{0, 1}, {1, 2}});
  inside.starts = {0};
  inside.goals = {2};
  inside.obstacles = {{0}};
  EXPECT_EQ(mmcr_oracle(inside), 1);
}

// Single robot: fewest obstacles touched by any simple path.
int fewest_on_simple_path(const MmcrInstance& inst) {
  int best = static_cast<int>(inst.obstacles.size());
  for (const Path& p : testing::simple_paths(inst.graph, inst.starts[0], inst.goals[0])) {
    std::set<Vertex> on(p.begin(), p.end());
    int count = 0;
    for (const auto& o : inst.obstacles) {
      bool hit = false;
      for (Vertex v : o) hit = hit || on.count(v);
      count += hit;
    }
    best = std::min(best, count);
  }
  return best;
}

TEST(MmcrOracle, SingleRobotMatchesPathEnumeration) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GeneratorSpec spec;
    spec.kind = "mmcr";
    spec.rows = 3;
    spec.cols = 3;
    spec.robots = 1;
    spec.obstacles = 1 + static_cast<int>(seed % 5);
    spec.max_obstacle_side = 2;
    auto inst = std::get<MmcrInstance>(generate_instance(spec, seed));
    EXPECT_EQ(mmcr_oracle(inst), fewest_on_simple_path(inst)) << "seed " << seed;
  }
}

TEST(RcpOracle, Examples) {
  RcpInstance otp = testing::path3_otp();
  EXPECT_DOUBLE_EQ(*rcp_oracle(otp, 2), 20.0);
  EXPECT_DOUBLE_EQ(*rcp_oracle(otp, 0), 20.0);
  otp.budget = 4;
  // v0 -> v1 -> v0 costs 4 and leaves no dwell; staying at v1 earns 8.
  EXPECT_DOUBLE_EQ(*rcp_oracle(otp, 2), 8.0);

  RcpInstance qcop;
  qcop.graph = Graph(3, {{0, 1}, {1, 2}});
  qcop.edge_costs = {1, 1};
  qcop.budget = 1;
  qcop.start_set = {0};
  qcop.goal_set = {2};
  qcop.objective = QcopRewards{{1, 1, 1}};
  EXPECT_EQ(rcp_oracle(qcop, 3), std::nullopt);
  qcop.budget = 2;
  EXPECT_DOUBLE_EQ(*rcp_oracle(qcop, 3), 3.0);
  EXPECT_EQ(rcp_oracle(qcop, 1), std::nullopt);
}

TEST(RcpOracle, CapThrows) {
  RcpInstance otp = testing::path3_otp();
  EXPECT_THROW(rcp_oracle(otp, 5, 3), Error);
}

TEST(RcpOracle, LongerHorizonNeverHurts) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GeneratorSpec spec;
    spec.kind = seed % 2 ? "otp" : "qcop";
    spec.rows = 2;
    spec.cols = 3;
    spec.budget = 3;
    auto inst = std::get<RcpInstance>(generate_instance(spec, seed));
    double last = -1;
    for (int T = 0; T <= 4; ++T) {
      auto v = rcp_oracle(inst, T);
      if (!v) continue;
      EXPECT_GE(*v, last - 1e-12);
      last = *v;
    }
  }
}

}  // namespace
}  // namespace pathip
