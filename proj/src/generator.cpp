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

#include "pathip/generator.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>

#include "pathip/error.hpp"

namespace pathip {
namespace {

using Rng = std::mt19937_64;

std::vector<Vertex> sample_distinct(int count, int population, Rng& rng) {
  std::vector<Vertex> all(population);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  return all;
}

// Uniform in (0, 1].
double unit_value(Rng& rng) { return 1.0 - std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

bool free_cells_connected(const std::vector<char>& free, int rows, int cols) {
  const int cells = rows * cols;
  int first = -1, count = 0;
  for (int c = 0; c < cells; ++c) {
    if (free[c]) {
      ++count;
      if (first < 0) first = c;
    }
  }
  if (count == 0) return true;
  std::vector<char> seen(cells, 0);
  std::deque<int> queue{first};
  seen[first] = 1;
  int reached = 0;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    ++reached;
    int r = c / cols, col = c % cols;
    const int dr[] = {-1, 1, 0, 0}, dc[] = {0, 0, -1, 1};
    for (int d = 0; d < 4; ++d) {
      int nr = r + dr[d], nc = col + dc[d];
      if (nr < 0 || nr >= rows || nc < 0 || nc >= cols) continue;
      int n = nr * cols + nc;
      if (free[n] && !seen[n]) {
        seen[n] = 1;
        queue.push_back(n);
      }
    }
  }
  return reached == count;
}

Graph grid_subgraph(const std::vector<char>& free, int rows, int cols) {
  std::vector<int> id(rows * cols, -1);
  int next = 0;
  for (int c = 0; c < rows * cols; ++c) {
    if (free[c]) id[c] = next++;
  }
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int a = id[r * cols + c];
      if (a < 0) continue;
      if (c + 1 < cols && id[r * cols + c + 1] >= 0) edges.push_back({a, id[r * cols + c + 1]});
      if (r + 1 < rows && id[(r + 1) * cols + c] >= 0) edges.push_back({a, id[(r + 1) * cols + c]});
    }
  }
  return Graph(next, std::move(edges));
}

MppInstance make_mpp(const GeneratorSpec& spec, Rng& rng) {
  const int cells = spec.rows * spec.cols;
  if (spec.removal < 0 || spec.removal >= 1) throw Error("removal fraction must be in [0, 1)");
  const int remove = static_cast<int>(std::floor(spec.removal * cells + 1e-9));
  std::vector<char> free(cells, 1);
  std::vector<int> order(cells);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  int removed = 0;
  for (int c : order) {
    if (removed == remove) break;
    free[c] = 0;
    if (free_cells_connected(free, spec.rows, spec.cols)) {
      ++removed;
    } else {
      free[c] = 1;
    }
  }
  if (removed < remove) throw Error("cannot remove that many cells without disconnecting the grid");

  MppInstance inst;
  inst.graph = grid_subgraph(free, spec.rows, spec.cols);
  if (spec.robots > inst.graph.vertex_count()) throw Error("more robots than free cells");
  inst.starts = sample_distinct(spec.robots, inst.graph.vertex_count(), rng);
  inst.goals = sample_distinct(spec.robots, inst.graph.vertex_count(), rng);
  inst.k = spec.k.value_or(spec.robots);
  inst.validate();
  return inst;
}

MmcrInstance make_mmcr(const GeneratorSpec& spec, Rng& rng) {
  MmcrInstance inst;
  inst.graph = make_grid(spec.rows, spec.cols);
  const int cells = spec.rows * spec.cols;
  if (spec.robots > cells) throw Error("more robots than cells");
  if (spec.max_obstacle_side < 1) throw Error("obstacle side must be positive");
  for (int o = 0; o < spec.obstacles; ++o) {
    int h = std::uniform_int_distribution<int>(1, std::min(spec.max_obstacle_side, spec.rows))(rng);
    int w = std::uniform_int_distribution<int>(1, std::min(spec.max_obstacle_side, spec.cols))(rng);
    int r0 = std::uniform_int_distribution<int>(0, spec.rows - h)(rng);
    int c0 = std::uniform_int_distribution<int>(0, spec.cols - w)(rng);
    std::vector<Vertex> cellsets;
    for (int r = r0; r < r0 + h; ++r) {
      for (int c = c0; c < c0 + w; ++c) cellsets.push_back(r * spec.cols + c);
    }
    inst.obstacles.push_back(std::move(cellsets));
  }
  inst.starts = sample_distinct(spec.robots, cells, rng);
  inst.goals = sample_distinct(spec.robots, cells, rng);
  inst.validate();
  return inst;
}

RcpInstance make_rcp(const GeneratorSpec& spec, Rng& rng, bool otp) {
  RcpInstance inst;
  inst.graph = make_grid(spec.rows, spec.cols);
  const int n = inst.graph.vertex_count();
  if (spec.robots < 1 || spec.robots > n) throw Error("start-set size must be in [1, |V|]");
  inst.edge_costs.assign(inst.graph.edge_count(), 1.0);
  inst.budget = spec.budget;
  std::vector<double> values(n);
  for (double& v : values) v = unit_value(rng);
  inst.start_set = sample_distinct(spec.robots, n, rng);
  std::sort(inst.start_set.begin(), inst.start_set.end());
  if (otp) {
    inst.goal_set = inst.start_set;
    inst.objective = OtpRates{values};
  } else {
    inst.goal_set.resize(n);
    std::iota(inst.goal_set.begin(), inst.goal_set.end(), 0);
    inst.objective = QcopRewards{values};
  }
  inst.validate();
  return inst;
}

}  // namespace

ProblemInstance generate_instance(const GeneratorSpec& spec, std::uint64_t seed) {
  if (spec.rows < 1 || spec.cols < 1) throw Error("grid dimensions must be positive");
  if (spec.robots < 0) throw Error("robot count must be non-negative");
  Rng rng(seed);
  if (spec.kind == "mpp") return make_mpp(spec, rng);
  if (spec.kind == "mmcr") return make_mmcr(spec, rng);
  if (spec.kind == "qcop") return make_rcp(spec, rng, false);
  if (spec.kind == "otp") return make_rcp(spec, rng, true);
  throw Error("unknown instance kind '" + spec.kind + "'");
}

}  // namespace pathip
