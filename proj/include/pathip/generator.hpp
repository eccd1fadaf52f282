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

#ifndef PATHIP_GENERATOR_HPP_
#define PATHIP_GENERATOR_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "pathip/instance.hpp"

namespace pathip {

struct GeneratorSpec {
  std::string kind = "mpp";  // mpp, mmcr, qcop or otp
  int rows = 4;
  int cols = 4;
  int robots = 2;             // MPP/MMCR robots; RCP start-set size
  std::optional<int> k;       // MPP; default: all robots
  double removal = 0.0;       // MPP: fraction of cells removed
  int obstacles = 0;          // MMCR rectangle count
  int max_obstacle_side = 3;  // MMCR rectangle sides are 1..this
  double budget = 4.0;        // RCP
};

// Deterministic per (spec, seed).
//  mpp:  grid minus floor(removal * cells) cells, never disconnecting the
//        free space; distinct random starts, distinct random goals. Free
//        cells are renumbered row-major.
//  mmcr: full grid with random axis-aligned rectangles as obstacles.
//  qcop: grid, unit costs, rewards in (0, 1], `robots` random starts, goals = V.
//  otp:  grid, unit costs, rates in (0, 1], `robots` random starts = goals.
// Throws Error when the spec cannot be met.
ProblemInstance generate_instance(const GeneratorSpec& spec, std::uint64_t seed);

}  // namespace pathip

#endif  // PATHIP_GENERATOR_HPP_
