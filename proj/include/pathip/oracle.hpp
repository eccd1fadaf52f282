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

// Brute-force reference solvers. They share nothing with the IP pipeline
// beyond the graph and validation helpers.

#ifndef PATHIP_ORACLE_HPP_
#define PATHIP_ORACLE_HPP_

#include <optional>

#include "pathip/instance.hpp"

namespace pathip {

// BFS over joint configurations with simultaneous moves; vertex collisions
// and edge swaps are forbidden, rotations along longer cycles are allowed.
// Returns the first T at which at least k robots are at their goals, or
// nothing up to max_T. Throws Error past `state_cap` visited states.
std::optional<int> mpp_oracle(const MppInstance& instance, int max_T,
                              long state_cap = 2'000'000);

// Smallest number of obstacles whose removal connects every robot, found by
// enumerating subsets in ascending size. Throws Error above 20 obstacles.
int mmcr_oracle(const MmcrInstance& instance);

// Best reward over walks of at most T moves from the start set to the goal
// set within budget. OTP walks return to their own start and put all slack
// budget on the best visited rate. Nothing if no walk qualifies. Throws
// Error past `walk_cap` enumerated walks.
std::optional<double> rcp_oracle(const RcpInstance& instance, int T,
                                 long walk_cap = 50'000'000);

}  // namespace pathip

#endif  // PATHIP_ORACLE_HPP_
