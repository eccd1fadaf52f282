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

#ifndef PATHIP_SOLUTION_IO_HPP_
#define PATHIP_SOLUTION_IO_HPP_

#include <string>
#include <string_view>

#include "pathip/instance.hpp"

namespace pathip {

// JSON solution document mirroring Solution, one key per line.
std::string save_solution(const Solution& solution);
Solution load_solution(std::string_view text);

}  // namespace pathip

#endif  // PATHIP_SOLUTION_IO_HPP_
