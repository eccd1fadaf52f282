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

#ifndef PATHIP_INSTANCE_IO_HPP_
#define PATHIP_INSTANCE_IO_HPP_

#include <string>
#include <string_view>

#include "pathip/instance.hpp"

namespace pathip {

// Instance documents are JSON objects, one top-level key per line:
//
//   {
//   "problem": "mpp",
//   "vertices": 3,
//   "edges": [[0,1],[1,2]],
//   "starts": [0,1],
//   "goals": [1,2],
//   "k": 1
//   }
//
// See docs/formats.md for every field. Loading validates all instance
// invariants; ParseError carries the offending line and field.
ProblemInstance load_instance(std::string_view text);
ProblemInstance load_instance_file(const std::string& path);

// Canonical document: fixed key order, compact arrays. save(load(save(x)))
// is byte-identical to save(x).
std::string save_instance(const ProblemInstance& instance);
void save_instance_file(const ProblemInstance& instance, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace pathip

#endif  // PATHIP_INSTANCE_IO_HPP_
