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

// Benchmark runner: a JSON suite of instances and methods in, one CSV row per
// (instance, method) out. Suite format is described in docs/formats.md.

#ifndef PATHIP_BENCH_HPP_
#define PATHIP_BENCH_HPP_

#include <memory>
#include <string>
#include <vector>

#include "pathip/solver.hpp"

namespace pathip {

struct BenchRow {
  std::string instance_id;
  std::string method;
  int variable_count = 0;
  int constraint_count = 0;
  std::string objective;  // empty when there is none
  long nodes = 0;
  double wall_time = 0.0;
  std::string status;     // solve status, "built" or "error: ..."
  std::string oracle;     // empty when not requested or out of reach
};

inline constexpr const char* kBenchHeader =
    "instance_id,method,variable_count,constraint_count,objective,nodes,wall_time,status,oracle";

// `base_dir` resolves relative instance paths. Failures of single runs become
// rows; only a malformed suite throws.
std::vector<BenchRow> run_bench(const std::string& suite_text, const std::string& base_dir,
                                std::shared_ptr<const SolverBackend> backend = nullptr);

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace pathip

#endif  // PATHIP_BENCH_HPP_
