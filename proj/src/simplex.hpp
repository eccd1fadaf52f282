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

// Bounded-variable revised primal simplex used for the LP relaxations.
//
// Computational form: A x - r = 0 with l <= x <= u and row activities r
// bounded by the row sense. Column n + i is the logical of row i and has a
// single -1 entry. The basis is factorized with a sparse LU and updated in
// product form between refactorizations.

#ifndef PATHIP_SRC_SIMPLEX_HPP_
#define PATHIP_SRC_SIMPLEX_HPP_

#include <chrono>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace pathip {

struct LpData {
  int rows = 0;
  int cols = 0;
  // Column-wise and row-wise copies of A.
  std::vector<int> col_start, col_row;
  std::vector<double> col_val;
  std::vector<int> row_start, row_col;
  std::vector<double> row_val;
  std::vector<double> cost;  // minimized
  std::vector<double> row_lower, row_upper;

  // Builds both copies from (row, col, value) triplets.
  static LpData from_triplets(int rows, int cols, std::span<const int> r, std::span<const int> c,
                              std::span<const double> v);
};

enum class VarStatus : std::int8_t { kBasic, kLower, kUpper };

struct LpBasis {
  std::vector<int> heading;          // basic variable per position
  std::vector<VarStatus> status;     // per structural and logical
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kNumericalFailure, kTimeLimit };

struct LpSolveResult {
  LpStatus status = LpStatus::kNumericalFailure;
  double objective = 0.0;
  std::vector<double> x;  // structurals only
  long iterations = 0;
  std::shared_ptr<const LpBasis> basis;
};

using Clock = std::chrono::steady_clock;

class Simplex {
 public:
  Simplex(const LpData& data, double tolerance);
  ~Simplex();
  Simplex(const Simplex&) = delete;
  Simplex& operator=(const Simplex&) = delete;

  // Bounds are for the structurals; row bounds come from the data. A warm
  // basis of matching shape is used when given, else the slack basis.
  LpSolveResult solve(std::span<const double> lower, std::span<const double> upper,
                      const LpBasis* warm, Clock::time_point deadline);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace pathip

#endif  // PATHIP_SRC_SIMPLEX_HPP_
