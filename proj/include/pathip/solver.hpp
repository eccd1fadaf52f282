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

#ifndef PATHIP_SOLVER_HPP_
#define PATHIP_SOLVER_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pathip/ip_model.hpp"

namespace pathip {

enum class Branching { kMostFractional, kFirstFractional };
enum class NodeOrder { kBestBound, kDepthFirst };

struct SolveConfig {
  double time_limit = 600.0;  // seconds
  double integrality_tolerance = 1e-6;
  double lp_tolerance = 1e-7;
  Branching branching = Branching::kMostFractional;
  NodeOrder node_order = NodeOrder::kBestBound;
  std::uint64_t seed = 0;
  // Stop as soon as the incumbent is at least this good.
  std::optional<double> objective_target;
  bool record_node_log = false;

  // Throws Error on non-positive tolerances or time limit.
  void validate() const;
};

enum class OutcomeStatus { kOptimal, kFeasible, kInfeasible, kUnbounded, kTimeoutNoIncumbent };

std::string to_string(OutcomeStatus status);
OutcomeStatus outcome_status_from_string(const std::string& text);

struct NodeLogEntry {
  long node = 0;
  int depth = 0;
  double lp_bound = 0.0;      // relaxation value at this node
  double global_bound = 0.0;  // best bound over all open nodes
  std::optional<double> incumbent;
};

struct SolveStats {
  long nodes = 0;
  long simplex_iterations = 0;
  double wall_time = 0.0;
};

struct SolveOutcome {
  OutcomeStatus status = OutcomeStatus::kInfeasible;
  std::vector<double> assignment;  // by variable id; empty without a solution
  double objective = 0.0;
  double bound = 0.0;  // best dual bound, in the model's sense
  SolveStats stats;
  std::vector<NodeLogEntry> node_log;

  bool has_solution() const {
    return status == OutcomeStatus::kOptimal || status == OutcomeStatus::kFeasible;
  }
};

// Branch and bound over the LP relaxation. The model must be linear.
SolveOutcome solve(const IpModel& model, const SolveConfig& config = {});

enum class LpOutcome { kOptimal, kInfeasible, kUnbounded, kNumericalFailure, kTimeLimit };

std::string to_string(LpOutcome status);

struct LpRelaxation {
  LpOutcome status = LpOutcome::kNumericalFailure;
  double objective = 0.0;
  std::vector<double> assignment;
  long iterations = 0;
};

LpRelaxation lp_relax(const IpModel& model, const SolveConfig& config = {});

enum class Feasibility { kFeasible, kInfeasible, kTimeout };

struct FeasibilityResult {
  Feasibility status = Feasibility::kInfeasible;
  std::vector<double> assignment;
  SolveStats stats;
};

// solve() with the objective dropped.
FeasibilityResult check_feasibility(const IpModel& model, const SolveConfig& config = {});

// Pluggable engine. The embedded backend calls solve(); the external one
// runs a command on an LP export.
class SolverBackend {
 public:
  virtual ~SolverBackend() = default;
  virtual SolveOutcome solve(const IpModel& model, const SolveConfig& config) const = 0;
  virtual std::string name() const = 0;
};

class EmbeddedBackend : public SolverBackend {
 public:
  SolveOutcome solve(const IpModel& model, const SolveConfig& config) const override;
  std::string name() const override { return "embedded"; }
};

// Runs `<command> <model.lp> <solution.sol>` through the shell and reads the
// solution file (see docs/formats.md). Throws Error when the command fails or
// the file is malformed.
class ExternalBackend : public SolverBackend {
 public:
  explicit ExternalBackend(std::string command) : command_(std::move(command)) {}
  SolveOutcome solve(const IpModel& model, const SolveConfig& config) const override;
  std::string name() const override { return "external:" + command_; }

 private:
  std::string command_;
};

// "embedded" or "external:<command>".
std::unique_ptr<SolverBackend> make_backend(const std::string& spec);

// Solution file text for `outcome`, one "<lp name> <value>" line per
// variable.
std::string write_solution_file(const IpModel& model, const SolveOutcome& outcome);
SolveOutcome read_solution_file(const IpModel& model, const std::string& text);

}  // namespace pathip

#endif  // PATHIP_SOLVER_HPP_
