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

#include "pathip/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>

#include "pathip/error.hpp"
#include "simplex.hpp"

namespace pathip {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRowTolerance = 1e-6;

// The model after fixed columns and empty rows are gone, as a minimization.
struct Reduced {
  LpData lp;
  std::vector<int> col_of;    // model variable -> column, -1 when fixed
  std::vector<int> var_of;    // column -> model variable
  std::vector<double> fixed;  // value of fixed model variables
  std::vector<double> lower, upper;
  std::vector<char> integral;
  double sign = 1.0;    // model objective = sign * reduced objective
  double offset = 0.0;  // constant part of the reduced objective
  bool infeasible = false;
  bool integral_objective = false;
};

Reduced presolve(const IpModel& model, bool drop_objective) {
  Reduced r;
  const int nv = model.variable_count();
  r.col_of.assign(nv, -1);
  r.fixed.assign(nv, 0.0);
  for (const Variable& v : model.variables()) {
    if (!std::isfinite(v.lower) || !std::isfinite(v.upper)) {
      throw Error("variable '" + v.name + "' is unbounded");
    }
    if (v.lower == v.upper) {
      r.fixed[v.id] = v.lower;
      continue;
    }
    r.col_of[v.id] = static_cast<int>(r.var_of.size());
    r.var_of.push_back(v.id);
    r.lower.push_back(v.lower);
    r.upper.push_back(v.upper);
    r.integral.push_back(v.integral());
  }
  const int cols = static_cast<int>(r.var_of.size());

  std::vector<int> ri, ci;
  std::vector<double> vals, row_lo, row_hi;
  for (const auto& c : model.constraints()) {
    double rhs = c.rhs;
    int row = static_cast<int>(row_lo.size());
    size_t before = vals.size();
    for (const Term& t : c.terms) {
      int col = r.col_of[t.var];
      if (col < 0) {
        rhs -= t.coef * r.fixed[t.var];
      } else {
        ri.push_back(row);
        ci.push_back(col);
        vals.push_back(t.coef);
      }
    }
    if (vals.size() == before) {
      bool ok = c.sense == Sense::kLessEqual      ? 0.0 <= rhs + kRowTolerance
                : c.sense == Sense::kGreaterEqual ? 0.0 >= rhs - kRowTolerance
                                                  : std::abs(rhs) <= kRowTolerance;
      if (!ok) r.infeasible = true;
      continue;
    }
    row_lo.push_back(c.sense == Sense::kLessEqual ? -kInf : rhs);
    row_hi.push_back(c.sense == Sense::kGreaterEqual ? kInf : rhs);
  }
  r.lp = LpData::from_triplets(static_cast<int>(row_lo.size()), cols, ri, ci, vals);
  r.lp.row_lower = std::move(row_lo);
  r.lp.row_upper = std::move(row_hi);

  r.sign = model.objective().sense == ObjectiveSense::kMaximize ? -1.0 : 1.0;
  r.integral_objective = true;
  if (!drop_objective) {
    r.offset = r.sign * model.objective().constant;
    for (const Term& t : model.objective().linear) {
      int col = r.col_of[t.var];
      if (col < 0) {
        r.offset += r.sign * t.coef * r.fixed[t.var];
      } else {
        r.lp.cost[col] += r.sign * t.coef;
      }
    }
  }
  for (int j = 0; j < cols; ++j) {
    double c = r.lp.cost[j];
    if (c != 0.0 && (!r.integral[j] || std::abs(c - std::round(c)) > 1e-9)) {
      r.integral_objective = false;
    }
  }
  return r;
}

std::vector<double> expand(const Reduced& r, std::span<const double> x) {
  std::vector<double> out = r.fixed;
  for (size_t j = 0; j < r.var_of.size(); ++j) out[r.var_of[j]] = x[j];
  return out;
}

bool rows_satisfied(const LpData& lp, std::span<const double> x) {
  for (int i = 0; i < lp.rows; ++i) {
    double a = 0.0;
    for (int k = lp.row_start[i]; k < lp.row_start[i + 1]; ++k) a += lp.row_val[k] * x[lp.row_col[k]];
    if (a < lp.row_lower[i] - kRowTolerance || a > lp.row_upper[i] + kRowTolerance) return false;
  }
  return true;
}

double reduced_objective(const Reduced& r, std::span<const double> x) {
  double value = r.offset;
  for (int j = 0; j < r.lp.cols; ++j) value += r.lp.cost[j] * x[j];
  return value;
}

struct Node {
  long id = 0;
  int depth = 0;
  double bound = -kInf;  // reduced (minimization) sense
  std::vector<std::tuple<int, double, double>> changes;
  std::shared_ptr<const LpBasis> basis;
};

struct BestFirst {
  bool operator()(const Node& a, const Node& b) const {
    // priority_queue pops the largest; "largest" here is the best node.
    if (a.bound != b.bound) return a.bound > b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.id > b.id;
  }
};

class NodePool {
 public:
  explicit NodePool(NodeOrder order) : order_(order) {}
  bool empty() const { return order_ == NodeOrder::kBestBound ? heap_.empty() : stack_.empty(); }
  void push(Node node) {
    if (order_ == NodeOrder::kBestBound) {
      heap_.push(std::move(node));
    } else {
      stack_.push_back(std::move(node));
    }
  }
  Node pop() {
    Node node;
    if (order_ == NodeOrder::kBestBound) {
      node = heap_.top();
      heap_.pop();
    } else {
      node = std::move(stack_.back());
      stack_.pop_back();
    }
    return node;
  }
  double best_bound() const {
    if (empty()) return kInf;
    if (order_ == NodeOrder::kBestBound) return heap_.top().bound;
    double best = kInf;
    for (const Node& n : stack_) best = std::min(best, n.bound);
    return best;
  }
  // Drops nodes that cannot beat `cutoff`.
  void prune(double cutoff) {
    if (order_ == NodeOrder::kBestBound) {
      if (!heap_.empty() && heap_.top().bound >= cutoff) heap_ = {};
    } else {
      std::erase_if(stack_, [&](const Node& n) { return n.bound >= cutoff; });
    }
  }

 private:
  NodeOrder order_;
  std::priority_queue<Node, std::vector<Node>, BestFirst> heap_;
  std::vector<Node> stack_;
};

double elapsed(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

class BranchAndBound {
 public:
  BranchAndBound(const IpModel& model, const SolveConfig& config, bool drop_objective)
      : model_(model), config_(config), reduced_(presolve(model, drop_objective)),
        simplex_(reduced_.lp, config.lp_tolerance), pool_(config.node_order) {}

  SolveOutcome run() {
    start_ = Clock::now();
    deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(config_.time_limit));
    SolveOutcome out;
    if (reduced_.infeasible) return finish(out, OutcomeStatus::kInfeasible);

    Node root;
    root.id = next_id_++;
    pool_.push(root);
    bool timed_out = false;
    bool target_hit = false;
    double open_bound = kInf;  // bound of a node interrupted by the clock

    while (!pool_.empty()) {
      if (Clock::now() > deadline_) {
        timed_out = true;
        break;
      }
      Node node = pool_.pop();
      if (have_incumbent_ && node.bound >= cutoff()) continue;
      ++nodes_;

      std::vector<double> lower = reduced_.lower, upper = reduced_.upper;
      for (const auto& [col, lo, hi] : node.changes) {
        lower[col] = lo;
        upper[col] = hi;
      }
      LpSolveResult lp = simplex_.solve(lower, upper, node.basis.get(), deadline_);
      iterations_ += lp.iterations;
      if (lp.status == LpStatus::kNumericalFailure && node.basis) {
        lp = simplex_.solve(lower, upper, nullptr, deadline_);
        iterations_ += lp.iterations;
      }
      if (lp.status == LpStatus::kTimeLimit) {
        timed_out = true;
        open_bound = node.bound;
        break;
      }
      if (lp.status == LpStatus::kNumericalFailure) {
        throw Error("LP relaxation failed numerically at node " + std::to_string(node.id));
      }
      if (lp.status == LpStatus::kUnbounded) return finish(out, OutcomeStatus::kUnbounded);
      if (lp.status == LpStatus::kInfeasible) {
        log(node, node.bound, false);
        continue;
      }

      double bound = std::max(node.bound, round_bound(lp.objective + reduced_.offset));
      if (have_incumbent_ && bound >= cutoff()) {
        log(node, bound, false);
        continue;
      }

      int branch_col = select_branch(lp.x);
      if (branch_col < 0) {
        offer(lp.x, false);
      } else {
        offer(lp.x, true);
      }
      log(node, bound, true);
      if (target_reached()) {
        target_hit = true;
        open_bound = std::min(open_bound, bound);
        break;
      }
      if (branch_col < 0 || (have_incumbent_ && bound >= cutoff())) continue;

      double value = lp.x[branch_col];
      double down_hi = std::floor(value), up_lo = std::ceil(value);
      Node down{next_id_, node.depth + 1, bound, node.changes, lp.basis};
      down.changes.emplace_back(branch_col, lower[branch_col], down_hi);
      Node up{next_id_, node.depth + 1, bound, node.changes, lp.basis};
      up.changes.emplace_back(branch_col, up_lo, upper[branch_col]);
      // The child on the side the LP value leans to gets the lower id; under
      // depth-first order it is explored first.
      bool up_first = value - down_hi >= 0.5;
      Node& first = up_first ? up : down;
      Node& second = up_first ? down : up;
      first.id = next_id_++;
      second.id = next_id_++;
      if (config_.node_order == NodeOrder::kDepthFirst) {
        pool_.push(std::move(second));
        pool_.push(std::move(first));
      } else {
        pool_.push(std::move(first));
        pool_.push(std::move(second));
      }
    }

    double remaining = std::min(open_bound, pool_.best_bound());
    if (timed_out || target_hit) {
      if (!have_incumbent_) return finish(out, OutcomeStatus::kTimeoutNoIncumbent, remaining);
      bool closed = remaining >= cutoff();
      return finish(out, closed ? OutcomeStatus::kOptimal : OutcomeStatus::kFeasible,
                    std::min(remaining, incumbent_value_));
    }
    return finish(out, have_incumbent_ ? OutcomeStatus::kOptimal : OutcomeStatus::kInfeasible,
                  have_incumbent_ ? incumbent_value_ : kInf);
  }

  LpRelaxation relax() {
    LpRelaxation out;
    if (reduced_.infeasible) {
      out.status = LpOutcome::kInfeasible;
      return out;
    }
    auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(config_.time_limit));
    LpSolveResult lp = simplex_.solve(reduced_.lower, reduced_.upper, nullptr, deadline);
    out.iterations = lp.iterations;
    switch (lp.status) {
      case LpStatus::kOptimal:
        out.status = LpOutcome::kOptimal;
        break;
      case LpStatus::kInfeasible:
        out.status = LpOutcome::kInfeasible;
        return out;
      case LpStatus::kUnbounded:
        out.status = LpOutcome::kUnbounded;
        return out;
      case LpStatus::kTimeLimit:
        out.status = LpOutcome::kTimeLimit;
        return out;
      case LpStatus::kNumericalFailure:
        out.status = LpOutcome::kNumericalFailure;
        return out;
    }
    out.assignment = expand(reduced_, lp.x);
    out.objective = reduced_.sign * (lp.objective + reduced_.offset);
    return out;
  }

 private:
  double gap_tolerance(double value) const { return 1e-6 + 1e-9 * std::abs(value); }
  double cutoff() const { return incumbent_value_ - gap_tolerance(incumbent_value_); }

  double round_bound(double value) const {
    if (!reduced_.integral_objective) return value;
    // Integer columns with integer costs: only the offset can be fractional.
    double shift = reduced_.offset - std::floor(reduced_.offset);
    return std::ceil(value - shift - 1e-6) + shift;
  }

  int select_branch(std::span<const double> x) const {
    int best = -1;
    double best_score = -1.0;
    for (int j = 0; j < reduced_.lp.cols; ++j) {
      if (!reduced_.integral[j]) continue;
      double frac = x[j] - std::floor(x[j]);
      double dist = std::min(frac, 1.0 - frac);
      if (dist <= config_.integrality_tolerance) continue;
      if (config_.branching == Branching::kFirstFractional) return j;
      if (dist > best_score + 1e-12) {
        best_score = dist;
        best = j;
      }
    }
    return best;
  }

  // Considers x (rounded on integer columns) as a new incumbent.
  void offer(std::span<const double> x, bool heuristic) {
    std::vector<double> rounded(x.begin(), x.end());
    for (int j = 0; j < reduced_.lp.cols; ++j) {
      if (reduced_.integral[j]) rounded[j] = std::round(rounded[j]);
      rounded[j] = std::clamp(rounded[j], reduced_.lower[j], reduced_.upper[j]);
    }
    const std::vector<double>* chosen = &rounded;
    if (!rows_satisfied(reduced_.lp, rounded)) {
      if (heuristic) return;
      chosen = nullptr;
    }
    std::vector<double> candidate = chosen ? *chosen : std::vector<double>(x.begin(), x.end());
    double value = reduced_objective(reduced_, candidate);
    if (have_incumbent_ && value >= incumbent_value_ - gap_tolerance(incumbent_value_)) return;
    have_incumbent_ = true;
    incumbent_value_ = value;
    incumbent_ = std::move(candidate);
    pool_.prune(cutoff());
  }

  bool target_reached() const {
    if (!have_incumbent_ || !config_.objective_target) return false;
    double target = reduced_.sign * *config_.objective_target;
    return incumbent_value_ <= target + gap_tolerance(target);
  }

  // `alive`: the node is still open (about to branch) or just gave the
  // incumbent, so its bound still counts towards the global one.
  void log(const Node& node, double bound, bool alive) {
    if (!config_.record_node_log) return;
    NodeLogEntry entry;
    entry.node = node.id;
    entry.depth = node.depth;
    entry.lp_bound = reduced_.sign * bound;
    double global = pool_.best_bound();
    if (alive) global = std::min(global, bound);
    if (have_incumbent_) global = std::min(global, incumbent_value_);
    entry.global_bound = reduced_.sign * global;
    if (have_incumbent_) entry.incumbent = reduced_.sign * incumbent_value_;
    node_log_.push_back(entry);
  }

  SolveOutcome finish(SolveOutcome& out, OutcomeStatus status, double bound = kInf) {
    out.status = status;
    if (have_incumbent_) {
      out.assignment = expand(reduced_, incumbent_);
      for (const Variable& v : model_.variables()) {
        if (v.integral()) out.assignment[v.id] = std::round(out.assignment[v.id]);
      }
      out.objective = model_.evaluate(out.assignment);
    }
    out.bound = reduced_.sign * bound;
    if (!have_incumbent_ && status == OutcomeStatus::kOptimal) out.bound = out.objective;
    out.stats.nodes = nodes_;
    out.stats.simplex_iterations = iterations_;
    out.stats.wall_time = elapsed(start_);
    out.node_log = std::move(node_log_);
    return out;
  }

  const IpModel& model_;
  const SolveConfig& config_;
  Reduced reduced_;
  Simplex simplex_;
  NodePool pool_;
  Clock::time_point start_{}, deadline_{};
  long next_id_ = 0;
  long nodes_ = 0;
  long iterations_ = 0;
  bool have_incumbent_ = false;
  double incumbent_value_ = kInf;
  std::vector<double> incumbent_;
  std::vector<NodeLogEntry> node_log_;
};

void require_linear(const IpModel& model) {
  if (!model.is_linear()) throw Error("model has quadratic objective terms; linearize it first");
}

}  // namespace

void SolveConfig::validate() const {
  if (!(time_limit > 0)) throw Error("time limit must be positive");
  if (!(integrality_tolerance > 0) || !(lp_tolerance > 0)) {
    throw Error("tolerances must be positive");
  }
}

std::string to_string(OutcomeStatus status) {
  switch (status) {
    case OutcomeStatus::kOptimal:
      return "optimal";
    case OutcomeStatus::kFeasible:
      return "feasible";
    case OutcomeStatus::kInfeasible:
      return "infeasible";
    case OutcomeStatus::kUnbounded:
      return "unbounded";
    case OutcomeStatus::kTimeoutNoIncumbent:
      return "timeout";
  }
  return "timeout";
}

OutcomeStatus outcome_status_from_string(const std::string& text) {
  for (auto s : {OutcomeStatus::kOptimal, OutcomeStatus::kFeasible, OutcomeStatus::kInfeasible,
                 OutcomeStatus::kUnbounded, OutcomeStatus::kTimeoutNoIncumbent}) {
    if (to_string(s) == text) return s;
  }
  throw Error("unknown solve status '" + text + "'");
}

std::string to_string(LpOutcome status) {
  switch (status) {
    case LpOutcome::kOptimal:
      return "optimal";
    case LpOutcome::kInfeasible:
      return "infeasible";
    case LpOutcome::kUnbounded:
      return "unbounded";
    case LpOutcome::kNumericalFailure:
      return "numerical-failure";
    case LpOutcome::kTimeLimit:
      return "time-limit";
  }
  return "numerical-failure";
}

SolveOutcome solve(const IpModel& model, const SolveConfig& config) {
  config.validate();
  require_linear(model);
  return BranchAndBound(model, config, false).run();
}

LpRelaxation lp_relax(const IpModel& model, const SolveConfig& config) {
  config.validate();
  require_linear(model);
  return BranchAndBound(model, config, false).relax();
}

FeasibilityResult check_feasibility(const IpModel& model, const SolveConfig& config) {
  config.validate();
  SolveOutcome outcome = BranchAndBound(model, config, true).run();
  FeasibilityResult result;
  result.stats = outcome.stats;
  switch (outcome.status) {
    case OutcomeStatus::kOptimal:
    case OutcomeStatus::kFeasible:
      result.status = Feasibility::kFeasible;
      result.assignment = std::move(outcome.assignment);
      break;
    case OutcomeStatus::kInfeasible:
      result.status = Feasibility::kInfeasible;
      break;
    case OutcomeStatus::kUnbounded:
    case OutcomeStatus::kTimeoutNoIncumbent:
      result.status = Feasibility::kTimeout;
      break;
  }
  return result;
}

}  // namespace pathip
