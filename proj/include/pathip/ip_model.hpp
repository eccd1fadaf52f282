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

#ifndef PATHIP_IP_MODEL_HPP_
#define PATHIP_IP_MODEL_HPP_

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace pathip {

using VarId = int;

enum class VarKind { kBinary, kInteger, kContinuous };

struct Variable {
  VarId id = 0;
  VarKind kind = VarKind::kBinary;
  double lower = 0.0;
  double upper = 1.0;
  std::string name;

  bool integral() const { return kind != VarKind::kContinuous; }
};

struct Term {
  double coef = 0.0;
  VarId var = 0;
  bool operator==(const Term&) const = default;
};

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  std::vector<Term> terms;  // one term per variable
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
  std::string name;
};

enum class ObjectiveSense { kMinimize, kMaximize };

struct QuadraticTerm {
  double coef = 0.0;
  VarId a = 0;
  VarId b = 0;
};

struct Objective {
  ObjectiveSense sense = ObjectiveSense::kMinimize;
  std::vector<Term> linear;
  std::vector<QuadraticTerm> quadratic;  // binaries only
  double constant = 0.0;
};

// Sums coefficients of repeated variables and drops exact zeros. The first
// occurrence of a variable fixes its position.
std::vector<Term> merge_terms(std::span<const Term> terms);

class IpModel {
 public:
  VarId add_variable(VarKind kind, double lower, double upper, std::string name);
  VarId add_binary(std::string name) { return add_variable(VarKind::kBinary, 0, 1, std::move(name)); }
  VarId add_integer(double lower, double upper, std::string name) {
    return add_variable(VarKind::kInteger, lower, upper, std::move(name));
  }
  VarId add_continuous(double lower, double upper, std::string name) {
    return add_variable(VarKind::kContinuous, lower, upper, std::move(name));
  }

  int add_constraint(std::span<const Term> terms, Sense sense, double rhs,
                     std::string name = {});
  int add_constraint(std::initializer_list<Term> terms, Sense sense, double rhs,
                     std::string name = {}) {
    return add_constraint(std::span<const Term>(terms.begin(), terms.size()), sense, rhs,
                          std::move(name));
  }

  void set_objective_sense(ObjectiveSense sense) { objective_.sense = sense; }
  void add_objective_term(double coef, VarId var);
  void add_objective_product(double coef, VarId a, VarId b);
  void add_objective_constant(double value) { objective_.constant += value; }

  // Tightens or relaxes bounds in place; integer kinds keep integral bounds.
  void set_bounds(VarId var, double lower, double upper);

  const std::vector<Variable>& variables() const { return variables_; }
  const Variable& variable(VarId id) const { return variables_.at(id); }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }
  const Objective& objective() const { return objective_; }
  int variable_count() const { return static_cast<int>(variables_.size()); }
  int constraint_count() const { return static_cast<int>(constraints_.size()); }
  bool is_linear() const { return objective_.quadratic.empty(); }

  std::optional<VarId> find(const std::string& name) const;

  double evaluate(std::span<const double> x) const;
  double row_activity(int row, std::span<const double> x) const;
  // Bounds, integrality and every row, with absolute tolerance `tol`.
  bool is_feasible(std::span<const double> x, double tol = 1e-6) const;

 private:
  void check_var(VarId id) const;

  std::vector<Variable> variables_;
  std::vector<LinearConstraint> constraints_;
  Objective objective_;
  std::vector<int> objective_slot_;  // position in objective_.linear, or -1
  std::unordered_map<std::string, VarId> by_name_;
};

// Replaces every product x_a * x_b of binaries by a fresh binary y with
// y <= x_a, y <= x_b, y >= x_a + x_b - 1. Products with a == b become
// linear terms. Variable ids of the input model are preserved.
IpModel linearize(const IpModel& model);

}  // namespace pathip

#endif  // PATHIP_IP_MODEL_HPP_
