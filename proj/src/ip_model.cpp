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

#include "pathip/ip_model.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "pathip/error.hpp"

namespace pathip {

std::vector<Term> merge_terms(std::span<const Term> terms) {
  std::vector<Term> merged;
  std::unordered_map<VarId, size_t> slot;
  for (const Term& t : terms) {
    auto [it, fresh] = slot.emplace(t.var, merged.size());
    if (fresh) {
      merged.push_back(t);
    } else {
      merged[it->second].coef += t.coef;
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coef == 0.0; });
  return merged;
}

VarId IpModel::add_variable(VarKind kind, double lower, double upper, std::string name) {
  if (kind == VarKind::kBinary) {
    if (lower < 0 || upper > 1) throw Error("binary variable bounds must lie in [0, 1]");
  }
  if (!std::isfinite(lower) || !std::isfinite(upper)) {
    throw Error("variable '" + name + "' needs finite bounds");
  }
  if (lower > upper) throw Error("variable '" + name + "' has lower bound above upper bound");
  if (kind != VarKind::kContinuous) {
    lower = std::ceil(lower - 1e-9);
    upper = std::floor(upper + 1e-9);
  }
  VarId id = variable_count();
  if (name.empty()) name = "v" + std::to_string(id);
  if (!by_name_.emplace(name, id).second) throw Error("duplicate variable name '" + name + "'");
  variables_.push_back({id, kind, lower, upper, std::move(name)});
  objective_slot_.push_back(-1);
  return id;
}

void IpModel::check_var(VarId id) const {
  if (id < 0 || id >= variable_count()) {
    throw Error("unknown variable id " + std::to_string(id));
  }
}

int IpModel::add_constraint(std::span<const Term> terms, Sense sense, double rhs,
                            std::string name) {
  for (const Term& t : terms) check_var(t.var);
  if (!std::isfinite(rhs)) throw Error("constraint right-hand side must be finite");
  int id = constraint_count();
  if (name.empty()) name = "c" + std::to_string(id);
  constraints_.push_back({merge_terms(terms), sense, rhs, std::move(name)});
  return id;
}

void IpModel::add_objective_term(double coef, VarId var) {
  check_var(var);
  int& slot = objective_slot_[var];
  if (slot < 0) {
    slot = static_cast<int>(objective_.linear.size());
    objective_.linear.push_back({coef, var});
  } else {
    objective_.linear[slot].coef += coef;
  }
}

void IpModel::add_objective_product(double coef, VarId a, VarId b) {
  check_var(a);
  check_var(b);
  if (variables_[a].kind != VarKind::kBinary || variables_[b].kind != VarKind::kBinary) {
    throw Error("quadratic objective terms must be over binary variables");
  }
  objective_.quadratic.push_back({coef, a, b});
}

void IpModel::set_bounds(VarId var, double lower, double upper) {
  check_var(var);
  Variable& v = variables_[var];
  if (v.integral()) {
    lower = std::ceil(lower - 1e-9);
    upper = std::floor(upper + 1e-9);
  }
  if (lower > upper) throw Error("variable '" + v.name + "' has lower bound above upper bound");
  v.lower = lower;
  v.upper = upper;
}

std::optional<VarId> IpModel::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

double IpModel::evaluate(std::span<const double> x) const {
  double value = objective_.constant;
  for (const Term& t : objective_.linear) value += t.coef * x[t.var];
  for (const auto& q : objective_.quadratic) value += q.coef * x[q.a] * x[q.b];
  return value;
}

double IpModel::row_activity(int row, std::span<const double> x) const {
  double sum = 0.0;
  for (const Term& t : constraints_[row].terms) sum += t.coef * x[t.var];
  return sum;
}

bool IpModel::is_feasible(std::span<const double> x, double tol) const {
  if (static_cast<int>(x.size()) != variable_count()) return false;
  for (const Variable& v : variables_) {
    double value = x[v.id];
    if (value < v.lower - tol || value > v.upper + tol) return false;
    if (v.integral() && std::abs(value - std::round(value)) > tol) return false;
  }
  for (int r = 0; r < constraint_count(); ++r) {
    double a = row_activity(r, x);
    double rhs = constraints_[r].rhs;
    switch (constraints_[r].sense) {
      case Sense::kLessEqual:
        if (a > rhs + tol) return false;
        break;
      case Sense::kGreaterEqual:
        if (a < rhs - tol) return false;
        break;
      case Sense::kEqual:
        if (std::abs(a - rhs) > tol) return false;
        break;
    }
  }
  return true;
}

IpModel linearize(const IpModel& model) {
  if (model.is_linear()) return model;
  std::map<std::pair<VarId, VarId>, double> products;
  for (const auto& q : model.objective().quadratic) {
    auto key = std::minmax(q.a, q.b);
    products[{key.first, key.second}] += q.coef;
  }
  // Rebuild the objective without the quadratic part.
  IpModel result;
  for (const Variable& v : model.variables()) result.add_variable(v.kind, v.lower, v.upper, v.name);
  for (const auto& c : model.constraints()) result.add_constraint(c.terms, c.sense, c.rhs, c.name);
  result.set_objective_sense(model.objective().sense);
  result.add_objective_constant(model.objective().constant);
  for (const Term& t : model.objective().linear) result.add_objective_term(t.coef, t.var);
  for (const auto& [pair, coef] : products) {
    auto [a, b] = pair;
    if (coef == 0.0) continue;
    if (a == b) {
      result.add_objective_term(coef, a);
      continue;
    }
    std::string base = "y[" + model.variable(a).name + "][" + model.variable(b).name + "]";
    std::string name = base;
    for (int suffix = 1; result.find(name); ++suffix) name = base + "#" + std::to_string(suffix);
    VarId y = result.add_binary(name);
    result.add_constraint({{1.0, y}, {-1.0, a}}, Sense::kLessEqual, 0.0, name + ".a");
    result.add_constraint({{1.0, y}, {-1.0, b}}, Sense::kLessEqual, 0.0, name + ".b");
    result.add_constraint({{1.0, y}, {-1.0, a}, {-1.0, b}}, Sense::kGreaterEqual, -1.0,
                          name + ".ab");
    result.add_objective_term(coef, y);
  }
  return result;
}

}  // namespace pathip
