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


#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "pathip/error.hpp"
#include "pathip/ip_model.hpp"
#include "pathip/lp_format.hpp"
#include "support.hpp"

namespace pathip {
namespace {

TEST(IpModel, AddVariables) {
  IpModel m;
  EXPECT_EQ(m.add_binary("x_{0,1}"), 0);
  VarId u = m.add_integer(3, 7, "u_5");
  EXPECT_EQ(m.variable(u).lower, 3);
  EXPECT_EQ(m.variable(u).upper, 7);
  EXPECT_EQ(m.variable(u).kind, VarKind::kInteger);
  EXPECT_EQ(m.variable_count(), 2);
  EXPECT_EQ(m.find("u_5"), u);
  EXPECT_FALSE(m.find("t_2").has_value());
}

TEST(IpModel, RejectsBadBounds) {
  IpModel m;
  EXPECT_THROW(m.add_continuous(0, std::numeric_limits<double>::infinity(), "t_2"), Error);
  EXPECT_THROW(m.add_integer(4, 3, "a"), Error);
  EXPECT_THROW(m.add_variable(VarKind::kBinary, 0, 2, "b"), Error);
  m.add_binary("x");
  EXPECT_THROW(m.add_binary("x"), Error);
  EXPECT_EQ(m.variable_count(), 1);
}

TEST(IpModel, ConstraintsMergeDuplicates) {
  IpModel m;
  VarId x0 = m.add_binary("x0");
  VarId x1 = m.add_binary("x1");
  m.add_constraint({{1, x0}, {1, x1}}, Sense::kLessEqual, 1);
  m.add_constraint({{1, x0}, {2, x0}}, Sense::kLessEqual, 3);
  int eq = m.add_constraint({{1, x0}}, Sense::kEqual, 1);
  ASSERT_EQ(m.constraint_count(), 3);
  EXPECT_EQ(m.constraints()[1].terms, (std::vector<Term>{{3, x0}}));
  EXPECT_EQ(m.constraints()[eq].sense, Sense::kEqual);
  EXPECT_THROW(m.add_constraint({{1, 5}}, Sense::kLessEqual, 0), Error);
}

TEST(IpModel, EvaluateAndFeasibility) {
  IpModel m;
  VarId a = m.add_binary("a");
  VarId b = m.add_binary("b");
  VarId t = m.add_continuous(0, 2.5, "t");
  m.add_constraint({{1, a}, {1, b}, {1, t}}, Sense::kLessEqual, 3);
  m.set_objective_sense(ObjectiveSense::kMaximize);
  m.add_objective_term(2, a);
  m.add_objective_product(-1, a, b);
  m.add_objective_term(0.5, t);
  m.add_objective_constant(1);
  std::vector<double> x{1, 1, 1};
  EXPECT_DOUBLE_EQ(m.evaluate(x), 2 - 1 + 0.5 + 1);
  EXPECT_TRUE(m.is_feasible(x));
  x[2] = 1.5;
  EXPECT_FALSE(m.is_feasible(x));
  x = {0.5, 0, 0};
  EXPECT_FALSE(m.is_feasible(x));
}

TEST(IpModel, QuadraticTermsNeedBinaries) {
  IpModel m;
  VarId a = m.add_binary("a");
  VarId u = m.add_integer(0, 3, "u");
  EXPECT_THROW(m.add_objective_product(1, a, u), Error);
}

TEST(Linearize, ProductUnderPackingRow) {
  IpModel m;
  VarId x0 = m.add_binary("x0");
  VarId x1 = m.add_binary("x1");
  m.add_constraint({{1, x0}, {1, x1}}, Sense::kLessEqual, 1);
  m.set_objective_sense(ObjectiveSense::kMaximize);
  m.add_objective_product(1, x0, x1);
  IpModel lin = linearize(m);
  EXPECT_TRUE(lin.is_linear());
  EXPECT_EQ(lin.variable_count(), 3);
  auto best = testing::brute_force(lin);
  ASSERT_TRUE(best.feasible);
  EXPECT_EQ(best.objective, 0.0);
}

TEST(Linearize, UnconstrainedProduct) {
  IpModel m;
  VarId x0 = m.add_binary("x0");
  VarId x1 = m.add_binary("x1");
  m.set_objective_sense(ObjectiveSense::kMaximize);
  m.add_objective_product(1, x0, x1);
  auto best = testing::brute_force(linearize(m));
  EXPECT_EQ(best.objective, 1.0);
  EXPECT_EQ(best.assignment[x0], 1.0);
  EXPECT_EQ(best.assignment[x1], 1.0);
}

TEST(Linearize, LinearModelUnchanged) {
  IpModel m;
  VarId x0 = m.add_binary("x0");
  m.add_constraint({{1, x0}}, Sense::kLessEqual, 1);
  m.add_objective_term(3, x0);
  IpModel lin = linearize(m);
  EXPECT_EQ(lin.variable_count(), 1);
  EXPECT_EQ(lin.constraint_count(), 1);
  EXPECT_EQ(export_lp(lin), export_lp(m));
}

IpModel random_quadratic(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> var(0, n - 1);
  IpModel m;
  for (int i = 0; i < n; ++i) m.add_binary("b" + std::to_string(i));
  m.set_objective_sense(rng() % 2 ? ObjectiveSense::kMaximize : ObjectiveSense::kMinimize);
  for (int i = 0; i < n; ++i) m.add_objective_term(coef(rng), i);
  int products = 1 + static_cast<int>(rng() % 6);
  for (int p = 0; p < products; ++p) m.add_objective_product(coef(rng), var(rng), var(rng));
  int rows = static_cast<int>(rng() % 3);
  for (int r = 0; r < rows; ++r) {
    std::vector<Term> terms;
    for (int i = 0; i < n; ++i) {
      if (rng() % 2) terms.push_back({static_cast<double>(coef(rng)), i});
    }
    m.add_constraint(terms, Sense::kLessEqual, 2);
  }
  return m;
}

TEST(Linearize, ProductVariablesAreForcedAndObjectivePreserved) {
  std::mt19937_64 rng(3);
  int assignments = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 7;
    IpModel m = random_quadratic(rng, n);
    IpModel lin = linearize(m);
    ASSERT_TRUE(lin.is_linear());
    // Enumerate every feasible assignment of the linearized model: the
    // original part must be feasible for m, each y must equal its product
    // (hence unique per original assignment) and the objectives must agree.
    std::set<std::vector<double>> originals;
    testing::for_each_feasible(lin, [&](const std::vector<double>& x) {
      std::vector<double> head(x.begin(), x.begin() + n);
      EXPECT_TRUE(m.is_feasible(head));
      EXPECT_TRUE(originals.insert(head).second);
      EXPECT_NEAR(lin.evaluate(x), m.evaluate(head), 1e-12);
      return true;
    });
    // And every feasible assignment of m extends.
    long feasible_original = 0;
    testing::for_each_feasible(m, [&](const std::vector<double>&) {
      ++feasible_original;
      return true;
    });
    EXPECT_EQ(static_cast<long>(originals.size()), feasible_original);
    assignments += feasible_original;
  }
  EXPECT_GT(assignments, 1000);
}

TEST(IpModel, CountsAreDeterministic) {
  auto build = [] {
    std::mt19937_64 rng(99);
    return linearize(random_quadratic(rng, 8));
  };
  IpModel a = build(), b = build();
  EXPECT_EQ(a.variable_count(), b.variable_count());
  EXPECT_EQ(a.constraint_count(), b.constraint_count());
  EXPECT_EQ(export_lp(a), export_lp(b));
}

// ---- LP text ----

TEST(LpFormat, NamesAreMangledInjectively) {
  IpModel m;
  m.add_binary("x[0][1][0][0]");
  m.add_binary("x(0)(1)(0)(0)");
  m.add_binary("3abc");
  m.add_binary("end");
  m.add_binary("a b");
  auto names = lp_names(m);
  EXPECT_EQ(names[0], "x(0)(1)(0)(0)");
  EXPECT_NE(names[1], names[0]);
  EXPECT_EQ(names[2][0], '_');
  EXPECT_NE(names[3], "end");
  EXPECT_EQ(std::set<std::string>(names.begin(), names.end()).size(), names.size());
}

IpModel mixed_model() {
  IpModel m;
  VarId a = m.add_binary("x[0][a]");
  VarId b = m.add_integer(-2, 5, "u[1]");
  VarId c = m.add_continuous(0.25, 3.75, "t[2]");
  VarId d = m.add_binary("fixed");
  m.set_bounds(d, 1, 1);
  m.add_constraint({{1.5, a}, {-2, b}, {0.1, c}}, Sense::kLessEqual, 4.2, "row1");
  m.add_constraint({{1, b}, {1, c}}, Sense::kGreaterEqual, -1, "row2");
  m.add_constraint({{1, a}, {1, d}}, Sense::kEqual, 1, "row3");
  m.add_constraint({}, Sense::kLessEqual, 0, "empty");
  m.set_objective_sense(ObjectiveSense::kMaximize);
  m.add_objective_term(1.0 / 3.0, a);
  m.add_objective_term(-7, b);
  m.add_objective_term(1e-5, c);
  m.add_objective_constant(2.5);
  return m;
}

TEST(LpFormat, RoundTripKeepsIdsBoundsAndRows) {
  IpModel m = mixed_model();
  std::string text = export_lp(m);
  IpModel back = parse_lp(text);
  ASSERT_EQ(back.variable_count(), m.variable_count());
  auto names = lp_names(m);
  for (int j = 0; j < m.variable_count(); ++j) {
    EXPECT_EQ(back.variable(j).name, names[j]);
    EXPECT_EQ(back.variable(j).kind, m.variable(j).kind);
    EXPECT_EQ(back.variable(j).lower, m.variable(j).lower);
    EXPECT_EQ(back.variable(j).upper, m.variable(j).upper);
  }
  ASSERT_EQ(back.constraint_count(), m.constraint_count());
  for (int r = 0; r < m.constraint_count(); ++r) {
    EXPECT_EQ(back.constraints()[r].terms, m.constraints()[r].terms);
    EXPECT_EQ(back.constraints()[r].sense, m.constraints()[r].sense);
    EXPECT_EQ(back.constraints()[r].rhs, m.constraints()[r].rhs);
  }
  EXPECT_EQ(back.objective().sense, m.objective().sense);
  EXPECT_EQ(back.objective().constant, m.objective().constant);
  EXPECT_EQ(export_lp(back), text);
}

TEST(LpFormat, RejectsMalformedText) {
  EXPECT_THROW(parse_lp("Maximize\n obj: 2 x\nSubject To\n c0: x <=\nEnd\n"), ParseError);
  EXPECT_THROW(parse_lp("Hello\n"), ParseError);
}

TEST(LpFormat, NumbersReadBack) {
  for (double v : {0.1, 1.0 / 3.0, 1e-17, 12345678.9, -2.5, 0.0}) {
    EXPECT_EQ(std::stod(format_number(v)), v);
  }
  EXPECT_EQ(format_number(3), "3");
}

}  // namespace
}  // namespace pathip
