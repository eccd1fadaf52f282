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

#include "simplex.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <limits>

namespace pathip {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotTolerance = 1e-9;
constexpr double kDropTolerance = 1e-13;
constexpr int kRefactorInterval = 100;
constexpr int kStallLimit = 50;

struct Eta {
  int pos = 0;
  double pivot = 1.0;
  std::vector<int> index;
  std::vector<double> value;
};

}  // namespace

LpData LpData::from_triplets(int rows, int cols, std::span<const int> r, std::span<const int> c,
                             std::span<const double> v) {
  LpData d;
  d.rows = rows;
  d.cols = cols;
  d.cost.assign(cols, 0.0);
  d.row_lower.assign(rows, -kInf);
  d.row_upper.assign(rows, kInf);
  auto fill = [&](int count, std::span<const int> major, std::span<const int> minor,
                  std::vector<int>& start, std::vector<int>& index, std::vector<double>& value) {
    start.assign(count + 1, 0);
    for (int k : major) ++start[k + 1];
    for (int i = 0; i < count; ++i) start[i + 1] += start[i];
    index.resize(v.size());
    value.resize(v.size());
    std::vector<int> next(start.begin(), start.end() - 1);
    for (size_t k = 0; k < v.size(); ++k) {
      int slot = next[major[k]]++;
      index[slot] = minor[k];
      value[slot] = v[k];
    }
  };
  fill(cols, c, r, d.col_start, d.col_row, d.col_val);
  fill(rows, r, c, d.row_start, d.row_col, d.row_val);
  return d;
}

struct Simplex::Impl {
  using SparseMatrix = Eigen::SparseMatrix<double>;

  const LpData& data;
  double tol;
  int m, n;
  std::vector<double> lo, up, x;
  std::vector<VarStatus> st;
  std::vector<int> head, pos_of;
  Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>> lu;
  std::vector<Eta> etas;
  Eigen::VectorXd work, solved, alpha, y;
  std::vector<double> d, cb;
  long iterations = 0;

  Impl(const LpData& lp, double tolerance)
      : data(lp), tol(tolerance), m(lp.rows), n(lp.cols) {}

  int total() const { return n + m; }

  // Scatters column j of [A, -I] into `out` (already zero).
  void scatter(int j, Eigen::VectorXd& out) const {
    if (j >= n) {
      out[j - n] = -1.0;
      return;
    }
    for (int k = data.col_start[j]; k < data.col_start[j + 1]; ++k) {
      out[data.col_row[k]] += data.col_val[k];
    }
  }

  bool factorize() {
    etas.clear();
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(m * 2);
    for (int p = 0; p < m; ++p) {
      int j = head[p];
      if (j >= n) {
        triplets.emplace_back(j - n, p, -1.0);
      } else {
        for (int k = data.col_start[j]; k < data.col_start[j + 1]; ++k) {
          triplets.emplace_back(data.col_row[k], p, data.col_val[k]);
        }
      }
    }
    SparseMatrix basis(m, m);
    basis.setFromTriplets(triplets.begin(), triplets.end());
    basis.makeCompressed();
    lu.analyzePattern(basis);
    lu.factorize(basis);
    return lu.info() == Eigen::Success;
  }

  void ftran(Eigen::VectorXd& v) {
    solved = lu.solve(v);
    v.swap(solved);
    for (const Eta& e : etas) {
      double xp = v[e.pos] / e.pivot;
      v[e.pos] = xp;
      if (xp == 0.0) continue;
      for (size_t k = 0; k < e.index.size(); ++k) v[e.index[k]] -= e.value[k] * xp;
    }
  }

  void btran(Eigen::VectorXd& v) {
    for (auto it = etas.rbegin(); it != etas.rend(); ++it) {
      double sum = v[it->pos];
      for (size_t k = 0; k < it->index.size(); ++k) sum -= it->value[k] * v[it->index[k]];
      v[it->pos] = sum / it->pivot;
    }
    solved = lu.transpose().solve(v);
    v.swap(solved);
  }

  void recompute_basics() {
    work.setZero(m);
    for (int j = 0; j < total(); ++j) {
      if (st[j] == VarStatus::kBasic || x[j] == 0.0) continue;
      if (j >= n) {
        work[j - n] += x[j];
      } else {
        for (int k = data.col_start[j]; k < data.col_start[j + 1]; ++k) {
          work[data.col_row[k]] -= data.col_val[k] * x[j];
        }
      }
    }
    ftran(work);
    for (int p = 0; p < m; ++p) x[head[p]] = work[p];
  }

  void place_nonbasic(int j) {
    if (st[j] == VarStatus::kLower && lo[j] == -kInf) st[j] = VarStatus::kUpper;
    if (st[j] == VarStatus::kUpper && up[j] == kInf) st[j] = VarStatus::kLower;
    x[j] = st[j] == VarStatus::kLower ? lo[j] : up[j];
  }

  void slack_basis() {
    for (int j = 0; j < n; ++j) {
      if (st[j] == VarStatus::kBasic) {
        st[j] = std::abs(x[j] - lo[j]) <= std::abs(up[j] - x[j]) ? VarStatus::kLower
                                                                  : VarStatus::kUpper;
      }
      place_nonbasic(j);
      pos_of[j] = -1;
    }
    for (int i = 0; i < m; ++i) {
      head[i] = n + i;
      pos_of[n + i] = i;
      st[n + i] = VarStatus::kBasic;
    }
  }

  // Refactorizes and recomputes the basic values; on a singular basis the
  // slack basis replaces it.
  void refresh() {
    if (!factorize()) {
      slack_basis();
      factorize();
    }
    recompute_basics();
  }

  bool load_warm(const LpBasis* warm) {
    if (!warm || static_cast<int>(warm->heading.size()) != m ||
        static_cast<int>(warm->status.size()) != total()) {
      return false;
    }
    int basic = 0;
    for (VarStatus s : warm->status) basic += s == VarStatus::kBasic;
    if (basic != m) return false;
    head = warm->heading;
    st = warm->status;
    std::fill(pos_of.begin(), pos_of.end(), -1);
    for (int p = 0; p < m; ++p) {
      if (st[head[p]] != VarStatus::kBasic || pos_of[head[p]] >= 0) return false;
      pos_of[head[p]] = p;
    }
    return true;
  }

  double objective() const {
    double value = 0.0;
    for (int j = 0; j < n; ++j) value += data.cost[j] * x[j];
    return value;
  }

  LpSolveResult finish(LpStatus status) {
    LpSolveResult result;
    result.status = status;
    result.iterations = iterations;
    result.x.assign(x.begin(), x.begin() + n);
    result.objective = objective();
    auto basis = std::make_shared<LpBasis>();
    basis->heading = head;
    basis->status = st;
    result.basis = std::move(basis);
    return result;
  }

  LpSolveResult solve(std::span<const double> lower, std::span<const double> upper,
                      const LpBasis* warm, Clock::time_point deadline) {
    iterations = 0;
    lo.assign(total(), 0.0);
    up.assign(total(), 0.0);
    std::copy(lower.begin(), lower.end(), lo.begin());
    std::copy(upper.begin(), upper.end(), up.begin());
    std::copy(data.row_lower.begin(), data.row_lower.end(), lo.begin() + n);
    std::copy(data.row_upper.begin(), data.row_upper.end(), up.begin() + n);
    x.assign(total(), 0.0);
    head.assign(m, 0);
    pos_of.assign(total(), -1);
    st.assign(total(), VarStatus::kLower);

    if (m == 0) {
      for (int j = 0; j < n; ++j) {
        st[j] = data.cost[j] < 0 ? VarStatus::kUpper : VarStatus::kLower;
        place_nonbasic(j);
      }
      return finish(LpStatus::kOptimal);
    }

    if (!load_warm(warm)) {
      st.assign(total(), VarStatus::kLower);
      slack_basis();
    }
    for (int j = 0; j < total(); ++j) {
      if (st[j] != VarStatus::kBasic) place_nonbasic(j);
    }
    refresh();
    return iterate(deadline);
  }

  LpSolveResult iterate(Clock::time_point deadline) {
    const long max_iterations = 50L * (m + n) + 10000;
    d.assign(total(), 0.0);
    cb.assign(m, 0.0);
    y.resize(m);
    alpha.resize(m);
    bool verified = true;
    bool bland = false;
    int stall = 0;

    while (true) {
      if (iterations > max_iterations) return finish(LpStatus::kNumericalFailure);
      if ((iterations & 31) == 0 && Clock::now() > deadline) return finish(LpStatus::kTimeLimit);

      // Phase: minimize the sum of infeasibilities while any basic variable
      // is out of bounds, then the true objective.
      bool phase1 = false;
      for (int p = 0; p < m; ++p) {
        int b = head[p];
        if (x[b] < lo[b] - tol) {
          cb[p] = -1.0;
          phase1 = true;
        } else if (x[b] > up[b] + tol) {
          cb[p] = 1.0;
          phase1 = true;
        } else {
          cb[p] = 0.0;
        }
      }
      if (!phase1) {
        for (int p = 0; p < m; ++p) cb[p] = head[p] < n ? data.cost[head[p]] : 0.0;
      }
      for (int p = 0; p < m; ++p) y[p] = cb[p];
      btran(y);

      for (int j = 0; j < n; ++j) d[j] = phase1 ? 0.0 : data.cost[j];
      for (int i = 0; i < m; ++i) {
        double yi = y[i];
        d[n + i] = yi;
        if (yi == 0.0) continue;
        for (int k = data.row_start[i]; k < data.row_start[i + 1]; ++k) {
          d[data.row_col[k]] -= yi * data.row_val[k];
        }
      }

      int q = -1;
      double best = 0.0;
      for (int j = 0; j < total(); ++j) {
        if (st[j] == VarStatus::kBasic || lo[j] == up[j]) continue;
        bool eligible = (st[j] == VarStatus::kLower && d[j] < -tol) ||
                        (st[j] == VarStatus::kUpper && d[j] > tol);
        if (!eligible) continue;
        if (bland) {
          q = j;
          break;
        }
        if (std::abs(d[j]) > best) {
          best = std::abs(d[j]);
          q = j;
        }
      }

      if (q < 0) {
        if (!verified) {
          refresh();
          verified = true;
          continue;
        }
        return finish(phase1 ? LpStatus::kInfeasible : LpStatus::kOptimal);
      }
      verified = false;

      const double dir = st[q] == VarStatus::kLower ? 1.0 : -1.0;
      alpha.setZero(m);
      scatter(q, alpha);
      ftran(alpha);

      auto effective = [&](int b, double& lo_eff, double& hi_eff) {
        if (x[b] < lo[b] - tol) {
          lo_eff = -kInf;
          hi_eff = lo[b];
        } else if (x[b] > up[b] + tol) {
          lo_eff = up[b];
          hi_eff = kInf;
        } else {
          lo_eff = lo[b];
          hi_eff = up[b];
        }
      };

      // Harris pass one: largest step keeping every basic within tolerance.
      double theta_max = kInf;
      for (int p = 0; p < m; ++p) {
        double a = alpha[p];
        if (std::abs(a) < kPivotTolerance) continue;
        double rate = -dir * a;
        int b = head[p];
        double lo_eff, hi_eff;
        effective(b, lo_eff, hi_eff);
        double relaxed = bland ? 0.0 : tol;
        if (rate < 0 && lo_eff > -kInf) {
          theta_max = std::min(theta_max, (x[b] - lo_eff + relaxed) / -rate);
        } else if (rate > 0 && hi_eff < kInf) {
          theta_max = std::min(theta_max, (hi_eff - x[b] + relaxed) / rate);
        }
      }
      const double range = up[q] - lo[q];
      if (theta_max == kInf && range == kInf) {
        if (phase1) return finish(LpStatus::kNumericalFailure);
        return finish(LpStatus::kUnbounded);
      }

      int leave = -1;
      bool leave_at_upper = false;
      double theta = kInf;
      if (range > theta_max) {
        // Pass two: among candidates within theta_max prefer the largest pivot.
        double best_pivot = 0.0;
        for (int p = 0; p < m; ++p) {
          double a = alpha[p];
          if (std::abs(a) < kPivotTolerance) continue;
          double rate = -dir * a;
          int b = head[p];
          double lo_eff, hi_eff;
          effective(b, lo_eff, hi_eff);
          double ratio;
          bool to_upper;
          if (rate < 0 && lo_eff > -kInf) {
            ratio = (x[b] - lo_eff) / -rate;
            to_upper = lo_eff == up[b] && lo_eff != lo[b];
          } else if (rate > 0 && hi_eff < kInf) {
            ratio = (hi_eff - x[b]) / rate;
            to_upper = hi_eff == up[b];
            if (hi_eff == lo[b]) to_upper = false;
          } else {
            continue;
          }
          if (ratio > theta_max) continue;
          bool better;
          if (bland) {
            better = leave < 0 || ratio < theta - 1e-12 ||
                     (std::abs(ratio - theta) <= 1e-12 && b < head[leave]);
          } else {
            better = std::abs(a) > best_pivot ||
                     (std::abs(a) == best_pivot && leave >= 0 && b < head[leave]);
          }
          if (better) {
            best_pivot = std::abs(a);
            leave = p;
            theta = ratio;
            leave_at_upper = to_upper;
          }
        }
        if (leave < 0) return finish(LpStatus::kNumericalFailure);
        theta = std::max(theta, 0.0);
      } else {
        theta = range;
      }

      // Step.
      if (theta > 0) {
        x[q] += dir * theta;
        for (int p = 0; p < m; ++p) {
          if (alpha[p] != 0.0) x[head[p]] -= dir * theta * alpha[p];
        }
      }
      ++iterations;
      double gain = theta * std::abs(d[q]);
      if (gain > 1e-12) {
        stall = 0;
        bland = false;
      } else if (++stall > kStallLimit) {
        bland = true;
      }

      if (leave < 0) {
        st[q] = dir > 0 ? VarStatus::kUpper : VarStatus::kLower;
        x[q] = dir > 0 ? up[q] : lo[q];
        continue;
      }
      int b = head[leave];
      st[b] = leave_at_upper ? VarStatus::kUpper : VarStatus::kLower;
      x[b] = leave_at_upper ? up[b] : lo[b];
      pos_of[b] = -1;
      head[leave] = q;
      pos_of[q] = leave;
      st[q] = VarStatus::kBasic;

      Eta eta;
      eta.pos = leave;
      eta.pivot = alpha[leave];
      for (int p = 0; p < m; ++p) {
        if (p != leave && std::abs(alpha[p]) > kDropTolerance) {
          eta.index.push_back(p);
          eta.value.push_back(alpha[p]);
        }
      }
      etas.push_back(std::move(eta));
      if (static_cast<int>(etas.size()) >= kRefactorInterval) refresh();
    }
  }
};

Simplex::Simplex(const LpData& data, double tolerance)
    : impl_(std::make_unique<Impl>(data, tolerance)) {}

Simplex::~Simplex() = default;

LpSolveResult Simplex::solve(std::span<const double> lower, std::span<const double> upper,
                             const LpBasis* warm, Clock::time_point deadline) {
  return impl_->solve(lower, upper, warm, deadline);
}

}  // namespace pathip
