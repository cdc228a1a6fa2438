// Copyright 2026 The privpart Authors.
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


#include "lp_simplex.h"

#include <algorithm>
#include <cmath>

#include "errors.h"

namespace privpart {

namespace {
constexpr double kFeasTol = 1e-9;
constexpr double kOptTol = 1e-9;
constexpr double kPivotTol = 1e-9;
constexpr int kDegenerateRunBeforeBland = 50;
}  // namespace

int LinearProgram::AddVariable(double lo, double up, double cost) {
  if (!(lo <= up) || (std::isinf(lo) && std::isinf(up))) {
    Fail(ErrorCode::kInvalidArgument, "LP variable needs a finite bound");
  }
  lo_.push_back(lo);
  up_.push_back(up);
  cost_.push_back(cost);
  return num_variables() - 1;
}

void LinearProgram::AddRow(std::vector<std::pair<int, double>> coefficients,
                           double lo, double up) {
  for (const auto& [j, v] : coefficients) {
    if (j < 0 || j >= num_variables()) {
      Fail(ErrorCode::kInvalidArgument, "LP row references unknown variable");
    }
    (void)v;
  }
  if (!(lo <= up) || (std::isinf(lo) && std::isinf(up))) {
    Fail(ErrorCode::kInvalidArgument, "LP row needs a finite bound");
  }
  rows_.push_back({std::move(coefficients), lo, up});
}

// Tableau state. Columns: structural, one slack per row (A_i x - s_i = 0,
// s_i within the row bounds), then artificials.
struct SimplexSolver {
  explicit SimplexSolver(const LinearProgram& lp) : lp(lp) {}

  const LinearProgram& lp;
  int m = 0, n = 0, cols = 0;
  std::vector<std::vector<double>> tab;  // B^-1 [A | -I | art]
  std::vector<int> head;                 // basic variable per row
  std::vector<int> row_of;               // row per basic variable, else -1
  std::vector<double> x, lo, up, cost, reduced;
  std::vector<bool> artificial;
  int pivots = 0;

  void Setup() {
    m = lp.num_rows();
    n = lp.num_variables();
    x.assign(n + m, 0.0);
    lo = lp.lo_;
    up = lp.up_;
    for (const auto& row : lp.rows_) {
      lo.push_back(row.lo);
      up.push_back(row.up);
    }
    for (int j = 0; j < n; ++j) x[j] = std::isfinite(lo[j]) ? lo[j] : up[j];

    std::vector<std::vector<double>> dense(m, std::vector<double>(n, 0.0));
    std::vector<double> activity(m, 0.0);
    for (int i = 0; i < m; ++i) {
      for (const auto& [j, v] : lp.rows_[i].coefficients) {
        dense[i][j] += v;
        activity[i] += v * x[j];
      }
    }
    // Decide which rows need an artificial.
    std::vector<double> sigma(m, 0.0);
    int num_art = 0;
    for (int i = 0; i < m; ++i) {
      const double r = activity[i];
      if (r < lo[n + i] - kFeasTol) {
        x[n + i] = lo[n + i];
      } else if (r > up[n + i] + kFeasTol) {
        x[n + i] = up[n + i];
      } else {
        x[n + i] = r;
        continue;
      }
      sigma[i] = r - x[n + i] > 0 ? -1.0 : 1.0;
      ++num_art;
    }
    cols = n + m + num_art;
    tab.assign(m, std::vector<double>(cols, 0.0));
    head.assign(m, -1);
    row_of.assign(cols, -1);
    artificial.assign(cols, false);
    x.resize(cols, 0.0);
    lo.resize(cols, 0.0);
    up.resize(cols, kLpInfinity);
    int next_art = n + m;
    for (int i = 0; i < m; ++i) {
      auto& row = tab[i];
      if (sigma[i] == 0.0) {
        // Basic slack: s_i = A_i x, tableau row is -(A_i, -e_i).
        for (int j = 0; j < n; ++j) row[j] = -dense[i][j];
        row[n + i] = 1.0;
        head[i] = n + i;
      } else {
        const int a = next_art++;
        artificial[a] = true;
        for (int j = 0; j < n; ++j) row[j] = dense[i][j] / sigma[i];
        row[n + i] = -1.0 / sigma[i];
        row[a] = 1.0;
        head[i] = a;
        x[a] = std::abs(activity[i] - x[n + i]);
      }
      row_of[head[i]] = i;
    }
  }

  void PriceOut() {
    reduced = cost;
    for (int i = 0; i < m; ++i) {
      const double cb = cost[head[i]];
      if (cb == 0.0) continue;
      for (int j = 0; j < cols; ++j) reduced[j] -= cb * tab[i][j];
    }
  }

  // Direction +1/-1 if column j may enter, else 0.
  int Eligible(int j) const {
    if (row_of[j] >= 0) return 0;
    if (reduced[j] > kOptTol && x[j] < up[j] - kFeasTol) return 1;
    if (reduced[j] < -kOptTol && x[j] > lo[j] + kFeasTol) return -1;
    return 0;
  }

  void Pivot(int r, int j) {
    auto& prow = tab[r];
    const double inv = 1.0 / prow[j];
    std::vector<int> nz;
    for (int c = 0; c < cols; ++c) {
      if (prow[c] != 0.0) {
        prow[c] *= inv;
        nz.push_back(c);
      }
    }
    prow[j] = 1.0;
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      auto& row = tab[i];
      const double f = row[j];
      if (f == 0.0) continue;
      for (int c : nz) row[c] -= f * prow[c];
      row[j] = 0.0;
    }
    const double fd = reduced[j];
    if (fd != 0.0) {
      for (int c : nz) reduced[c] -= fd * prow[c];
      reduced[j] = 0.0;
    }
    row_of[head[r]] = -1;
    head[r] = j;
    row_of[j] = r;
    ++pivots;
  }

  // Runs the simplex on the current cost vector to optimality.
  void Optimize() {
    PriceOut();
    const long limit = 50000L + 20L * (m + cols);
    int degenerate = 0;
    bool bland = false;
    for (long it = 0;; ++it) {
      if (it > limit) Fail(ErrorCode::kInternal, "simplex iteration limit");
      int enter = -1, dir = 0;
      double best = 0.0;
      for (int j = 0; j < cols; ++j) {
        const int d = Eligible(j);
        if (d == 0) continue;
        if (bland) {
          enter = j;
          dir = d;
          break;
        }
        if (std::abs(reduced[j]) > best) {
          best = std::abs(reduced[j]);
          enter = j;
          dir = d;
        }
      }
      if (enter < 0) return;

      double theta = up[enter] - lo[enter];
      int leave = -1;
      double leave_mag = 0.0;
      for (int i = 0; i < m; ++i) {
        const double a = tab[i][enter];
        if (std::abs(a) <= kPivotTol) continue;
        const double rate = -a * dir;
        const int b = head[i];
        double limit_i;
        if (rate < 0) {
          limit_i = std::isinf(lo[b]) ? kLpInfinity : (x[b] - lo[b]) / -rate;
        } else {
          limit_i = std::isinf(up[b]) ? kLpInfinity : (up[b] - x[b]) / rate;
        }
        limit_i = std::max(0.0, limit_i);
        if (limit_i < theta - 1e-12) {
          theta = limit_i;
          leave = i;
          leave_mag = std::abs(a);
        } else if (leave >= 0 && limit_i <= theta + 1e-12 &&
                   (bland ? b < head[leave] : std::abs(a) > leave_mag)) {
          leave = i;
          leave_mag = std::abs(a);
        }
      }
      if (std::isinf(theta)) Fail(ErrorCode::kInternal, "LP is unbounded");

      const double delta = dir * theta;
      x[enter] += delta;
      for (int i = 0; i < m; ++i) {
        const double a = tab[i][enter];
        if (a != 0.0) x[head[i]] -= a * delta;
      }
      if (theta < 1e-12) {
        if (++degenerate > kDegenerateRunBeforeBland) bland = true;
      } else {
        degenerate = 0;
      }
      if (leave < 0) continue;  // bound flip
      const int b = head[leave];
      const double rate = -tab[leave][enter] * dir;
      x[b] = rate < 0 ? lo[b] : up[b];
      Pivot(leave, enter);
    }
  }

  LpSolution Run() {
    Setup();
    LpSolution sol;
    bool any_art = false;
    cost.assign(cols, 0.0);
    for (int j = 0; j < cols; ++j) {
      if (artificial[j]) {
        cost[j] = -1.0;
        any_art = true;
      }
    }
    if (any_art) {
      Optimize();
      double infeasibility = 0.0;
      for (int j = 0; j < cols; ++j) {
        if (artificial[j]) infeasibility += x[j];
      }
      if (infeasibility > 1e-7) {
        sol.status = LpStatus::kInfeasible;
        sol.pivots = pivots;
        return sol;
      }
      for (int i = 0; i < m; ++i) {
        if (!artificial[head[i]]) continue;
        for (int j = 0; j < n + m; ++j) {
          if (row_of[j] < 0 && std::abs(tab[i][j]) > 1e-7) {
            const int a = head[i];
            Pivot(i, j);
            x[a] = 0.0;
            break;
          }
        }
      }
      for (int j = 0; j < cols; ++j) {
        if (artificial[j]) {
          up[j] = 0.0;
          if (row_of[j] < 0) x[j] = 0.0;
        }
      }
    }
    cost.assign(cols, 0.0);
    for (int j = 0; j < n; ++j) cost[j] = lp.cost_[j];
    Optimize();

    sol.status = LpStatus::kOptimal;
    sol.x.assign(x.begin(), x.begin() + n);
    for (int j = 0; j < n; ++j) {
      sol.x[j] = std::clamp(sol.x[j], lo[j], up[j]);
      sol.objective += lp.cost_[j] * sol.x[j];
    }
    sol.pivots = pivots;
    return sol;
  }
};

LpSolution SolveLp(const LinearProgram& lp) {
  SimplexSolver solver(lp);
  return solver.Run();
}

}  // namespace privpart
