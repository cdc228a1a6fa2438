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


// Dense bounded-variable primal simplex for small linear programs:
//   maximize c'x  subject to  row_lo <= A x <= row_up,  lo <= x <= up.
// Two phases: artificial variables only for rows violated at the starting
// vertex, then the real objective. Dantzig pricing, switching to Bland's
// rule after a run of degenerate pivots.

#ifndef PRIVPART_LP_SIMPLEX_H_
#define PRIVPART_LP_SIMPLEX_H_

#include <limits>
#include <utility>
#include <vector>

namespace privpart {

inline constexpr double kLpInfinity = std::numeric_limits<double>::infinity();

class LinearProgram {
 public:
  // Every variable needs at least one finite bound.
  int AddVariable(double lo, double up, double cost);
  // Sparse row; indices must refer to existing variables.
  void AddRow(std::vector<std::pair<int, double>> coefficients, double lo,
              double up);

  int num_variables() const { return static_cast<int>(cost_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }

 private:
  friend struct SimplexSolver;
  struct Row {
    std::vector<std::pair<int, double>> coefficients;
    double lo;
    double up;
  };
  std::vector<double> lo_, up_, cost_;
  std::vector<Row> rows_;
};

enum class LpStatus { kOptimal, kInfeasible };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;
  int pivots = 0;
};

// Throws Error(kInternal) if the iteration limit is hit or the program is
// unbounded (which bounded inputs rule out).
LpSolution SolveLp(const LinearProgram& lp);

}  // namespace privpart

#endif  // PRIVPART_LP_SIMPLEX_H_
