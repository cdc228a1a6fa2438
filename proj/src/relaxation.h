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


// LP relaxation of the step and linear formulations, independent randomized
// rounding, and the cardinality repair pass.

#ifndef PRIVPART_RELAXATION_H_
#define PRIVPART_RELAXATION_H_

#include <cstdint>
#include <vector>

#include "assignment.h"
#include "instance.h"
#include "result.h"
#include "rng.h"

namespace privpart {

struct FractionalSolution {
  int num_entries = 0;
  int num_adversaries = 0;
  std::vector<double> x_hat;  // row-major |D| x k, in [0,1]
  // Optimal LP value, including the constant lambda * tau_I.
  double lp_objective = 0.0;
  // Fractional utility part of lp_objective.
  double utility = 0.0;
  int pivots = 0;

  double at(int d, int a) const {
    return x_hat[static_cast<size_t>(d) * num_adversaries + a];
  }
  bool IsIntegral(double tol = 1e-9) const;
};

// Step family: 1 <= sum_a x_da <= t, and no hyperedge entirely inside one
// adversary (sum_{d in D_p} x_da <= |D_p| - 1). Linear family: an epigraph
// variable bounds the aggregated disclosure of every adversary.
// Throws Error(kInvalidArgument) for other families and Error(kInfeasible)
// when the constraints admit no solution.
FractionalSolution SolveLpRelaxation(const Instance& instance);

// One independent Bernoulli(x_hat) draw per cell. With `repair`, an empty
// row gets its largest-x_hat adversary and a row above t keeps its t largest
// (ties favour the lower adversary id).
Assignment RoundOnce(const Instance& instance, const FractionalSolution& frac,
                     Rng& rng, bool repair);

// Repair pass on an arbitrary 0/1 assignment.
void Repair(const Instance& instance, const FractionalSolution& frac,
            Assignment& assignment);

// Best of `runs` repaired roundings by TradeOff objective.
SolveResult RoundAndRepair(const Instance& instance,
                           const FractionalSolution& frac, int runs,
                           uint64_t seed);

}  // namespace privpart

#endif  // PRIVPART_RELAXATION_H_
