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


// TradeOff objective with the unassigned-entry penalty, DiscBudget
// feasibility, and SearchState, the incremental evaluator driven by the
// heuristics and the exact solver.

#ifndef PRIVPART_OBJECTIVE_H_
#define PRIVPART_OBJECTIVE_H_

#include "assignment.h"
#include "disclosure.h"
#include "instance.h"
#include "utility.h"

namespace privpart {

struct ObjectiveValue {
  double utility = 0.0;
  double disclosure = 0.0;
  int unassigned = 0;  // C
  double value = 0.0;  // utility + lambda (tau_I - disclosure) - C
};

ObjectiveValue MakeObjective(const Instance& instance, double utility,
                             double disclosure, int unassigned);

// Evaluated from scratch.
ObjectiveValue TradeoffObjective(const Instance& instance,
                                 const Assignment& assignment);

// Cardinality-feasible and f(S) < tau_I.
bool DiscBudgetFeasible(const Instance& instance, const Assignment& assignment,
                        double tau_i);

// Max-min form: min over adversaries of u + lambda (tau_I - f'_a).
double MaxMinObjective(const Instance& instance, const Assignment& assignment);

// Penalized objective of an assignment under incremental updates.
class SearchState {
 public:
  // With `verify` set, every Apply and ValueAfter is cross-checked against a
  // from-scratch evaluation and Error(kInternal) is raised on a mismatch
  // larger than 1e-9.
  SearchState(const Instance& instance, Assignment assignment,
              bool verify = false);

  const Instance& instance() const { return *instance_; }
  const Assignment& assignment() const { return tracker_.assignment(); }
  const DisclosureTracker& tracker() const { return tracker_; }

  double value() const { return value_; }
  ObjectiveValue objective() const;

  // Objective after `m`, leaving the state untouched.
  double ValueAfter(const Move& m) const;
  // Utility change and unassigned count after `m`.
  double UtilityDelta(const Move& m) const { return utility_.Delta(m); }
  int UnassignedAfter(const Move& m) const;

  void Apply(const Move& m);

 private:
  double Combine(double utility_sum, double disclosure, int unassigned) const;

  const Instance* instance_;
  AdditiveUtility utility_;
  DisclosureTracker tracker_;
  double weight_sum_ = 0.0;  // unnormalized utility
  double value_ = 0.0;
  bool verify_;
};

}  // namespace privpart

#endif  // PRIVPART_OBJECTIVE_H_
