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


#include "objective.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "errors.h"

namespace privpart {
namespace {

constexpr double kVerifyTolerance = 1e-9;

void CheckClose(const char* what, double incremental, double exact) {
  if (std::abs(incremental - exact) > kVerifyTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "incremental " << what << " " << incremental
       << " disagrees with recomputation " << exact;
    Fail(ErrorCode::kInternal, os.str());
  }
}

}  // namespace

ObjectiveValue MakeObjective(const Instance& instance, double utility,
                             double disclosure, int unassigned) {
  ObjectiveValue v;
  v.utility = utility;
  v.disclosure = disclosure;
  v.unassigned = unassigned;
  v.value = utility + instance.lambda() * (instance.tau_i() - disclosure) -
            unassigned;
  return v;
}

ObjectiveValue TradeoffObjective(const Instance& instance,
                                 const Assignment& assignment) {
  const double f = AggregateDisclosure(ComputeDisclosure(instance, assignment),
                                       instance.model().aggregation);
  return MakeObjective(instance, TotalUtility(instance, assignment), f,
                       assignment.unassigned());
}

bool DiscBudgetFeasible(const Instance& instance, const Assignment& assignment,
                        double tau_i) {
  if (!assignment.IsFeasible(instance.t())) return false;
  const double f = AggregateDisclosure(ComputeDisclosure(instance, assignment),
                                       instance.model().aggregation);
  return f < tau_i;
}

double MaxMinObjective(const Instance& instance, const Assignment& assignment) {
  const double u = TotalUtility(instance, assignment);
  const DisclosureVector v = ComputeDisclosure(instance, assignment);
  double worst = std::numeric_limits<double>::infinity();
  for (int a = 0; a < instance.num_adversaries(); ++a) {
    const double fa = AdversaryDisclosure(v.row(a), instance.model().aggregation);
    worst = std::min(worst, u + instance.lambda() * (instance.tau_i() - fa));
  }
  return worst - assignment.unassigned();
}

SearchState::SearchState(const Instance& instance, Assignment assignment,
                         bool verify)
    : instance_(&instance),
      utility_(instance),
      tracker_(instance, assignment),
      verify_(verify) {
  for (int d = 0; d < assignment.num_entries(); ++d) {
    for (int a = 0; a < assignment.num_adversaries(); ++a) {
      if (assignment.test(d, a)) weight_sum_ += instance.weight(d, a);
    }
  }
  value_ = Combine(weight_sum_, tracker_.overall(), assignment.unassigned());
  if (verify_) CheckClose("objective", value_, objective().value);
}

double SearchState::Combine(double utility_sum, double disclosure,
                            int unassigned) const {
  return utility_sum / instance_->normalizer() +
         instance_->lambda() * (instance_->tau_i() - disclosure) - unassigned;
}

ObjectiveValue SearchState::objective() const {
  return MakeObjective(*instance_, weight_sum_ / instance_->normalizer(),
                       tracker_.overall(), assignment().unassigned());
}

int SearchState::UnassignedAfter(const Move& m) const {
  const Assignment& s = assignment();
  int c = s.unassigned();
  if (m.kind == Move::Kind::kAdd && s.count(m.entry) == 0) --c;
  if (m.kind == Move::Kind::kRemove && s.count(m.entry) == 1) ++c;
  return c;
}

double SearchState::ValueAfter(const Move& m) const {
  const double utility_sum =
      weight_sum_ + utility_.Delta(m) * instance_->normalizer();
  const double f = tracker_.OverallAfter(m);
  const double g = Combine(utility_sum, f, UnassignedAfter(m));
  if (verify_) {
    CheckClose("objective",
               g, TradeoffObjective(*instance_, ApplyMove(assignment(), m)).value);
  }
  return g;
}

void SearchState::Apply(const Move& m) {
  tracker_.Apply(m);  // validates the move before any bookkeeping
  switch (m.kind) {
    case Move::Kind::kAdd:
      weight_sum_ += instance_->weight(m.entry, m.to);
      break;
    case Move::Kind::kRemove:
      weight_sum_ -= instance_->weight(m.entry, m.from);
      break;
    case Move::Kind::kSwap:
      weight_sum_ += instance_->weight(m.entry, m.to) -
                     instance_->weight(m.entry, m.from);
      break;
  }
  value_ = Combine(weight_sum_, tracker_.overall(), assignment().unassigned());
  if (verify_) {
    CheckClose("objective", value_,
               TradeoffObjective(*instance_, assignment()).value);
  }
}

}  // namespace privpart
