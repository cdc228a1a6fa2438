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


#include "utility.h"

#include "errors.h"

namespace privpart {

AdditiveUtility::AdditiveUtility(const Instance& instance)
    : instance_(&instance) {
  if (!(instance.normalizer() > 0.0)) {
    Fail(ErrorCode::kInvalidArgument,
         "utility normalizer is zero: every utility weight is 0");
  }
  inv_z_ = 1.0 / instance.normalizer();
}

double AdditiveUtility::Evaluate(const Assignment& assignment) const {
  double sum = 0.0;
  for (int d = 0; d < assignment.num_entries(); ++d) {
    for (int a = 0; a < assignment.num_adversaries(); ++a) {
      if (assignment.test(d, a)) sum += instance_->weight(d, a);
    }
  }
  return sum / instance_->normalizer();
}

double AdditiveUtility::Delta(const Move& m) const {
  switch (m.kind) {
    case Move::Kind::kAdd:
      return instance_->weight(m.entry, m.to) * inv_z_;
    case Move::Kind::kRemove:
      return -instance_->weight(m.entry, m.from) * inv_z_;
    case Move::Kind::kSwap:
      return (instance_->weight(m.entry, m.to) -
              instance_->weight(m.entry, m.from)) *
             inv_z_;
  }
  return 0.0;
}

double AdditiveUtility::Marginal(const Assignment& assignment,
                                 const Move& m) const {
  // Validates the move against the bits; the value is bit-independent.
  (void)ApplyMove(assignment, m);
  return Delta(m);
}

double AdversaryUtility(const Instance& instance, const Assignment& assignment,
                        int a) {
  double sum = 0.0;
  for (int d = 0; d < assignment.num_entries(); ++d) {
    if (assignment.test(d, a)) sum += instance.weight(d, a);
  }
  return sum;
}

double TotalUtility(const Instance& instance, const Assignment& assignment) {
  return AdditiveUtility(instance).Evaluate(assignment);
}

}  // namespace privpart
