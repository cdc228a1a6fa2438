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


#ifndef PRIVPART_UTILITY_H_
#define PRIVPART_UTILITY_H_

#include "assignment.h"
#include "instance.h"

namespace privpart {

// Utility evaluator contract. Implementations must be nondecreasing and
// submodular in the set of published (entry, adversary) pairs.
class UtilityEvaluator {
 public:
  virtual ~UtilityEvaluator() = default;
  // Normalized total utility of `assignment`.
  virtual double Evaluate(const Assignment& assignment) const = 0;
  // Change in Evaluate() caused by applying `m` to `assignment`.
  virtual double Marginal(const Assignment& assignment,
                          const Move& m) const = 0;
};

// Sum of w_da over published pairs, divided by the top-t normalizer Z.
class AdditiveUtility final : public UtilityEvaluator {
 public:
  // Throws Error(kInvalidArgument) when Z = 0.
  explicit AdditiveUtility(const Instance& instance);

  double Evaluate(const Assignment& assignment) const override;
  double Marginal(const Assignment& assignment, const Move& m) const override;
  // Marginal that ignores the current bits; valid for consistent moves.
  double Delta(const Move& m) const;

 private:
  const Instance* instance_;
  double inv_z_;
};

// Unnormalized u_a(S_a) = sum_d w_da x_da.
double AdversaryUtility(const Instance& instance, const Assignment& assignment,
                        int a);
// (sum_a u_a) / Z. Throws Error(kInvalidArgument) when Z = 0.
double TotalUtility(const Instance& instance, const Assignment& assignment);

}  // namespace privpart

#endif  // PRIVPART_UTILITY_H_
