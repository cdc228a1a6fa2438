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


// Oracle cross-checks on one instance: incremental versus from-scratch
// evaluation, branch and bound versus enumeration, and the ordering
// heuristic <= exact <= LP bound where each applies.

#ifndef PRIVPART_VERIFY_H_
#define PRIVPART_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "instance.h"

namespace privpart {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool passed() const;
};

// True when the step LP bounds the TradeOff optimum: worst aggregation and
// lambda = 1, where a leaking assignment scores at most lambda * tau_I.
bool LpBoundApplies(const Instance& instance);

VerifyReport VerifyInstance(const Instance& instance, uint64_t seed);

}  // namespace privpart

#endif  // PRIVPART_VERIFY_H_
