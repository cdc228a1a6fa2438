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


#ifndef PRIVPART_RESULT_H_
#define PRIVPART_RESULT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "assignment.h"
#include "instance.h"
#include "objective.h"

namespace privpart {

struct SolveResult {
  std::string algorithm;
  Assignment assignment;
  ObjectiveValue objective;
  // max over adversaries of f_a[p], per property.
  std::vector<double> per_property_disclosure;
  int64_t iterations = 0;
  double wall_ms = 0.0;
  uint64_t seed_used = 0;
};

// Evaluates `assignment` from scratch and packages it.
SolveResult MakeResult(const Instance& instance, Assignment assignment,
                       std::string algorithm, int64_t iterations,
                       double wall_ms, uint64_t seed);

}  // namespace privpart

#endif  // PRIVPART_RESULT_H_
