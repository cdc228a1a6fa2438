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


#include "result.h"

#include <utility>

#include "disclosure.h"

namespace privpart {

SolveResult MakeResult(const Instance& instance, Assignment assignment,
                       std::string algorithm, int64_t iterations,
                       double wall_ms, uint64_t seed) {
  SolveResult r;
  const DisclosureVector v = ComputeDisclosure(instance, assignment);
  r.objective = MakeObjective(instance, TotalUtility(instance, assignment),
                              AggregateDisclosure(v, instance.model().aggregation),
                              assignment.unassigned());
  r.per_property_disclosure = PerPropertyMax(v);
  r.algorithm = std::move(algorithm);
  r.assignment = std::move(assignment);
  r.iterations = iterations;
  r.wall_ms = wall_ms;
  r.seed_used = seed;
  return r;
}

}  // namespace privpart
