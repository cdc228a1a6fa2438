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


// Exact solvers for desk-scale instances: depth-first branch and bound over
// per-entry adversary subsets, and a plain enumerator used for verification.

#ifndef PRIVPART_EXACT_H_
#define PRIVPART_EXACT_H_

#include <optional>
#include <string_view>

#include "instance.h"
#include "result.h"

namespace privpart {

enum class Formulation { kTradeoff, kDiscBudget, kMaxMin };

std::string_view FormulationName(Formulation f);
Formulation ParseFormulation(std::string_view name);

// Search space limit: (t + 1) * |D| * log2(k) <= 40.
bool WithinSizeGuard(const Instance& instance);

// Optimal feasible assignment. TradeOff and max-min maximize their
// objectives; DiscBudget maximizes utility subject to f(S) < tau_I.
// Throws Error(kSizeGuard) beyond the size limit and Error(kInfeasible)
// when DiscBudget has no feasible assignment.
SolveResult SolveExact(const Instance& instance,
                       Formulation formulation = Formulation::kTradeoff);

struct EnumeratedOptimum {
  double value = 0.0;
  Assignment assignment;
};

// Visits every cardinality-feasible assignment with from-scratch evaluation.
// Returns nothing when DiscBudget is infeasible. Subject to the same size
// guard as SolveExact.
std::optional<EnumeratedOptimum> EnumerateOptimum(const Instance& instance,
                                                  Formulation formulation);

}  // namespace privpart

#endif  // PRIVPART_EXACT_H_
