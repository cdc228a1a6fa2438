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


#include "verify.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "errors.h"
#include "exact.h"
#include "heuristics.h"
#include "relaxation.h"

namespace privpart {
namespace {

constexpr double kTol = 1e-9;

std::string Fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.passed; });
}

bool LpBoundApplies(const Instance& instance) {
  const auto family = instance.model().family;
  if (family == DisclosureFamily::kLinear) return true;
  return family == DisclosureFamily::kStep &&
         instance.model().aggregation == Aggregation::kWorst &&
         instance.lambda() == 1.0;
}

VerifyReport VerifyInstance(const Instance& instance, uint64_t seed) {
  VerifyReport report;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  double best_heuristic = -1e300;
  for (auto strategy : {Strategy::kGreedy, Strategy::kGrasp}) {
    for (auto scope : {Scope::kGlobal, Scope::kMyopic}) {
      SearchParams params;
      params.strategy = strategy;
      params.scope = scope;
      params.n = 3;
      params.r = 2;
      params.seed = seed;
      params.verify = true;
      const std::string name = AlgorithmName(params);
      try {
        const SolveResult r = Solve(instance, params);
        add(name + ": incremental evaluation", true, "agrees to 1e-9");
        add(name + ": cardinality", r.assignment.IsFeasible(instance.t()),
            "1 <= |A_d| <= " + std::to_string(instance.t()));
        best_heuristic = std::max(best_heuristic, r.objective.value);
      } catch (const Error& e) {
        add(name + ": incremental evaluation", false, e.what());
      }
    }
  }

  if (!WithinSizeGuard(instance)) {
    add("exact solver", true, "skipped: beyond size limit");
    return report;
  }
  const SolveResult exact = SolveExact(instance, Formulation::kTradeoff);
  const auto enumerated = EnumerateOptimum(instance, Formulation::kTradeoff);
  add("branch and bound = enumeration",
      std::abs(exact.objective.value - enumerated->value) <= 1e-12,
      Fmt(exact.objective.value) + " vs " + Fmt(enumerated->value));
  add("heuristic <= exact", best_heuristic <= exact.objective.value + kTol,
      Fmt(best_heuristic) + " <= " + Fmt(exact.objective.value));

  const auto family = instance.model().family;
  if (family == DisclosureFamily::kStep || family == DisclosureFamily::kLinear) {
    if (!LpBoundApplies(instance)) {
      add("exact <= LP", true, "skipped: step LP is not a bound here");
    } else {
      try {
        const FractionalSolution frac = SolveLpRelaxation(instance);
        add("exact <= LP", exact.objective.value <= frac.lp_objective + kTol,
            Fmt(exact.objective.value) + " <= " + Fmt(frac.lp_objective));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kInfeasible) throw;
        add("exact <= LP", true, "skipped: LP infeasible");
      }
    }
  }
  return report;
}

}  // namespace privpart
