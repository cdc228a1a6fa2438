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


#include "relaxation.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>

#include "errors.h"
#include "lp_simplex.h"
#include "objective.h"

namespace privpart {

bool FractionalSolution::IsIntegral(double tol) const {
  return std::all_of(x_hat.begin(), x_hat.end(), [tol](double v) {
    return std::abs(v) <= tol || std::abs(v - 1.0) <= tol;
  });
}

FractionalSolution SolveLpRelaxation(const Instance& instance) {
  const DisclosureFamily family = instance.model().family;
  if (family != DisclosureFamily::kStep &&
      family != DisclosureFamily::kLinear) {
    Fail(ErrorCode::kInvalidArgument,
         "LP relaxation supports the step and linear families only, got " +
             std::string(FamilyName(family)));
  }
  const int num_d = instance.num_entries();
  const int k = instance.num_adversaries();
  const double inv_z = [&] {
    if (!(instance.normalizer() > 0.0)) {
      Fail(ErrorCode::kInvalidArgument, "utility normalizer is zero");
    }
    return 1.0 / instance.normalizer();
  }();
  const double lambda = instance.lambda();

  LinearProgram lp;
  for (int d = 0; d < num_d; ++d) {
    for (int a = 0; a < k; ++a) lp.AddVariable(0.0, 1.0, instance.weight(d, a) * inv_z);
  }
  auto var = [k](int d, int a) { return d * k + a; };
  for (int d = 0; d < num_d; ++d) {
    std::vector<std::pair<int, double>> row;
    for (int a = 0; a < k; ++a) row.emplace_back(var(d, a), 1.0);
    lp.AddRow(std::move(row), 1.0, instance.t());
  }

  const auto& props = instance.hypergraph().properties();
  if (family == DisclosureFamily::kStep) {
    for (const auto& prop : props) {
      for (int a = 0; a < k; ++a) {
        std::vector<std::pair<int, double>> row;
        for (int d : prop.members) row.emplace_back(var(d, a), 1.0);
        lp.AddRow(std::move(row), -kLpInfinity,
                  static_cast<double>(prop.members.size()) - 1.0);
      }
    }
  } else {
    // Epigraph variable for the aggregated disclosure.
    const int y = lp.AddVariable(0.0, 1.0, -lambda);
    if (instance.model().aggregation == Aggregation::kWorst) {
      for (const auto& prop : props) {
        for (int a = 0; a < k; ++a) {
          std::vector<std::pair<int, double>> row;
          for (size_t i = 0; i < prop.members.size(); ++i) {
            row.emplace_back(var(prop.members[i], a), prop.weights[i]);
          }
          row.emplace_back(y, -1.0);
          lp.AddRow(std::move(row), -kLpInfinity, 0.0);
        }
      }
    } else if (!props.empty()) {
      const double scale = 1.0 / static_cast<double>(props.size());
      for (int a = 0; a < k; ++a) {
        std::vector<double> coef(num_d, 0.0);
        for (const auto& prop : props) {
          for (size_t i = 0; i < prop.members.size(); ++i) {
            coef[prop.members[i]] += scale * prop.weights[i];
          }
        }
        std::vector<std::pair<int, double>> row;
        for (int d = 0; d < num_d; ++d) {
          if (coef[d] != 0.0) row.emplace_back(var(d, a), coef[d]);
        }
        row.emplace_back(y, -1.0);
        lp.AddRow(std::move(row), -kLpInfinity, 0.0);
      }
    }
  }

  const LpSolution sol = SolveLp(lp);
  if (sol.status == LpStatus::kInfeasible) {
    Fail(ErrorCode::kInfeasible,
         "LP relaxation is infeasible for t=" + std::to_string(instance.t()) +
             ", k=" + std::to_string(k));
  }
  FractionalSolution frac;
  frac.num_entries = num_d;
  frac.num_adversaries = k;
  frac.x_hat.assign(sol.x.begin(), sol.x.begin() + num_d * k);
  for (int d = 0; d < num_d; ++d) {
    for (int a = 0; a < k; ++a) {
      frac.utility += instance.weight(d, a) * inv_z * frac.at(d, a);
    }
  }
  frac.lp_objective = sol.objective + lambda * instance.tau_i();
  frac.pivots = sol.pivots;
  return frac;
}

void Repair(const Instance& instance, const FractionalSolution& frac,
            Assignment& assignment) {
  const int k = instance.num_adversaries();
  const int t = instance.t();
  std::vector<int> order(k);
  for (int d = 0; d < instance.num_entries(); ++d) {
    if (assignment.count(d) >= 1 && assignment.count(d) <= t) continue;
    // Adversaries by x_hat descending, lower id first on ties.
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return frac.at(d, x) > frac.at(d, y);
    });
    if (assignment.count(d) == 0) {
      assignment.Set(d, order[0], true);
      continue;
    }
    int kept = 0;
    for (int a : order) {
      if (!assignment.test(d, a)) continue;
      if (kept < t) {
        ++kept;
      } else {
        assignment.Set(d, a, false);
      }
    }
  }
}

Assignment RoundOnce(const Instance& instance, const FractionalSolution& frac,
                     Rng& rng, bool repair) {
  const int k = instance.num_adversaries();
  Assignment s(instance.num_entries(), k);
  for (int d = 0; d < instance.num_entries(); ++d) {
    for (int a = 0; a < k; ++a) {
      const double p = std::clamp(frac.at(d, a), 0.0, 1.0);
      if (Bernoulli(rng, p)) s.Set(d, a, true);
    }
  }
  if (repair) Repair(instance, frac, s);
  return s;
}

SolveResult RoundAndRepair(const Instance& instance,
                           const FractionalSolution& frac, int runs,
                           uint64_t seed) {
  if (runs < 1) Fail(ErrorCode::kInvalidArgument, "runs must be >= 1");
  if (frac.num_entries != instance.num_entries() ||
      frac.num_adversaries != instance.num_adversaries()) {
    Fail(ErrorCode::kInvalidArgument,
         "fractional solution does not match the instance");
  }
  const auto start = std::chrono::steady_clock::now();
  std::optional<Assignment> best;
  double best_value = 0.0;
  for (int run = 0; run < runs; ++run) {
    Rng rng = DeriveRng(seed, static_cast<uint64_t>(run));
    Assignment s = RoundOnce(instance, frac, rng, /*repair=*/true);
    const double value = TradeoffObjective(instance, s).value;
    if (!best || value > best_value) {
      best = std::move(s);
      best_value = value;
    }
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return MakeResult(instance, std::move(*best), "lp", runs, ms, seed);
}

}  // namespace privpart
