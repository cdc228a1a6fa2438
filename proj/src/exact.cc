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


#include "exact.h"

#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <vector>

#include "disclosure.h"
#include "errors.h"
#include "objective.h"

namespace privpart {
namespace {

constexpr double kPruneSlack = 1e-12;

// Non-empty adversary subsets of size <= t, as bitmasks in ascending order.
std::vector<uint32_t> Subsets(int k, int t) {
  std::vector<uint32_t> out;
  for (uint32_t mask = 1; mask < (1u << k); ++mask) {
    if (std::popcount(mask) <= t) out.push_back(mask);
  }
  return out;
}

bool Monotone(DisclosureFamily family) {
  return family != DisclosureFamily::kCosine;
}

class BranchAndBound {
 public:
  BranchAndBound(const Instance& instance, Formulation formulation)
      : instance_(instance),
        formulation_(formulation),
        subsets_(Subsets(instance.num_adversaries(), instance.t())),
        state_(instance,
               Assignment(instance.num_entries(), instance.num_adversaries())),
        monotone_(Monotone(instance.model().family)) {
    // suffix_[d] = optimistic utility of entries d..|D|-1.
    suffix_.assign(instance.num_entries() + 1, 0.0);
    for (int d = instance.num_entries() - 1; d >= 0; --d) {
      suffix_[d] = suffix_[d + 1] +
                   TopTSum(instance.weights_of(d), instance.t()) /
                       instance.normalizer();
    }
  }

  void Run() { Visit(0); }
  bool found() const { return found_; }
  const Assignment& best() const { return best_; }
  int64_t nodes() const { return nodes_; }

 private:
  double Utility() const {
    const ObjectiveValue v = state_.objective();
    return v.utility;
  }

  double LeafValue() const {
    const ObjectiveValue v = state_.objective();
    switch (formulation_) {
      case Formulation::kTradeoff:
        return v.value;
      case Formulation::kDiscBudget:
        return v.utility;
      case Formulation::kMaxMin: {
        double worst = std::numeric_limits<double>::infinity();
        for (int a = 0; a < instance_.num_adversaries(); ++a) {
          worst = std::min(worst, v.utility + instance_.lambda() *
                                                  (instance_.tau_i() -
                                                   state_.tracker().adversary(a)));
        }
        return worst;
      }
    }
    return v.value;
  }

  double Bound(int d) const {
    const double f_lb = monotone_ ? state_.tracker().overall() : 0.0;
    const double u = Utility() + suffix_[d];
    if (formulation_ == Formulation::kDiscBudget) return u;
    return u + instance_.lambda() * (instance_.tau_i() - f_lb);
  }

  void Visit(int d) {
    ++nodes_;
    if (formulation_ == Formulation::kDiscBudget && monotone_ &&
        state_.tracker().overall() >= instance_.tau_i() + 1e-9) {
      return;
    }
    if (d == instance_.num_entries()) {
      // Feasibility is decided on a fresh evaluation; the strict inequality
      // must not depend on accumulated rounding.
      if (formulation_ == Formulation::kDiscBudget &&
          !DiscBudgetFeasible(instance_, state_.assignment(),
                              instance_.tau_i())) {
        return;
      }
      const double value = LeafValue();
      if (!found_ || value > best_value_) {
        found_ = true;
        best_value_ = value;
        best_ = state_.assignment();
      }
      return;
    }
    if (found_ && Bound(d) < best_value_ - kPruneSlack) return;
    const int k = instance_.num_adversaries();
    for (uint32_t mask : subsets_) {
      for (int a = 0; a < k; ++a) {
        if (mask & (1u << a)) state_.Apply(Move::Add(d, a));
      }
      Visit(d + 1);
      for (int a = 0; a < k; ++a) {
        if (mask & (1u << a)) state_.Apply(Move::Remove(d, a));
      }
    }
  }

  const Instance& instance_;
  Formulation formulation_;
  std::vector<uint32_t> subsets_;
  SearchState state_;
  bool monotone_;
  std::vector<double> suffix_;
  bool found_ = false;
  double best_value_ = 0.0;
  Assignment best_;
  int64_t nodes_ = 0;
};

void CheckSizeGuard(const Instance& instance) {
  if (!WithinSizeGuard(instance)) {
    Fail(ErrorCode::kSizeGuard,
         "instance too large for the exact solver: (t+1)*|D|*log2(k) = " +
             std::to_string((instance.t() + 1) * instance.num_entries() *
                            std::log2(instance.num_adversaries())) +
             " > 40");
  }
}

}  // namespace

std::string_view FormulationName(Formulation f) {
  switch (f) {
    case Formulation::kTradeoff:
      return "tradeoff";
    case Formulation::kDiscBudget:
      return "discbudget";
    case Formulation::kMaxMin:
      return "maxmin";
  }
  return "unknown";
}

Formulation ParseFormulation(std::string_view name) {
  for (auto f : {Formulation::kTradeoff, Formulation::kDiscBudget,
                 Formulation::kMaxMin}) {
    if (FormulationName(f) == name) return f;
  }
  Fail(ErrorCode::kParse, "unknown formulation '" + std::string(name) + "'");
}

bool WithinSizeGuard(const Instance& instance) {
  return (instance.t() + 1) * instance.num_entries() *
             std::log2(static_cast<double>(instance.num_adversaries())) <=
         40.0 + 1e-9;
}

SolveResult SolveExact(const Instance& instance, Formulation formulation) {
  CheckSizeGuard(instance);
  const auto start = std::chrono::steady_clock::now();
  BranchAndBound bb(instance, formulation);
  bb.Run();
  if (!bb.found()) {
    Fail(ErrorCode::kInfeasible,
         "no assignment satisfies f(S) < tau_I = " +
             std::to_string(instance.tau_i()));
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return MakeResult(instance, bb.best(), "ilp", bb.nodes(), ms, 0);
}

std::optional<EnumeratedOptimum> EnumerateOptimum(const Instance& instance,
                                                  Formulation formulation) {
  CheckSizeGuard(instance);
  const int num_d = instance.num_entries();
  const int k = instance.num_adversaries();
  const std::vector<uint32_t> subsets = Subsets(k, instance.t());
  std::vector<size_t> digit(num_d, 0);
  std::optional<EnumeratedOptimum> best;
  Assignment s(num_d, k);
  while (true) {
    s.Clear();
    for (int d = 0; d < num_d; ++d) {
      for (int a = 0; a < k; ++a) {
        if (subsets[digit[d]] & (1u << a)) s.Set(d, a, true);
      }
    }
    const ObjectiveValue v = TradeoffObjective(instance, s);
    std::optional<double> value;
    switch (formulation) {
      case Formulation::kTradeoff:
        value = v.value;
        break;
      case Formulation::kDiscBudget:
        if (v.disclosure < instance.tau_i()) value = v.utility;
        break;
      case Formulation::kMaxMin:
        value = MaxMinObjective(instance, s);
        break;
    }
    if (value && (!best || *value > best->value)) best = {*value, s};
    int d = num_d - 1;
    while (d >= 0 && ++digit[d] == subsets.size()) digit[d--] = 0;
    if (d < 0) break;
  }
  return best;
}

}  // namespace privpart
