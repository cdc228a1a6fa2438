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

#include <vector>

#include "errors.h"
#include "gtest/gtest.h"
#include "oracle.h"
#include "rng.h"
#include "test_util.h"
#include "utility.h"

namespace privpart {
namespace {

Instance TwoEntry(DisclosureFamily family, int t = 1) {
  InstanceData data = testing::TwoEntryData(family);
  data.t = t;
  return Instance::Validate(data);
}

Assignment Assign(int num_d, int k, std::vector<std::pair<int, int>> cells) {
  Assignment s(num_d, k);
  for (auto [d, a] : cells) s.Set(d, a, true);
  return s;
}

TEST(AdversaryUtilityTest, SpecExamples) {
  const Instance inst = TwoEntry(DisclosureFamily::kLinear);
  EXPECT_DOUBLE_EQ(AdversaryUtility(inst, Assign(2, 2, {{0, 0}}), 0), 0.9);
  EXPECT_EQ(AdversaryUtility(inst, Assignment(2, 2), 0), 0.0);
  EXPECT_DOUBLE_EQ(AdversaryUtility(inst, Assign(2, 2, {{0, 0}, {1, 0}}), 0),
                   1.0);
}

TEST(TotalUtilityTest, SpecExamples) {
  const Instance inst = TwoEntry(DisclosureFamily::kLinear);
  EXPECT_DOUBLE_EQ(inst.normalizer(), 1.7);
  EXPECT_DOUBLE_EQ(TotalUtility(inst, Assign(2, 2, {{0, 0}, {1, 1}})), 1.0);
  EXPECT_NEAR(TotalUtility(inst, Assign(2, 2, {{0, 1}, {1, 0}})), 0.2 / 1.7,
              1e-15);
  EXPECT_NEAR(TotalUtility(inst, Assign(2, 2, {{0, 1}, {1, 0}})), 0.1176,
              1e-4);
  const Instance t2 = TwoEntry(DisclosureFamily::kLinear, 2);
  EXPECT_DOUBLE_EQ(t2.normalizer(), 1.9);
  EXPECT_DOUBLE_EQ(
      TotalUtility(t2, Assign(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})), 1.0);
}

TEST(TotalUtilityTest, ZeroNormalizerIsAnError) {
  InstanceData data = testing::TwoEntryData(DisclosureFamily::kLinear);
  data.utility_weights.assign(4, 0.0);
  const Instance inst = Instance::Validate(data);
  EXPECT_THROW(TotalUtility(inst, Assignment(2, 2)), Error);
  EXPECT_THROW(AdditiveUtility u(inst), Error);
}

TEST(TotalUtilityTest, AtMostOneOnEveryFeasibleAssignment) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    testing::RandomSpec spec;
    spec.num_entries = UniformInt(rng, 1, 5);
    spec.num_adversaries = UniformInt(rng, 2, 3);
    spec.t = UniformInt(rng, 1, 2);
    spec.num_properties = 1;
    const Instance inst = testing::RandomInstance(rng, spec);
    double best = 0.0;
    oracle::ForEachFeasible(inst, [&](const oracle::Masks& s) {
      const double u = TotalUtility(inst, oracle::ToAssignment(s, spec.num_adversaries));
      ASSERT_LE(u, 1.0 + 1e-12);
      best = std::max(best, u);
    });
    EXPECT_NEAR(best, 1.0, 1e-12);
  }
}

TEST(AdditiveUtilityTest, MarginalsAreConstantAndNonNegative) {
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    testing::RandomSpec spec;
    spec.num_entries = 6;
    spec.num_adversaries = 3;
    const Instance inst = testing::RandomInstance(rng, spec);
    const AdditiveUtility u(inst);
    Assignment small(6, 3), large(6, 3);
    const int d = UniformInt(rng, 0, 5), a = UniformInt(rng, 0, 2);
    for (int e = 0; e < 6; ++e) {
      for (int b = 0; b < 3; ++b) {
        if (e == d && b == a) continue;
        const bool in_small = Bernoulli(rng, 0.3);
        if (in_small) small.Set(e, b, true);
        if (in_small || Bernoulli(rng, 0.5)) large.Set(e, b, true);
      }
    }
    const Move add = Move::Add(d, a);
    const double gain_small = u.Marginal(small, add);
    const double gain_large = u.Marginal(large, add);
    EXPECT_GE(gain_small, 0.0);
    EXPECT_NEAR(gain_small, gain_large, 1e-15);
    EXPECT_NEAR(gain_small,
                u.Evaluate(ApplyMove(small, add)) - u.Evaluate(small), 1e-12);
    EXPECT_EQ(u.Delta(add), gain_small);
  }
}

TEST(AdditiveUtilityTest, MarginalRejectsInconsistentMove) {
  const Instance inst = TwoEntry(DisclosureFamily::kLinear);
  const AdditiveUtility u(inst);
  EXPECT_THROW(u.Marginal(Assignment(2, 2), Move::Remove(0, 0)), Error);
}

TEST(TradeoffObjectiveTest, MakeObjectiveExamples) {
  const Instance inst = TwoEntry(DisclosureFamily::kLinear);
  EXPECT_DOUBLE_EQ(MakeObjective(inst, 1.0, 0.0, 0).value, 1.0);
  EXPECT_NEAR(MakeObjective(inst, 0.5294, 0.0, 1).value, -0.4706, 1e-12);
  EXPECT_NEAR(MakeObjective(inst, 0.8, 0.3, 0).value, 0.5, 1e-12);
}

TEST(TradeoffObjectiveTest, SplitAssignmentScoresOne) {
  const Instance inst = TwoEntry(DisclosureFamily::kStep);
  const auto v = TradeoffObjective(inst, Assign(2, 2, {{0, 0}, {1, 1}}));
  EXPECT_DOUBLE_EQ(v.value, 1.0);
  EXPECT_EQ(v.unassigned, 0);
  EXPECT_EQ(v.disclosure, 0.0);
}

TEST(TradeoffObjectiveTest, UnassignedEntryCostsOne) {
  const Instance inst = TwoEntry(DisclosureFamily::kStep);
  const auto v = TradeoffObjective(inst, Assign(2, 2, {{0, 0}}));
  EXPECT_NEAR(v.value, 0.9 / 1.7 - 1.0, 1e-12);
  EXPECT_NEAR(v.value, -0.4706, 1e-4);
}

TEST(DiscBudgetFeasibleTest, SpecExamples) {
  const Instance step = TwoEntry(DisclosureFamily::kStep);
  EXPECT_TRUE(DiscBudgetFeasible(step, Assign(2, 2, {{0, 0}, {1, 1}}), 0.5));
  EXPECT_FALSE(DiscBudgetFeasible(step, Assign(2, 2, {{0, 0}, {1, 0}}), 1.0));
  EXPECT_FALSE(DiscBudgetFeasible(step, Assign(2, 2, {{0, 0}}), 1.0));
}

TEST(MaxMinObjectiveTest, TakesWorstAdversary) {
  InstanceData data = testing::TwoEntryData(DisclosureFamily::kLinear);
  data.lambda = 0.5;
  const Instance inst = Instance::Validate(data);
  const Assignment s = Assign(2, 2, {{0, 0}, {1, 1}});
  // Each adversary holds half of the property.
  EXPECT_NEAR(MaxMinObjective(inst, s), 1.0 - 0.5 * 0.5, 1e-12);
  const Assignment both = Assign(2, 2, {{0, 0}, {1, 0}});
  const double u = TotalUtility(inst, both);
  EXPECT_NEAR(MaxMinObjective(inst, both), u - 0.5, 1e-12);
}

TEST(ObjectivePropertyTest, RemovingOnlyAssignmentNeverHelps) {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    testing::RandomSpec spec;
    spec.family = static_cast<DisclosureFamily>(UniformInt(rng, 0, 3));
    spec.aggregation = Bernoulli(rng, 0.5) ? Aggregation::kWorst
                                           : Aggregation::kAverage;
    spec.num_entries = UniformInt(rng, 2, 8);
    spec.num_adversaries = UniformInt(rng, 2, 3);
    spec.num_properties = 3;
    spec.lambda = UniformReal(rng, 0.0, 1.0);
    spec.tau_i = UniformReal(rng, 0.0, 1.0);
    const Instance inst = testing::RandomInstance(rng, spec);
    Assignment s(spec.num_entries, spec.num_adversaries);
    for (int d = 0; d < spec.num_entries; ++d) {
      s.Set(d, UniformInt(rng, 0, spec.num_adversaries - 1), true);
    }
    const int d = UniformInt(rng, 0, spec.num_entries - 1);
    const Move remove = Move::Remove(d, s.adversaries_of(d)[0]);
    EXPECT_LE(TradeoffObjective(inst, ApplyMove(s, remove)).value,
              TradeoffObjective(inst, s).value + 1e-12);
  }
}

TEST(ObjectivePropertyTest, RecomputableFromParts) {
  Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    testing::RandomSpec spec;
    spec.lambda = UniformReal(rng, 0.0, 1.0);
    spec.tau_i = UniformReal(rng, 0.0, 1.0);
    const Instance inst = testing::RandomInstance(rng, spec);
    Assignment s(spec.num_entries, spec.num_adversaries);
    for (int d = 0; d < spec.num_entries; ++d) {
      if (Bernoulli(rng, 0.8)) s.Set(d, UniformInt(rng, 0, 1), true);
    }
    const auto v = TradeoffObjective(inst, s);
    EXPECT_DOUBLE_EQ(v.value, MakeObjective(inst, v.utility, v.disclosure,
                                            v.unassigned).value);
    EXPECT_NEAR(v.value, oracle::Objective(inst, oracle::FromAssignment(s)),
                1e-12);
  }
}

TEST(SearchStateTest, IncrementalValuesTrackOracle) {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    testing::RandomSpec spec;
    spec.family = static_cast<DisclosureFamily>(trial % 4);
    spec.aggregation = trial % 8 < 4 ? Aggregation::kWorst
                                     : Aggregation::kAverage;
    spec.num_entries = UniformInt(rng, 3, 8);
    spec.num_adversaries = UniformInt(rng, 2, 4);
    spec.t = UniformInt(rng, 1, 2);
    spec.num_properties = 3;
    spec.lambda = UniformReal(rng, 0.0, 1.0);
    const Instance inst = testing::RandomInstance(rng, spec);
    SearchState state(inst, Assignment(spec.num_entries, spec.num_adversaries),
                      /*verify=*/true);
    for (int step = 0; step < 40; ++step) {
      const int d = UniformInt(rng, 0, spec.num_entries - 1);
      const int a = UniformInt(rng, 0, spec.num_adversaries - 1);
      const Move m = state.assignment().test(d, a) ? Move::Remove(d, a)
                                                   : Move::Add(d, a);
      const double predicted = state.ValueAfter(m);
      state.Apply(m);
      ASSERT_NEAR(state.value(), predicted, 1e-12);
      ASSERT_NEAR(state.value(),
                  oracle::Objective(inst,
                                    oracle::FromAssignment(state.assignment())),
                  1e-9);
    }
  }
}

}  // namespace
}  // namespace privpart
