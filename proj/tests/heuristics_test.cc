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


#include "heuristics.h"

#include <map>
#include <vector>

#include "errors.h"
#include "gtest/gtest.h"
#include "objective.h"
#include "oracle.h"
#include "rng.h"
#include "synth.h"
#include "test_util.h"

namespace privpart {
namespace {

std::vector<Candidate> Gains(std::vector<double> values) {
  std::vector<Candidate> out;
  for (size_t i = 0; i < values.size(); ++i) {
    out.push_back({Move::Add(static_cast<int>(i), 0), values[i]});
  }
  return out;
}

SearchParams Params(Strategy strategy, Scope scope, int n = 5, int r = 1,
                    uint64_t seed = 0) {
  SearchParams p;
  p.strategy = strategy;
  p.scope = scope;
  p.n = n;
  p.r = r;
  p.seed = seed;
  return p;
}

TEST(PickNextBestTest, GreedyTakesArgmax) {
  Rng rng(1);
  const auto c = Gains({0.3, 0.1, -0.2});
  const auto pick =
      PickNextBest(c, 0.0, Params(Strategy::kGreedy, Scope::kGlobal), rng);
  ASSERT_TRUE(pick);
  EXPECT_EQ(pick->entry, 0);
}

TEST(PickNextBestTest, GreedyTieKeepsEarliest) {
  Rng rng(1);
  const auto c = Gains({0.1, 0.3, 0.3});
  const auto pick =
      PickNextBest(c, 0.0, Params(Strategy::kGreedy, Scope::kGlobal), rng);
  EXPECT_EQ(pick->entry, 1);
}

TEST(PickNextBestTest, NoImprovementGivesNothing) {
  Rng rng(1);
  const auto c = Gains({0.0, -0.1, -0.2});
  for (auto strategy : {Strategy::kGreedy, Strategy::kGrasp}) {
    EXPECT_FALSE(
        PickNextBest(c, 0.0, Params(strategy, Scope::kGlobal), rng));
  }
  EXPECT_FALSE(PickNextBest({}, 0.0, Params(Strategy::kGrasp, Scope::kGlobal),
                            rng));
}

TEST(PickNextBestTest, GraspDrawsUniformlyFromTopN) {
  Rng rng(2);
  const auto c = Gains({0.1, 0.3, 0.2});
  std::map<int, int> hits;
  const int draws = 20000;
  for (int i = 0; i < draws; ++i) {
    const auto pick =
        PickNextBest(c, 0.0, Params(Strategy::kGrasp, Scope::kGlobal, 2), rng);
    ++hits[pick->entry];
  }
  EXPECT_EQ(hits.count(0), 0u);
  // Binomial(20000, 1/2) has sd ~71; allow 5 sd.
  EXPECT_NEAR(hits[1], draws / 2, 355);
  EXPECT_NEAR(hits[2], draws / 2, 355);
}

TEST(PickNextBestTest, GraspIgnoresNonImprovingEvenIfListShort) {
  Rng rng(3);
  const auto c = Gains({0.5, -0.5, -0.1});
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(PickNextBest(c, 0.0, Params(Strategy::kGrasp, Scope::kGlobal, 3),
                           rng)
                  ->entry,
              0);
  }
}

TEST(PickNextBestTest, GraspWithSingleCandidateLeavesRngUntouched) {
  Rng rng(4), copy(4);
  const auto c = Gains({0.5, -0.5});
  PickNextBest(c, 0.0, Params(Strategy::kGrasp, Scope::kGlobal, 3), rng);
  EXPECT_EQ(rng, copy);
}

TEST(ConstructTest, SingleEntryPicksBestAdversaryFirst) {
  InstanceData data;
  data.num_entries = 1;
  data.num_adversaries = 2;
  data.t = 2;
  data.utility_weights = {0.9, 0.1};
  const Instance inst = Instance::Validate(data);
  SearchState state(inst, Assignment(1, 2));
  Rng rng(0);
  SearchParams p = Params(Strategy::kGreedy, Scope::kGlobal);
  // Capture the first move by running with t = 1 first.
  InstanceData one = data;
  one.t = 1;
  const Instance inst1 = Instance::Validate(one);
  SearchState first(inst1, Assignment(1, 2));
  EXPECT_EQ(Construct(first, p, rng), 1);
  EXPECT_TRUE(first.assignment().test(0, 0));
  // With t = 2 the second pair adds 0.1 / Z and no disclosure.
  EXPECT_EQ(Construct(state, p, rng), 2);
  EXPECT_TRUE(state.assignment().test(0, 1));
  EXPECT_DOUBLE_EQ(state.value(), 1.0);
}

TEST(ConstructTest, GreedyNeverColocatesStepPair) {
  for (auto scope : {Scope::kGlobal, Scope::kMyopic}) {
    for (uint64_t seed = 0; seed < 20; ++seed) {
      const Instance inst =
          Instance::Validate(testing::TwoEntryData(DisclosureFamily::kStep));
      SearchState state(inst, Assignment(2, 2));
      Rng rng(seed);
      Construct(state, Params(Strategy::kGreedy, scope), rng);
      const Assignment& s = state.assignment();
      EXPECT_FALSE(s.test(0, 0) && s.test(1, 0));
      EXPECT_FALSE(s.test(0, 1) && s.test(1, 1));
      EXPECT_TRUE(s.IsFeasible(1));
    }
  }
}

TEST(ConstructTest, StopsWhenNothingImproves) {
  InstanceData data = testing::TwoEntryData(DisclosureFamily::kStep);
  data.t = 2;
  const Instance inst = Instance::Validate(data);
  SearchState state(inst, Assignment(2, 2));
  Rng rng(0);
  // Two moves assign both entries; a third would co-locate the pair.
  EXPECT_EQ(Construct(state, Params(Strategy::kGreedy, Scope::kGlobal), rng),
            2);
}

TEST(LocalSearchTest, TakesImprovingSwap) {
  InstanceData data;
  data.num_entries = 1;
  data.num_adversaries = 2;
  data.utility_weights = {0.5, 0.9};
  const Instance inst = Instance::Validate(data);
  Assignment start(1, 2);
  start.Set(0, 0, true);
  SearchState state(inst, start);
  Rng rng(0);
  EXPECT_EQ(LocalSearch(state, Params(Strategy::kGreedy, Scope::kGlobal), rng),
            1);
  EXPECT_TRUE(state.assignment().test(0, 1));
  EXPECT_FALSE(state.assignment().test(0, 0));
  EXPECT_DOUBLE_EQ(state.value(), 1.0);
}

TEST(LocalSearchTest, SingleEntryMovesCannotUnmixAStepPair) {
  // Both entries sit with their worse adversary, yet swapping either one
  // alone would complete the hyperedge at one adversary.
  const Instance inst =
      Instance::Validate(testing::TwoEntryData(DisclosureFamily::kStep));
  Assignment start(2, 2);
  start.Set(0, 1, true);
  start.Set(1, 0, true);
  SearchState state(inst, start);
  Rng rng(0);
  EXPECT_EQ(LocalSearch(state, Params(Strategy::kGreedy, Scope::kGlobal), rng),
            0);
  EXPECT_EQ(state.assignment(), start);
}

TEST(LocalSearchTest, LocalOptimumIsUnchanged) {
  const Instance inst =
      Instance::Validate(testing::TwoEntryData(DisclosureFamily::kStep));
  Assignment start(2, 2);
  start.Set(0, 0, true);
  start.Set(1, 1, true);
  SearchState state(inst, start);
  Rng rng(0);
  EXPECT_EQ(LocalSearch(state, Params(Strategy::kGreedy, Scope::kGlobal), rng),
            0);
  EXPECT_EQ(state.assignment(), start);
}

TEST(LocalSearchTest, NoAdditionAtCapacity) {
  // t = 1 and both adversaries would like the entry; the only moves are
  // removal and swap, neither of which helps.
  InstanceData data;
  data.num_entries = 1;
  data.num_adversaries = 2;
  data.utility_weights = {1.0, 1.0};
  const Instance inst = Instance::Validate(data);
  Assignment start(1, 2);
  start.Set(0, 0, true);
  SearchState state(inst, start);
  Rng rng(0);
  LocalSearch(state, Params(Strategy::kGreedy, Scope::kGlobal), rng);
  EXPECT_EQ(state.assignment().count(0), 1);
}

TEST(SolveTest, NoPropertiesGivesTopTAssignment) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    testing::RandomSpec spec;
    spec.num_entries = 10;
    spec.num_adversaries = 4;
    spec.t = UniformInt(rng, 1, 3);
    spec.num_properties = 0;
    const Instance inst = testing::RandomInstance(rng, spec);
    for (auto scope : {Scope::kGlobal, Scope::kMyopic}) {
      const SolveResult r = Solve(inst, Params(Strategy::kGreedy, scope));
      EXPECT_NEAR(r.objective.utility, 1.0, 1e-12);
      EXPECT_EQ(r.objective.disclosure, 0.0);
      EXPECT_TRUE(r.assignment.IsFeasible(spec.t));
    }
  }
}

TEST(SolveTest, AlgorithmNames) {
  EXPECT_EQ(AlgorithmName(Params(Strategy::kGreedy, Scope::kGlobal)), "greedy");
  EXPECT_EQ(AlgorithmName(Params(Strategy::kGrasp, Scope::kGlobal)), "grasp");
  EXPECT_EQ(AlgorithmName(Params(Strategy::kGreedy, Scope::kMyopic)),
            "greedyl");
  EXPECT_EQ(AlgorithmName(Params(Strategy::kGrasp, Scope::kMyopic)), "graspl");
}

TEST(SolveTest, RejectsBadParams) {
  const Instance inst =
      Instance::Validate(testing::TwoEntryData(DisclosureFamily::kStep));
  EXPECT_THROW(Solve(inst, Params(Strategy::kGrasp, Scope::kGlobal, 0)), Error);
  EXPECT_THROW(Solve(inst, Params(Strategy::kGrasp, Scope::kGlobal, 2, 0)),
               Error);
}

Instance SmallSynth(uint64_t seed, DisclosureFamily family, Aggregation agg,
                    int k, int t, double lambda) {
  SynthConfig cfg;
  cfg.num_entries = 30;
  cfg.num_properties = 6;
  cfg.num_adversaries = k;
  cfg.t = t;
  cfg.lambda = lambda;
  cfg.model = {family, agg};
  cfg.seed = seed;
  return GenerateInstance(cfg);
}

TEST(SolvePropertyTest, FeasibleMonotoneAndDeterministic) {
  for (uint64_t seed = 0; seed < 8; ++seed) {
    for (auto family : {DisclosureFamily::kStep, DisclosureFamily::kLinear,
                        DisclosureFamily::kQuadratic}) {
      const Instance inst =
          SmallSynth(seed, family, seed % 2 ? Aggregation::kWorst
                                            : Aggregation::kAverage,
                     3, 1 + seed % 3, seed % 3 ? 1.0 : 0.5);
      for (auto strategy : {Strategy::kGreedy, Strategy::kGrasp}) {
        for (auto scope : {Scope::kGlobal, Scope::kMyopic}) {
          SearchParams p = Params(strategy, scope, 3, 2, seed);
          p.verify = true;
          const SolveResult a = Solve(inst, p);
          ASSERT_TRUE(a.assignment.IsFeasible(inst.t()));
          EXPECT_EQ(a.objective.unassigned, 0);
          const SolveResult b = Solve(inst, p);
          EXPECT_EQ(a.assignment, b.assignment);
          EXPECT_EQ(a.objective.value, b.objective.value);
          EXPECT_EQ(a.iterations, b.iterations);

          // Phase-by-phase monotonicity for a single run.
          Rng rng = DeriveRng(seed, 0);
          SearchState state(inst, Assignment(inst.num_entries(),
                                             inst.num_adversaries()));
          const double empty = state.value();
          Construct(state, p, rng);
          const double built = state.value();
          LocalSearch(state, p, rng);
          EXPECT_GE(built, empty);
          EXPECT_GE(state.value(), built);
        }
      }
    }
  }
}

TEST(SolvePropertyTest, GraspWithListOneEqualsGreedy) {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = SmallSynth(seed, DisclosureFamily::kLinear,
                                     Aggregation::kAverage, 3, 2, 1.0);
    for (auto scope : {Scope::kGlobal, Scope::kMyopic}) {
      const SolveResult greedy =
          Solve(inst, Params(Strategy::kGreedy, scope, 5, 3, seed));
      const SolveResult grasp =
          Solve(inst, Params(Strategy::kGrasp, scope, 1, 3, seed));
      EXPECT_EQ(greedy.assignment, grasp.assignment);
      EXPECT_EQ(greedy.objective.value, grasp.objective.value);
    }
  }
}

TEST(SolvePropertyTest, ResultMatchesOracle) {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    testing::RandomSpec spec;
    spec.family = static_cast<DisclosureFamily>(trial % 4);
    spec.num_entries = UniformInt(rng, 2, 8);
    spec.num_adversaries = UniformInt(rng, 2, 3);
    spec.t = UniformInt(rng, 1, 2);
    spec.num_properties = 2;
    const Instance inst = testing::RandomInstance(rng, spec);
    const SolveResult r =
        Solve(inst, Params(Strategy::kGrasp, Scope::kGlobal, 3, 2, trial));
    const auto masks = oracle::FromAssignment(r.assignment);
    EXPECT_NEAR(r.objective.value, oracle::Objective(inst, masks), 1e-9);
    EXPECT_NEAR(r.objective.utility, oracle::Utility(inst, masks), 1e-9);
    EXPECT_NEAR(r.objective.disclosure, oracle::Disclosure(inst, masks), 1e-9);
    ASSERT_EQ(r.per_property_disclosure.size(),
              static_cast<size_t>(inst.num_properties()));
  }
}

TEST(RandPlusTest, SamplesProportionallyToWeight) {
  InstanceData data;
  data.num_entries = 1;
  data.num_adversaries = 2;
  data.utility_weights = {0.9, 0.1};
  const Instance inst = Instance::Validate(data);
  int hits = 0;
  const int trials = 5000;
  for (int seed = 0; seed < trials; ++seed) {
    hits += RandPlus(inst, 1, seed).assignment.test(0, 0);
  }
  // sd = sqrt(5000 * 0.09) ~ 21.
  EXPECT_NEAR(hits, 0.9 * trials, 110);
}

TEST(RandPlusTest, TEqualsKAssignsEverything) {
  InstanceData data = testing::TwoEntryData(DisclosureFamily::kStep);
  data.t = 2;
  const Instance inst = Instance::Validate(data);
  const SolveResult r = RandPlus(inst, 3, 1);
  for (int d = 0; d < 2; ++d) EXPECT_EQ(r.assignment.count(d), 2);
  EXPECT_EQ(r.algorithm, "rand+");
}

TEST(RandPlusTest, ZeroRowFallsBackToUniform) {
  InstanceData data;
  data.num_entries = 2;
  data.num_adversaries = 3;
  data.t = 2;
  data.utility_weights = {0, 0, 0, 1, 1, 1};
  const Instance inst = Instance::Validate(data);
  std::vector<int> hits(3, 0);
  for (int seed = 0; seed < 600; ++seed) {
    const SolveResult r = RandPlus(inst, 1, seed);
    ASSERT_EQ(r.assignment.count(0), 2);
    for (int a = 0; a < 3; ++a) hits[a] += r.assignment.test(0, a);
  }
  for (int a = 0; a < 3; ++a) EXPECT_NEAR(hits[a], 400, 80);
}

TEST(RandPlusTest, DeterministicAndFeasible) {
  const Instance inst = SmallSynth(3, DisclosureFamily::kLinear,
                                   Aggregation::kAverage, 4, 2, 1.0);
  const SolveResult a = RandPlus(inst, 20, 77);
  const SolveResult b = RandPlus(inst, 20, 77);
  EXPECT_EQ(a.assignment, b.assignment);
  for (int d = 0; d < inst.num_entries(); ++d) {
    EXPECT_EQ(a.assignment.count(d), 2);
  }
  EXPECT_THROW(RandPlus(inst, 0, 1), Error);
}

}  // namespace
}  // namespace privpart
