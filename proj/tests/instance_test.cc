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


#include "instance.h"

#include <functional>
#include <set>
#include <span>
#include <vector>

#include "assignment.h"
#include "errors.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "io.h"
#include "rng.h"
#include "test_util.h"

namespace privpart {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

std::vector<int> Vec(std::span<const int> s) {
  return std::vector<int>(s.begin(), s.end());
}

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(0);
}

std::string MessageOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(ValidateInstanceTest, TwoEntriesSetsDimensionWarning) {
  const Instance inst =
      Instance::Validate(testing::TwoEntryData(DisclosureFamily::kLinear));
  EXPECT_EQ(inst.hypergraph().dimension(), 2);
  EXPECT_TRUE(inst.dimension_warning());
}

TEST(ValidateInstanceTest, NoWarningWhenHyperedgeExceedsK) {
  InstanceData data = testing::TwoEntryData(DisclosureFamily::kStep);
  data.num_entries = 3;
  data.utility_weights = {0.9, 0.1, 0.1, 0.8, 0.5, 0.5};
  data.properties[0].members = {0, 1, 2};
  EXPECT_FALSE(Instance::Validate(data).dimension_warning());
}

TEST(ValidateInstanceTest, RejectsTExceedingK) {
  InstanceData data = testing::TwoEntryData(DisclosureFamily::kLinear);
  data.t = 3;
  EXPECT_THAT(MessageOf([&] { Instance::Validate(data); }),
              HasSubstr("t exceeds k"));
}

TEST(ValidateInstanceTest, RejectsWeightSumOtherThanOne) {
  InstanceData data = testing::TwoEntryData(DisclosureFamily::kLinear);
  data.properties[0].weights = {0.5, 0.6};
  EXPECT_THAT(MessageOf([&] { Instance::Validate(data); }),
              HasSubstr("weights sum 1.1 != 1"));
}

TEST(ValidateInstanceTest, RejectsStructuralErrors) {
  auto base = [] { return testing::TwoEntryData(DisclosureFamily::kLinear); };
  InstanceData d = base();
  d.num_entries = 0;
  d.utility_weights.clear();
  EXPECT_EQ(CodeOf([&] { Instance::Validate(d); }),
            ErrorCode::kInvalidArgument);

  d = base();
  d.utility_weights[1] = -0.1;
  EXPECT_THAT(MessageOf([&] { Instance::Validate(d); }),
              HasSubstr("negative"));

  d = base();
  d.properties[0].members.clear();
  d.properties[0].weights.clear();
  EXPECT_THAT(MessageOf([&] { Instance::Validate(d); }),
              HasSubstr("no members"));

  d = base();
  d.properties[0].weights.clear();
  EXPECT_THAT(MessageOf([&] { Instance::Validate(d); }),
              HasSubstr("missing weights"));

  d = base();
  d.num_adversaries = 1;
  d.t = 1;
  d.utility_weights = {1.0, 1.0};
  EXPECT_EQ(CodeOf([&] { Instance::Validate(d); }),
            ErrorCode::kInvalidArgument);

  d = base();
  d.lambda = 1.5;
  EXPECT_THAT(MessageOf([&] { Instance::Validate(d); }), HasSubstr("lambda"));
}

TEST(ValidateInstanceTest, AllowsEmptyPropertySet) {
  InstanceData data = testing::TwoEntryData(DisclosureFamily::kLinear);
  data.properties.clear();
  EXPECT_EQ(Instance::Validate(data).num_properties(), 0);
}

TEST(ValidateInstanceTest, AcceptsDuplicateMemberSets) {
  InstanceData data = testing::TwoEntryData(DisclosureFamily::kLinear);
  data.properties.push_back(data.properties[0]);
  const Instance inst = Instance::Validate(data);
  EXPECT_EQ(inst.num_properties(), 2);
  EXPECT_THAT(Vec(inst.hypergraph().incident(0)), ElementsAre(0, 1));
}

TEST(ValidateInstanceTest, CosineNeedsTwoUsersAndPayloads) {
  InstanceData data;
  data.num_entries = 2;
  data.num_adversaries = 2;
  data.model = {DisclosureFamily::kCosine, Aggregation::kAverage};
  data.utility_weights = {1, 1, 1, 1};
  SensitiveProperty p;
  p.members = {0, 1};
  data.properties = {p};
  EXPECT_THAT(MessageOf([&] { Instance::Validate(data); }),
              HasSubstr("payloads"));
  data.payloads = {{0, 0, 1}, {1, 0, 2}};
  EXPECT_THAT(MessageOf([&] { Instance::Validate(data); }),
              HasSubstr("two distinct users"));
  data.properties[0].users = std::array<int, 2>{0, 1};
  EXPECT_NO_THROW(Instance::Validate(data));
  data.payloads[1].user = 0;
  EXPECT_THAT(MessageOf([&] { Instance::Validate(data); }),
              HasSubstr("duplicate entry"));
}

TEST(ValidateInstanceTest, NormalizerIsTopTSum) {
  InstanceData data = testing::TwoEntryData(DisclosureFamily::kLinear);
  EXPECT_DOUBLE_EQ(Instance::Validate(data).normalizer(), 1.7);
  data.t = 2;
  EXPECT_DOUBLE_EQ(Instance::Validate(data).normalizer(), 1.9);
}

TEST(ValidateInstanceTest, IsIdempotent) {
  Rng rng(11);
  for (auto family : {DisclosureFamily::kStep, DisclosureFamily::kLinear,
                      DisclosureFamily::kQuadratic, DisclosureFamily::kCosine}) {
    for (int trial = 0; trial < 20; ++trial) {
      testing::RandomSpec spec;
      spec.family = family;
      spec.num_entries = 6;
      spec.num_properties = 3;
      const Instance once = testing::RandomInstance(rng, spec);
      const Instance twice = Instance::Validate(once.data());
      EXPECT_EQ(once, twice);
      EXPECT_EQ(once.hypergraph(), twice.hypergraph());
      EXPECT_EQ(once.normalizer(), twice.normalizer());
    }
  }
}

TEST(ValidateInstanceTest, JsonRoundTrip) {
  Rng rng(5);
  for (auto family : {DisclosureFamily::kStep, DisclosureFamily::kLinear,
                      DisclosureFamily::kCosine}) {
    testing::RandomSpec spec;
    spec.family = family;
    spec.aggregation = Aggregation::kAverage;
    spec.lambda = 0.25;
    spec.tau_i = 0.5;
    const Instance inst = testing::RandomInstance(rng, spec);
    const Instance back = InstanceFromString(InstanceToJson(inst).dump());
    EXPECT_EQ(inst, back);
  }
}

TEST(InstanceJsonTest, UsesNormativeKeys) {
  const Instance inst =
      Instance::Validate(testing::TwoEntryData(DisclosureFamily::kLinear));
  const auto doc = InstanceToJson(inst);
  for (const char* key : {"num_entries", "num_adversaries", "t", "lambda",
                          "tau_I", "model", "properties", "utility_weights"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_EQ(doc["model"]["family"], "linear");
  EXPECT_EQ(doc["properties"][0]["members"], nlohmann::json({0, 1}));
}

TEST(InstanceJsonTest, MalformedDocumentsAreParseErrors) {
  EXPECT_EQ(CodeOf([] { InstanceFromString("{"); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { InstanceFromString("{\"num_entries\": 2}"); }),
            ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] {
              InstanceFromString(
                  R"({"num_entries":1,"num_adversaries":2,"t":1,)"
                  R"("model":{"family":"bogus"},"properties":[],)"
                  R"("utility_weights":[[1,1]]})");
            }),
            ErrorCode::kParse);
}

TEST(BipartiteToHypergraphTest, SingleHyperedge) {
  const std::vector<std::pair<int, int>> edges = {{0, 0}, {1, 0}};
  const auto h = BipartiteToHypergraph(edges, 2, 1);
  EXPECT_THAT(h.property(0).members, ElementsAre(0, 1));
}

TEST(BipartiteToHypergraphTest, TwoOverlappingHyperedges) {
  const std::vector<std::pair<int, int>> edges = {
      {0, 0}, {1, 0}, {1, 1}, {2, 1}};
  const auto h = BipartiteToHypergraph(edges, 3, 2);
  EXPECT_THAT(h.property(0).members, ElementsAre(0, 1));
  EXPECT_THAT(h.property(1).members, ElementsAre(1, 2));
  EXPECT_EQ(h.dimension(), 2);
  EXPECT_THAT(Vec(h.incident(1)), ElementsAre(0, 1));
}

TEST(BipartiteToHypergraphTest, PropertyWithoutEdgeIsAnError) {
  const std::vector<std::pair<int, int>> edges = {{0, 0}};
  EXPECT_THAT(MessageOf([&] { BipartiteToHypergraph(edges, 1, 2); }),
              HasSubstr("property 1 has no incident edge"));
}

TEST(BipartiteToHypergraphTest, RejectsOutOfRangeIds) {
  const std::vector<std::pair<int, int>> bad_entry = {{3, 0}};
  EXPECT_EQ(CodeOf([&] { BipartiteToHypergraph(bad_entry, 2, 1); }),
            ErrorCode::kInvalidArgument);
  const std::vector<std::pair<int, int>> bad_prop = {{0, 4}};
  EXPECT_EQ(CodeOf([&] { BipartiteToHypergraph(bad_prop, 2, 1); }),
            ErrorCode::kInvalidArgument);
}

TEST(BipartiteToHypergraphTest, FlattenIsIdentityOnEdgeSets) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int num_d = UniformInt(rng, 1, 12);
    const int num_p = UniformInt(rng, 1, 6);
    std::set<std::pair<int, int>> edges;
    for (int p = 0; p < num_p; ++p) edges.emplace(UniformInt(rng, 0, num_d - 1), p);
    for (int i = 0; i < 20; ++i) {
      edges.emplace(UniformInt(rng, 0, num_d - 1),
                    UniformInt(rng, 0, num_p - 1));
    }
    const std::vector<std::pair<int, int>> in(edges.begin(), edges.end());
    const auto h = BipartiteToHypergraph(in, num_d, num_p);
    const auto out = h.Edges();
    EXPECT_EQ((std::set<std::pair<int, int>>(out.begin(), out.end())), edges);
    // Incidence is the transpose of membership.
    for (int d = 0; d < num_d; ++d) {
      for (int p : h.incident(d)) {
        EXPECT_TRUE(edges.count({d, p}));
      }
    }
    size_t incidences = 0;
    for (int d = 0; d < num_d; ++d) incidences += h.incident(d).size();
    EXPECT_EQ(incidences, edges.size());
  }
}

TEST(ApplyMoveTest, Swap) {
  Assignment s(1, 2);
  s.Set(0, 0, true);
  s.Apply(Move::Swap(0, 0, 1));
  EXPECT_FALSE(s.test(0, 0));
  EXPECT_TRUE(s.test(0, 1));
  EXPECT_EQ(s.count(0), 1);
}

TEST(ApplyMoveTest, RemoveLeavesEntryUnassigned) {
  Assignment s(1, 2);
  s.Set(0, 0, true);
  s.Apply(Move::Remove(0, 0));
  EXPECT_EQ(s.count(0), 0);
  EXPECT_EQ(s.unassigned(), 1);
}

TEST(ApplyMoveTest, InconsistentMovesThrow) {
  Assignment s(1, 2);
  s.Set(0, 0, true);
  EXPECT_THAT(MessageOf([&] { s.Apply(Move::Add(0, 0)); }),
              HasSubstr("bit already set"));
  EXPECT_THAT(MessageOf([&] { s.Apply(Move::Remove(0, 1)); }),
              HasSubstr("bit not set"));
  EXPECT_THAT(MessageOf([&] { s.Apply(Move::Swap(0, 1, 0)); }),
              HasSubstr("source bit not set"));
  s.Set(0, 1, true);
  EXPECT_THAT(MessageOf([&] { s.Apply(Move::Swap(0, 0, 1)); }),
              HasSubstr("target bit already set"));
  EXPECT_EQ(CodeOf([&] { s.Apply(Move::Add(5, 0)); }),
            ErrorCode::kInvalidArgument);
}

TEST(ApplyMoveTest, DoesNotEnforceCardinality) {
  Assignment s(1, 3);
  s.Apply(Move::Add(0, 0));
  s.Apply(Move::Add(0, 1));
  s.Apply(Move::Add(0, 2));
  EXPECT_EQ(s.count(0), 3);
  EXPECT_FALSE(s.IsFeasible(2));
  EXPECT_TRUE(s.IsFeasible(3));
}

TEST(ApplyMoveTest, CountCacheStaysCoherent) {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int num_d = UniformInt(rng, 1, 8), k = UniformInt(rng, 2, 5);
    Assignment s(num_d, k);
    for (int step = 0; step < 200; ++step) {
      const int d = UniformInt(rng, 0, num_d - 1);
      const int a = UniformInt(rng, 0, k - 1);
      const int b = UniformInt(rng, 0, k - 1);
      Move m;
      if (!s.test(d, a)) {
        m = Move::Add(d, a);
      } else if (a != b && !s.test(d, b)) {
        m = Move::Swap(d, a, b);
      } else {
        m = Move::Remove(d, a);
      }
      s.Apply(m);
      int unassigned = 0;
      for (int e = 0; e < num_d; ++e) {
        int row = 0;
        for (int c = 0; c < k; ++c) row += s.test(e, c);
        ASSERT_EQ(row, s.count(e));
        unassigned += row == 0;
      }
      ASSERT_EQ(unassigned, s.unassigned());
    }
  }
}

}  // namespace
}  // namespace privpart
