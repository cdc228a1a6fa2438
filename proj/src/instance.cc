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

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "errors.h"

namespace privpart {
namespace {

constexpr double kWeightSumTolerance = 1e-9;

std::string FormatDouble(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void CheckCosineProperty(const InstanceData& data,
                         const SensitiveProperty& prop) {
  if (!prop.users.has_value() || (*prop.users)[0] == (*prop.users)[1]) {
    Fail(ErrorCode::kInvalidArgument,
         "property " + std::to_string(prop.id) +
             " must reference exactly two distinct users");
  }
  for (int d : prop.members) {
    const int user = data.payloads[d].user;
    if (user != (*prop.users)[0] && user != (*prop.users)[1]) {
      Fail(ErrorCode::kInvalidArgument,
           "property " + std::to_string(prop.id) + " member " +
               std::to_string(d) + " belongs to neither linked user");
    }
  }
}

}  // namespace

std::string_view FamilyName(DisclosureFamily family) {
  switch (family) {
    case DisclosureFamily::kStep:
      return "step";
    case DisclosureFamily::kLinear:
      return "linear";
    case DisclosureFamily::kQuadratic:
      return "quadratic";
    case DisclosureFamily::kCosine:
      return "cosine";
  }
  return "unknown";
}

std::string_view AggregationName(Aggregation aggregation) {
  return aggregation == Aggregation::kWorst ? "worst" : "average";
}

DisclosureFamily ParseFamily(std::string_view name) {
  for (auto f : {DisclosureFamily::kStep, DisclosureFamily::kLinear,
                 DisclosureFamily::kQuadratic, DisclosureFamily::kCosine}) {
    if (FamilyName(f) == name) return f;
  }
  Fail(ErrorCode::kParse, "unknown disclosure family '" + std::string(name) +
                              "'");
}

Aggregation ParseAggregation(std::string_view name) {
  if (name == "worst") return Aggregation::kWorst;
  if (name == "average") return Aggregation::kAverage;
  Fail(ErrorCode::kParse, "unknown aggregation '" + std::string(name) + "'");
}

DependencyHypergraph DependencyHypergraph::FromProperties(
    int num_entries, std::vector<SensitiveProperty> properties) {
  DependencyHypergraph h;
  h.num_entries_ = num_entries;
  h.incidence_.assign(num_entries, {});
  for (size_t p = 0; p < properties.size(); ++p) {
    SensitiveProperty& prop = properties[p];
    if (prop.members.empty()) {
      Fail(ErrorCode::kInvalidArgument,
           "property " + std::to_string(p) + " has no members");
    }
    const bool weighted = !prop.weights.empty();
    if (weighted && prop.weights.size() != prop.members.size()) {
      Fail(ErrorCode::kInvalidArgument,
           "property " + std::to_string(p) +
               " weights do not align with members");
    }
    std::vector<size_t> order(prop.members.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
      return prop.members[x] < prop.members[y];
    });
    std::vector<int> members;
    std::vector<double> weights;
    for (size_t i : order) {
      const int d = prop.members[i];
      if (d < 0 || d >= num_entries) {
        Fail(ErrorCode::kInvalidArgument,
             "property " + std::to_string(p) + " references entry " +
                 std::to_string(d) + " outside [0," +
                 std::to_string(num_entries) + ")");
      }
      if (!members.empty() && members.back() == d) continue;
      members.push_back(d);
      if (weighted) weights.push_back(prop.weights[i]);
    }
    prop.id = static_cast<int>(p);
    prop.members = std::move(members);
    prop.weights = std::move(weights);
    for (int d : prop.members) h.incidence_[d].push_back(static_cast<int>(p));
    h.dimension_ =
        std::max(h.dimension_, static_cast<int>(prop.members.size()));
  }
  h.properties_ = std::move(properties);
  return h;
}

std::vector<std::pair<int, int>> DependencyHypergraph::Edges() const {
  std::vector<std::pair<int, int>> edges;
  for (const auto& prop : properties_) {
    for (int d : prop.members) edges.emplace_back(d, prop.id);
  }
  return edges;
}

DependencyHypergraph BipartiteToHypergraph(
    std::span<const std::pair<int, int>> edges, int num_entries,
    int num_properties) {
  if (num_entries < 0 || num_properties < 0) {
    Fail(ErrorCode::kInvalidArgument, "negative dimension");
  }
  std::vector<SensitiveProperty> props(num_properties);
  for (const auto& [d, p] : edges) {
    if (p < 0 || p >= num_properties) {
      Fail(ErrorCode::kInvalidArgument,
           "edge references property " + std::to_string(p) + " outside [0," +
               std::to_string(num_properties) + ")");
    }
    props[p].members.push_back(d);
  }
  for (int p = 0; p < num_properties; ++p) {
    if (props[p].members.empty()) {
      Fail(ErrorCode::kInvalidArgument,
           "property " + std::to_string(p) + " has no incident edge");
    }
  }
  return DependencyHypergraph::FromProperties(num_entries, std::move(props));
}

double TopTSum(std::span<const double> row, int t) {
  std::vector<double> sorted(row.begin(), row.end());
  const size_t take = std::min(sorted.size(), static_cast<size_t>(t));
  std::partial_sort(sorted.begin(), sorted.begin() + take, sorted.end(),
                    std::greater<>());
  double sum = 0.0;
  for (size_t i = 0; i < take; ++i) sum += sorted[i];
  return sum;
}

Instance Instance::Validate(InstanceData data) {
  if (data.num_entries <= 0) {
    Fail(ErrorCode::kInvalidArgument, "instance has no data entries");
  }
  if (data.num_adversaries < 2) {
    Fail(ErrorCode::kInvalidArgument, "need at least 2 adversaries, got " +
                                          std::to_string(data.num_adversaries));
  }
  if (data.t < 1) Fail(ErrorCode::kInvalidArgument, "t must be at least 1");
  if (data.t > data.num_adversaries) {
    Fail(ErrorCode::kInvalidArgument,
         "t exceeds k (" + std::to_string(data.t) + " > " +
             std::to_string(data.num_adversaries) + ")");
  }
  if (!(data.lambda >= 0.0 && data.lambda <= 1.0)) {
    Fail(ErrorCode::kInvalidArgument,
         "lambda must lie in [0,1], got " + FormatDouble(data.lambda));
  }
  if (!(data.tau_i >= 0.0 && data.tau_i <= 1.0)) {
    Fail(ErrorCode::kInvalidArgument,
         "tau_I must lie in [0,1], got " + FormatDouble(data.tau_i));
  }
  const size_t cells =
      static_cast<size_t>(data.num_entries) * data.num_adversaries;
  if (data.utility_weights.size() != cells) {
    Fail(ErrorCode::kInvalidArgument,
         "utility_weights must be a " + std::to_string(data.num_entries) +
             " x " + std::to_string(data.num_adversaries) + " matrix");
  }
  for (size_t i = 0; i < cells; ++i) {
    const double w = data.utility_weights[i];
    if (!std::isfinite(w) || w < 0.0) {
      Fail(ErrorCode::kInvalidArgument,
           "negative or non-finite utility weight at entry " +
               std::to_string(i / data.num_adversaries) + ", adversary " +
               std::to_string(i % data.num_adversaries));
    }
  }
  if (!data.payloads.empty() &&
      data.payloads.size() != static_cast<size_t>(data.num_entries)) {
    Fail(ErrorCode::kInvalidArgument,
         "payloads must be absent or one per entry");
  }

  Instance instance;
  instance.hypergraph_ = DependencyHypergraph::FromProperties(
      data.num_entries, std::move(data.properties));
  data.properties.assign(instance.hypergraph_.properties().begin(),
                         instance.hypergraph_.properties().end());

  const DisclosureFamily family = data.model.family;
  for (const auto& prop : data.properties) {
    if (UsesMemberWeights(family)) {
      if (prop.weights.empty()) {
        Fail(ErrorCode::kInvalidArgument,
             "property " + std::to_string(prop.id) + " is missing weights");
      }
      double sum = 0.0;
      for (double w : prop.weights) {
        if (!std::isfinite(w) || w < 0.0) {
          Fail(ErrorCode::kInvalidArgument,
               "property " + std::to_string(prop.id) +
                   " has a negative disclosure weight");
        }
        sum += w;
      }
      if (std::abs(sum - 1.0) > kWeightSumTolerance) {
        Fail(ErrorCode::kInvalidArgument,
             "property " + std::to_string(prop.id) + " weights sum " +
                 FormatDouble(sum) + " != 1");
      }
    }
    if (family == DisclosureFamily::kCosine) {
      if (data.payloads.empty()) {
        Fail(ErrorCode::kInvalidArgument,
             "cosine disclosure requires entry payloads");
      }
      CheckCosineProperty(data, prop);
    }
  }
  if (family == DisclosureFamily::kCosine) {
    std::set<std::pair<int, int>> seen;
    for (const auto& payload : data.payloads) {
      if (payload.count < 1) {
        Fail(ErrorCode::kInvalidArgument, "check-in counts must be >= 1");
      }
      if (!seen.emplace(payload.user, payload.location).second) {
        Fail(ErrorCode::kInvalidArgument,
             "duplicate entry for user " + std::to_string(payload.user) +
                 " at location " + std::to_string(payload.location));
      }
    }
  }

  double z = 0.0;
  for (int d = 0; d < data.num_entries; ++d) {
    z += TopTSum(std::span<const double>(data.utility_weights)
                     .subspan(static_cast<size_t>(d) * data.num_adversaries,
                              data.num_adversaries),
                 data.t);
  }
  instance.normalizer_ = z;
  instance.dimension_warning_ =
      instance.hypergraph_.dimension() <= data.num_adversaries;
  instance.data_ = std::move(data);
  return instance;
}

}  // namespace privpart
