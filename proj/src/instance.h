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

// Problem data model: the dependency hypergraph between data entries and
// sensitive properties, the utility weight matrix, and the partitioning
// parameters (k adversaries, at most t adversaries per entry, lambda, tau_I).

#ifndef PRIVPART_INSTANCE_H_
#define PRIVPART_INSTANCE_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace privpart {

enum class DisclosureFamily { kStep, kLinear, kQuadratic, kCosine };
enum class Aggregation { kWorst, kAverage };

struct DisclosureModel {
  DisclosureFamily family = DisclosureFamily::kLinear;
  Aggregation aggregation = Aggregation::kWorst;

  bool operator==(const DisclosureModel&) const = default;
};

std::string_view FamilyName(DisclosureFamily family);
std::string_view AggregationName(Aggregation aggregation);
// Both throw Error(kParse) on unknown names.
DisclosureFamily ParseFamily(std::string_view name);
Aggregation ParseAggregation(std::string_view name);

// Families whose per-property disclosure is a weighted sum over members.
inline bool UsesMemberWeights(DisclosureFamily family) {
  return family == DisclosureFamily::kLinear ||
         family == DisclosureFamily::kQuadratic;
}

// Opaque record carried by location check-in entries; only the cosine
// family reads it.
struct EntryPayload {
  int user = 0;
  int location = 0;
  int count = 1;

  bool operator==(const EntryPayload&) const = default;
};

struct SensitiveProperty {
  int id = 0;
  // Ascending, unique entry ids (D_p).
  std::vector<int> members;
  // Parallel to `members`; empty when the family does not use weights.
  std::vector<double> weights;
  // The two users whose link this property represents (cosine family).
  std::optional<std::array<int, 2>> users;

  bool operator==(const SensitiveProperty&) const = default;
};

class DependencyHypergraph {
 public:
  DependencyHypergraph() = default;

  // Sorts members (carrying weights along), drops duplicate members and
  // builds the entry -> property incidence. Throws Error(kInvalidArgument)
  // on out-of-range ids, empty properties, or misaligned weights.
  static DependencyHypergraph FromProperties(
      int num_entries, std::vector<SensitiveProperty> properties);

  int num_entries() const { return num_entries_; }
  int num_properties() const { return static_cast<int>(properties_.size()); }
  const SensitiveProperty& property(int p) const { return properties_[p]; }
  std::span<const SensitiveProperty> properties() const { return properties_; }
  // Properties that entry d belongs to, ascending.
  std::span<const int> incident(int d) const { return incidence_[d]; }
  // Size of the largest hyperedge.
  int dimension() const { return dimension_; }

  // Flattened (entry, property) pairs, sorted by property then entry.
  std::vector<std::pair<int, int>> Edges() const;

  bool operator==(const DependencyHypergraph&) const = default;

 private:
  int num_entries_ = 0;
  std::vector<SensitiveProperty> properties_;
  std::vector<std::vector<int>> incidence_;
  int dimension_ = 0;
};

// Maps each property node of the bipartite dependency graph to the hyperedge
// of its neighbouring entries.
DependencyHypergraph BipartiteToHypergraph(
    std::span<const std::pair<int, int>> edges, int num_entries,
    int num_properties);

// Unvalidated instance description, as read from disk or produced by a
// generator.
struct InstanceData {
  int num_entries = 0;
  int num_adversaries = 2;
  int t = 1;
  double lambda = 1.0;
  double tau_i = 0.0;
  DisclosureModel model;
  std::vector<SensitiveProperty> properties;
  // Row-major |D| x k matrix of w_da.
  std::vector<double> utility_weights;
  // Empty, or one payload per entry.
  std::vector<EntryPayload> payloads;

  bool operator==(const InstanceData&) const = default;
};

// Validated, immutable problem instance. Safe to share across threads.
class Instance {
 public:
  // Throws Error(kInvalidArgument) with a diagnostic on any violation.
  static Instance Validate(InstanceData data);

  const InstanceData& data() const { return data_; }
  const DependencyHypergraph& hypergraph() const { return hypergraph_; }

  int num_entries() const { return data_.num_entries; }
  int num_adversaries() const { return data_.num_adversaries; }
  int num_properties() const { return hypergraph_.num_properties(); }
  int t() const { return data_.t; }
  double lambda() const { return data_.lambda; }
  double tau_i() const { return data_.tau_i; }
  const DisclosureModel& model() const { return data_.model; }

  double weight(int d, int a) const {
    return data_.utility_weights[static_cast<size_t>(d) * num_adversaries() +
                                 a];
  }
  std::span<const double> weights_of(int d) const {
    return std::span<const double>(data_.utility_weights)
        .subspan(static_cast<size_t>(d) * num_adversaries(),
                 num_adversaries());
  }
  bool has_payloads() const { return !data_.payloads.empty(); }
  const EntryPayload& payload(int d) const { return data_.payloads[d]; }

  // Z = sum over entries of the t largest weights of that entry.
  double normalizer() const { return normalizer_; }
  // Largest hyperedge does not exceed k; the model assumes it does.
  bool dimension_warning() const { return dimension_warning_; }

  bool operator==(const Instance& other) const { return data_ == other.data_; }

 private:
  InstanceData data_;
  DependencyHypergraph hypergraph_;
  double normalizer_ = 0.0;
  bool dimension_warning_ = false;
};

// Sum of the t largest entries of `row`.
double TopTSum(std::span<const double> row, int t);

}  // namespace privpart

#endif  // PRIVPART_INSTANCE_H_
