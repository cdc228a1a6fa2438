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

// Per-adversary, per-property disclosure f_a(S_a)[p] for the step, linear,
// quadratic and cosine families, and its aggregation to the scalar f(S).
//
// Two evaluation paths exist. The free functions recompute everything from
// the assignment. DisclosureTracker keeps per-(adversary, property)
// accumulators so a candidate Move can be scored in time proportional to the
// number of properties it touches; the two paths agree to 1e-9.

#ifndef PRIVPART_DISCLOSURE_H_
#define PRIVPART_DISCLOSURE_H_

#include <set>
#include <span>
#include <utility>
#include <vector>

#include "assignment.h"
#include "instance.h"

namespace privpart {

// k x |P| matrix; row a is f_a(S_a).
class DisclosureVector {
 public:
  DisclosureVector() = default;
  DisclosureVector(int num_adversaries, int num_properties)
      : num_adversaries_(num_adversaries),
        num_properties_(num_properties),
        values_(static_cast<size_t>(num_adversaries) * num_properties, 0.0) {}

  int num_adversaries() const { return num_adversaries_; }
  int num_properties() const { return num_properties_; }
  double at(int a, int p) const {
    return values_[static_cast<size_t>(a) * num_properties_ + p];
  }
  double& at(int a, int p) {
    return values_[static_cast<size_t>(a) * num_properties_ + p];
  }
  std::span<const double> row(int a) const {
    return std::span<const double>(values_).subspan(
        static_cast<size_t>(a) * num_properties_, num_properties_);
  }

 private:
  int num_adversaries_ = 0;
  int num_properties_ = 0;
  std::vector<double> values_;
};

DisclosureVector StepDisclosure(const Instance& instance,
                                const Assignment& assignment);
DisclosureVector LinearDisclosure(const Instance& instance,
                                  const Assignment& assignment);
DisclosureVector QuadraticDisclosure(const Instance& instance,
                                     const Assignment& assignment);
DisclosureVector CosineDisclosure(const Instance& instance,
                                  const Assignment& assignment);
// Dispatches on the instance's family.
DisclosureVector ComputeDisclosure(const Instance& instance,
                                   const Assignment& assignment);

// f'_a for one adversary: max_p (worst) or sum_p / |P| (average).
double AdversaryDisclosure(std::span<const double> row, Aggregation mode);
// max_a f'_a. Zero when there are no properties.
double AggregateDisclosure(const DisclosureVector& v, Aggregation mode);
// max_a f_a[p] for every property.
std::vector<double> PerPropertyMax(const DisclosureVector& v);

// Incremental disclosure state over an owned assignment.
class DisclosureTracker {
 public:
  DisclosureTracker(const Instance& instance, Assignment assignment);

  const Assignment& assignment() const { return assignment_; }
  // Current f(S).
  double overall() const { return overall_; }
  // Current f'_a.
  double adversary(int a) const { return agg_[a]; }
  double value(int a, int p) const { return values_[Index(a, p)]; }

  // f(S) after `m`, without changing state. `m` must be consistent with the
  // current assignment.
  double OverallAfter(const Move& m) const;
  // f'_a for every adversary after `m`, written to `out` (size k).
  void AdversariesAfter(const Move& m, std::span<double> out) const;

  void Apply(const Move& m);

  DisclosureVector Snapshot() const;

 private:
  struct Membership {
    int property;
    double weight;  // a_dp, or 1 when the family has no weights
    int side;       // cosine: which linked user this entry belongs to
    int partner;    // cosine: other user's entry at the same location, or -1
  };
  struct Accumulator {
    double sum = 0.0;  // member count (step), weighted sum, or dot product
    double norm[2] = {0.0, 0.0};  // cosine squared norms per side
  };

  size_t Index(int a, int p) const {
    return static_cast<size_t>(a) * num_properties_ + p;
  }
  double ValueOf(int p, const Accumulator& acc) const;
  // Accumulator of (a, p) after toggling entry d at a by `delta` (+1/-1).
  Accumulator Toggled(int d, int a, const Membership& m, int delta) const;
  // f'_a after toggling d at a, using the current accumulators.
  double AdversaryAfterToggle(int d, int a, int delta) const;
  void ApplyToggle(int d, int a, int delta);
  void RecomputeOverall();

  const Instance* instance_;
  Assignment assignment_;
  DisclosureFamily family_;
  Aggregation aggregation_;
  int num_adversaries_;
  int num_properties_;
  std::vector<int> property_size_;
  std::vector<std::vector<Membership>> memberships_;  // per entry
  std::vector<Accumulator> acc_;                      // k x |P|
  std::vector<double> values_;                        // k x |P|
  std::vector<double> agg_;                           // f'_a
  std::vector<double> sums_;                          // average mode
  std::vector<std::set<std::pair<double, int>>> ordered_;  // worst mode
  double overall_ = 0.0;
  mutable std::vector<int> stamp_;
  mutable int stamp_counter_ = 0;
};

}  // namespace privpart

#endif  // PRIVPART_DISCLOSURE_H_
