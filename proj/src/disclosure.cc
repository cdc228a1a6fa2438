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

#include "disclosure.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "errors.h"

namespace privpart {
namespace {

double Clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

double CosineValue(double dot, double norm0, double norm1) {
  if (dot <= 0.0 || norm0 <= 0.0 || norm1 <= 0.0) return 0.0;
  return std::min(1.0, dot / (std::sqrt(norm0) * std::sqrt(norm1)));
}

void RequireWeights(const Instance& instance) {
  for (const auto& prop : instance.hypergraph().properties()) {
    if (prop.weights.size() != prop.members.size()) {
      Fail(ErrorCode::kInvalidArgument,
           "property " + std::to_string(prop.id) +
               " has no disclosure weights");
    }
  }
}

// Sum of a_dp over members of p assigned to a.
DisclosureVector WeightedSums(const Instance& instance,
                              const Assignment& assignment) {
  RequireWeights(instance);
  const int k = instance.num_adversaries();
  DisclosureVector v(k, instance.num_properties());
  for (const auto& prop : instance.hypergraph().properties()) {
    for (int a = 0; a < k; ++a) {
      double sum = 0.0;
      for (size_t i = 0; i < prop.members.size(); ++i) {
        if (assignment.test(prop.members[i], a)) sum += prop.weights[i];
      }
      v.at(a, prop.id) = Clamp01(sum);
    }
  }
  return v;
}

}  // namespace

DisclosureVector StepDisclosure(const Instance& instance,
                                const Assignment& assignment) {
  const int k = instance.num_adversaries();
  DisclosureVector v(k, instance.num_properties());
  for (const auto& prop : instance.hypergraph().properties()) {
    for (int a = 0; a < k; ++a) {
      const bool all = std::all_of(
          prop.members.begin(), prop.members.end(),
          [&](int d) { return assignment.test(d, a); });
      v.at(a, prop.id) = all ? 1.0 : 0.0;
    }
  }
  return v;
}

DisclosureVector LinearDisclosure(const Instance& instance,
                                  const Assignment& assignment) {
  return WeightedSums(instance, assignment);
}

DisclosureVector QuadraticDisclosure(const Instance& instance,
                                     const Assignment& assignment) {
  DisclosureVector v = WeightedSums(instance, assignment);
  for (int a = 0; a < v.num_adversaries(); ++a) {
    for (int p = 0; p < v.num_properties(); ++p) v.at(a, p) *= v.at(a, p);
  }
  return v;
}

DisclosureVector CosineDisclosure(const Instance& instance,
                                  const Assignment& assignment) {
  if (!instance.has_payloads()) {
    Fail(ErrorCode::kInvalidArgument,
         "cosine disclosure requires entry payloads");
  }
  const int k = instance.num_adversaries();
  DisclosureVector v(k, instance.num_properties());
  for (const auto& prop : instance.hypergraph().properties()) {
    if (!prop.users.has_value()) {
      Fail(ErrorCode::kInvalidArgument,
           "property " + std::to_string(prop.id) +
               " does not reference two users");
    }
    const auto [u0, u1] = *prop.users;
    for (int a = 0; a < k; ++a) {
      // Location -> visit count, per linked user, over entries published to a.
      std::unordered_map<int, double> side0;
      std::unordered_map<int, double> side1;
      for (int d : prop.members) {
        if (!assignment.test(d, a)) continue;
        const EntryPayload& e = instance.payload(d);
        if (e.user == u0) side0[e.location] += e.count;
        if (e.user == u1) side1[e.location] += e.count;
      }
      double dot = 0.0, n0 = 0.0, n1 = 0.0;
      for (const auto& [loc, c] : side0) {
        n0 += c * c;
        auto it = side1.find(loc);
        if (it != side1.end()) dot += c * it->second;
      }
      for (const auto& [loc, c] : side1) n1 += c * c;
      v.at(a, prop.id) = CosineValue(dot, n0, n1);
    }
  }
  return v;
}

DisclosureVector ComputeDisclosure(const Instance& instance,
                                   const Assignment& assignment) {
  switch (instance.model().family) {
    case DisclosureFamily::kStep:
      return StepDisclosure(instance, assignment);
    case DisclosureFamily::kLinear:
      return LinearDisclosure(instance, assignment);
    case DisclosureFamily::kQuadratic:
      return QuadraticDisclosure(instance, assignment);
    case DisclosureFamily::kCosine:
      return CosineDisclosure(instance, assignment);
  }
  Fail(ErrorCode::kInternal, "unknown disclosure family");
}

double AdversaryDisclosure(std::span<const double> row, Aggregation mode) {
  if (row.empty()) return 0.0;
  if (mode == Aggregation::kWorst) {
    return *std::max_element(row.begin(), row.end());
  }
  double sum = 0.0, peak = 0.0;
  for (double x : row) {
    sum += x;
    peak = std::max(peak, x);
  }
  // Rounding can push the mean of equal values one ulp above them.
  return std::min(sum / static_cast<double>(row.size()), peak);
}

double AggregateDisclosure(const DisclosureVector& v, Aggregation mode) {
  double best = 0.0;
  for (int a = 0; a < v.num_adversaries(); ++a) {
    best = std::max(best, AdversaryDisclosure(v.row(a), mode));
  }
  return best;
}

std::vector<double> PerPropertyMax(const DisclosureVector& v) {
  std::vector<double> out(v.num_properties(), 0.0);
  for (int a = 0; a < v.num_adversaries(); ++a) {
    for (int p = 0; p < v.num_properties(); ++p) {
      out[p] = std::max(out[p], v.at(a, p));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// DisclosureTracker

DisclosureTracker::DisclosureTracker(const Instance& instance,
                                     Assignment assignment)
    : instance_(&instance),
      assignment_(instance.num_entries(), instance.num_adversaries()),
      family_(instance.model().family),
      aggregation_(instance.model().aggregation),
      num_adversaries_(instance.num_adversaries()),
      num_properties_(instance.num_properties()) {
  if (assignment.num_entries() != instance.num_entries() ||
      assignment.num_adversaries() != instance.num_adversaries()) {
    Fail(ErrorCode::kInvalidArgument,
         "assignment shape does not match the instance");
  }
  if (UsesMemberWeights(family_)) RequireWeights(instance);
  if (family_ == DisclosureFamily::kCosine && !instance.has_payloads()) {
    Fail(ErrorCode::kInvalidArgument,
         "cosine disclosure requires entry payloads");
  }

  memberships_.assign(instance.num_entries(), {});
  property_size_.resize(num_properties_);
  for (const auto& prop : instance.hypergraph().properties()) {
    property_size_[prop.id] = static_cast<int>(prop.members.size());
    std::unordered_map<int, int> location_of_side[2];
    std::vector<int> side(prop.members.size(), 0);
    if (family_ == DisclosureFamily::kCosine) {
      for (size_t i = 0; i < prop.members.size(); ++i) {
        const EntryPayload& e = instance.payload(prop.members[i]);
        side[i] = e.user == (*prop.users)[0] ? 0 : 1;
        location_of_side[side[i]][e.location] = prop.members[i];
      }
    }
    for (size_t i = 0; i < prop.members.size(); ++i) {
      const int d = prop.members[i];
      Membership m{prop.id,
                   UsesMemberWeights(family_) ? prop.weights[i] : 1.0,
                   side[i], -1};
      if (family_ == DisclosureFamily::kCosine) {
        const auto& other = location_of_side[1 - side[i]];
        auto it = other.find(instance.payload(d).location);
        if (it != other.end()) m.partner = it->second;
      }
      memberships_[d].push_back(m);
    }
  }

  const size_t cells = static_cast<size_t>(num_adversaries_) * num_properties_;
  acc_.assign(cells, Accumulator{});
  values_.assign(cells, 0.0);
  agg_.assign(num_adversaries_, 0.0);
  sums_.assign(num_adversaries_, 0.0);
  if (aggregation_ == Aggregation::kWorst) {
    ordered_.resize(num_adversaries_);
    for (int a = 0; a < num_adversaries_; ++a) {
      for (int p = 0; p < num_properties_; ++p) ordered_[a].emplace(0.0, p);
    }
  }
  stamp_.assign(num_properties_, 0);

  for (int d = 0; d < assignment.num_entries(); ++d) {
    for (int a = 0; a < num_adversaries_; ++a) {
      if (assignment.test(d, a)) Apply(Move::Add(d, a));
    }
  }
  RecomputeOverall();
}

double DisclosureTracker::ValueOf(int p, const Accumulator& acc) const {
  switch (family_) {
    case DisclosureFamily::kStep:
      return acc.sum >= property_size_[p] - 0.5 ? 1.0 : 0.0;
    case DisclosureFamily::kLinear:
      return Clamp01(acc.sum);
    case DisclosureFamily::kQuadratic: {
      const double s = Clamp01(acc.sum);
      return s * s;
    }
    case DisclosureFamily::kCosine:
      return CosineValue(acc.sum, acc.norm[0], acc.norm[1]);
  }
  return 0.0;
}

DisclosureTracker::Accumulator DisclosureTracker::Toggled(
    int d, int a, const Membership& m, int delta) const {
  Accumulator acc = acc_[Index(a, m.property)];
  if (family_ == DisclosureFamily::kCosine) {
    const double c = instance_->payload(d).count;
    acc.norm[m.side] += delta * c * c;
    if (m.partner >= 0 && assignment_.test(m.partner, a)) {
      acc.sum += delta * c * instance_->payload(m.partner).count;
    }
  } else {
    acc.sum += delta * m.weight;
  }
  return acc;
}

double DisclosureTracker::AdversaryAfterToggle(int d, int a, int delta) const {
  if (num_properties_ == 0) return 0.0;
  const auto& members = memberships_[d];
  if (aggregation_ == Aggregation::kAverage) {
    double sum = sums_[a];
    for (const Membership& m : members) {
      sum += ValueOf(m.property, Toggled(d, a, m, delta)) -
             values_[Index(a, m.property)];
    }
    return std::max(0.0, sum / num_properties_);
  }
  ++stamp_counter_;
  double best = 0.0;
  for (const Membership& m : members) {
    stamp_[m.property] = stamp_counter_;
    best = std::max(best, ValueOf(m.property, Toggled(d, a, m, delta)));
  }
  for (auto it = ordered_[a].rbegin(); it != ordered_[a].rend(); ++it) {
    if (stamp_[it->second] != stamp_counter_) {
      best = std::max(best, it->first);
      break;
    }
  }
  return best;
}

void DisclosureTracker::AdversariesAfter(const Move& m,
                                         std::span<double> out) const {
  std::copy(agg_.begin(), agg_.end(), out.begin());
  switch (m.kind) {
    case Move::Kind::kAdd:
      out[m.to] = AdversaryAfterToggle(m.entry, m.to, +1);
      break;
    case Move::Kind::kRemove:
      out[m.from] = AdversaryAfterToggle(m.entry, m.from, -1);
      break;
    case Move::Kind::kSwap:
      out[m.from] = AdversaryAfterToggle(m.entry, m.from, -1);
      out[m.to] = AdversaryAfterToggle(m.entry, m.to, +1);
      break;
  }
}

double DisclosureTracker::OverallAfter(const Move& m) const {
  double changed[2];
  int which[2] = {-1, -1};
  switch (m.kind) {
    case Move::Kind::kAdd:
      which[0] = m.to;
      changed[0] = AdversaryAfterToggle(m.entry, m.to, +1);
      break;
    case Move::Kind::kRemove:
      which[0] = m.from;
      changed[0] = AdversaryAfterToggle(m.entry, m.from, -1);
      break;
    case Move::Kind::kSwap:
      which[0] = m.from;
      changed[0] = AdversaryAfterToggle(m.entry, m.from, -1);
      which[1] = m.to;
      changed[1] = AdversaryAfterToggle(m.entry, m.to, +1);
      break;
  }
  double best = 0.0;
  for (int a = 0; a < num_adversaries_; ++a) {
    double v = agg_[a];
    if (a == which[0]) v = changed[0];
    if (a == which[1]) v = changed[1];
    best = std::max(best, v);
  }
  return best;
}

void DisclosureTracker::ApplyToggle(int d, int a, int delta) {
  for (const Membership& m : memberships_[d]) {
    const size_t idx = Index(a, m.property);
    acc_[idx] = Toggled(d, a, m, delta);
    const double old_value = values_[idx];
    const double new_value = ValueOf(m.property, acc_[idx]);
    if (aggregation_ == Aggregation::kAverage) {
      sums_[a] += new_value - old_value;
    } else if (new_value != old_value) {
      ordered_[a].erase({old_value, m.property});
      ordered_[a].emplace(new_value, m.property);
    }
    values_[idx] = new_value;
  }
  if (num_properties_ == 0) {
    agg_[a] = 0.0;
  } else if (aggregation_ == Aggregation::kAverage) {
    agg_[a] = std::max(0.0, sums_[a] / num_properties_);
  } else {
    agg_[a] = ordered_[a].rbegin()->first;
  }
}

void DisclosureTracker::Apply(const Move& m) {
  // Validate on a scratch copy of the touched row first so a rejected move
  // leaves the accumulators untouched.
  {
    Assignment row(1, num_adversaries_);
    if (m.entry < 0 || m.entry >= assignment_.num_entries()) {
      assignment_.Apply(m);  // throws the range diagnostic
    }
    for (int a = 0; a < num_adversaries_; ++a) {
      row.Set(0, a, assignment_.test(m.entry, a));
    }
    Move local = m;
    local.entry = 0;
    row.Apply(local);
  }
  switch (m.kind) {
    case Move::Kind::kAdd:
      ApplyToggle(m.entry, m.to, +1);
      break;
    case Move::Kind::kRemove:
      ApplyToggle(m.entry, m.from, -1);
      break;
    case Move::Kind::kSwap:
      ApplyToggle(m.entry, m.from, -1);
      ApplyToggle(m.entry, m.to, +1);
      break;
  }
  assignment_.Apply(m);
  RecomputeOverall();
}

void DisclosureTracker::RecomputeOverall() {
  overall_ = 0.0;
  for (double v : agg_) overall_ = std::max(overall_, v);
}

DisclosureVector DisclosureTracker::Snapshot() const {
  DisclosureVector v(num_adversaries_, num_properties_);
  for (int a = 0; a < num_adversaries_; ++a) {
    for (int p = 0; p < num_properties_; ++p) v.at(a, p) = values_[Index(a, p)];
  }
  return v;
}

}  // namespace privpart
