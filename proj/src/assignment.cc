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

#include "assignment.h"

#include <algorithm>

#include "errors.h"

namespace privpart {

std::string DescribeMove(const Move& m) {
  const std::string d = std::to_string(m.entry);
  switch (m.kind) {
    case Move::Kind::kAdd:
      return "add(" + d + ", " + std::to_string(m.to) + ")";
    case Move::Kind::kRemove:
      return "remove(" + d + ", " + std::to_string(m.from) + ")";
    case Move::Kind::kSwap:
      return "swap(" + d + ", " + std::to_string(m.from) + "->" +
             std::to_string(m.to) + ")";
  }
  return "?";
}

Assignment::Assignment(int num_entries, int num_adversaries)
    : num_entries_(num_entries),
      num_adversaries_(num_adversaries),
      bits_(static_cast<size_t>(num_entries) * num_adversaries, 0),
      counts_(num_entries, 0),
      unassigned_(num_entries) {}

std::vector<int> Assignment::adversaries_of(int d) const {
  std::vector<int> out;
  for (int a = 0; a < num_adversaries_; ++a) {
    if (test(d, a)) out.push_back(a);
  }
  return out;
}

bool Assignment::IsFeasible(int t) const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [t](int c) { return c >= 1 && c <= t; });
}

void Assignment::CheckIds(int d, int a) const {
  if (d < 0 || d >= num_entries_ || a < 0 || a >= num_adversaries_) {
    Fail(ErrorCode::kInvalidArgument,
         "move references entry " + std::to_string(d) + ", adversary " +
             std::to_string(a) + " outside the assignment");
  }
}

void Assignment::Set(int d, int a, bool value) {
  uint8_t& bit = bits_[static_cast<size_t>(d) * num_adversaries_ + a];
  if ((bit != 0) == value) return;
  bit = value ? 1 : 0;
  const int before = counts_[d];
  counts_[d] += value ? 1 : -1;
  if (before == 0) --unassigned_;
  if (counts_[d] == 0) ++unassigned_;
}

void Assignment::Clear() {
  std::fill(bits_.begin(), bits_.end(), 0);
  std::fill(counts_.begin(), counts_.end(), 0);
  unassigned_ = num_entries_;
}

void Assignment::Apply(const Move& m) {
  switch (m.kind) {
    case Move::Kind::kAdd:
      CheckIds(m.entry, m.to);
      if (test(m.entry, m.to)) {
        Fail(ErrorCode::kInvalidArgument,
             DescribeMove(m) + ": bit already set");
      }
      Set(m.entry, m.to, true);
      return;
    case Move::Kind::kRemove:
      CheckIds(m.entry, m.from);
      if (!test(m.entry, m.from)) {
        Fail(ErrorCode::kInvalidArgument, DescribeMove(m) + ": bit not set");
      }
      Set(m.entry, m.from, false);
      return;
    case Move::Kind::kSwap:
      CheckIds(m.entry, m.from);
      CheckIds(m.entry, m.to);
      if (!test(m.entry, m.from)) {
        Fail(ErrorCode::kInvalidArgument,
             DescribeMove(m) + ": source bit not set");
      }
      if (test(m.entry, m.to)) {
        Fail(ErrorCode::kInvalidArgument,
             DescribeMove(m) + ": target bit already set");
      }
      Set(m.entry, m.from, false);
      Set(m.entry, m.to, true);
      return;
  }
}

Assignment ApplyMove(Assignment a, const Move& m) {
  a.Apply(m);
  return a;
}

}  // namespace privpart
