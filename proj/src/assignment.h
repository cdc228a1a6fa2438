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

#ifndef PRIVPART_ASSIGNMENT_H_
#define PRIVPART_ASSIGNMENT_H_

#include <cstdint>
#include <string>
#include <vector>

namespace privpart {

// One neighbourhood step on an assignment.
struct Move {
  enum class Kind { kAdd, kRemove, kSwap };

  Kind kind = Kind::kAdd;
  int entry = -1;
  int from = -1;  // remove, swap
  int to = -1;    // add, swap

  static Move Add(int d, int a) { return {Kind::kAdd, d, -1, a}; }
  static Move Remove(int d, int a) { return {Kind::kRemove, d, a, -1}; }
  static Move Swap(int d, int from, int to) {
    return {Kind::kSwap, d, from, to};
  }

  bool operator==(const Move&) const = default;
};

std::string DescribeMove(const Move& m);

// Dense |D| x k boolean matrix of x_da with cached row sums.
class Assignment {
 public:
  Assignment() = default;
  Assignment(int num_entries, int num_adversaries);

  int num_entries() const { return num_entries_; }
  int num_adversaries() const { return num_adversaries_; }

  bool test(int d, int a) const {
    return bits_[static_cast<size_t>(d) * num_adversaries_ + a] != 0;
  }
  int count(int d) const { return counts_[d]; }
  // Number of entries with no adversary.
  int unassigned() const { return unassigned_; }
  std::vector<int> adversaries_of(int d) const;

  // 1 <= count(d) <= t for every entry.
  bool IsFeasible(int t) const;

  // Flips exactly the bits named by the move. Cardinality bounds are the
  // caller's business. Throws Error(kInvalidArgument) if the move is
  // inconsistent with the current bits or out of range.
  void Apply(const Move& m);

  // Unchecked bit write used by solvers that enumerate assignments.
  void Set(int d, int a, bool value);
  void Clear();

  bool operator==(const Assignment& other) const {
    return num_entries_ == other.num_entries_ &&
           num_adversaries_ == other.num_adversaries_ && bits_ == other.bits_;
  }

 private:
  void CheckIds(int d, int a) const;

  int num_entries_ = 0;
  int num_adversaries_ = 0;
  std::vector<uint8_t> bits_;
  std::vector<int> counts_;
  int unassigned_ = 0;
};

// Value-semantics form of Assignment::Apply.
Assignment ApplyMove(Assignment a, const Move& m);

}  // namespace privpart

#endif  // PRIVPART_ASSIGNMENT_H_
