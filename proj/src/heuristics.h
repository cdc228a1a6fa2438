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


// Construction, GREEDY/GRASP candidate selection, single-pass local search,
// the repeated restart loop, and the RAND+ baseline.

#ifndef PRIVPART_HEURISTICS_H_
#define PRIVPART_HEURISTICS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "instance.h"
#include "objective.h"
#include "result.h"
#include "rng.h"

namespace privpart {

enum class Strategy { kGreedy, kGrasp };
enum class Scope { kGlobal, kMyopic };

struct SearchParams {
  Strategy strategy = Strategy::kGreedy;
  Scope scope = Scope::kGlobal;
  int n = 5;  // GRASP candidate list size
  int r = 1;  // restarts
  uint64_t seed = 0;
  // Cross-check every incremental evaluation against a full recomputation.
  bool verify = false;
};

// Throws Error(kInvalidArgument) unless n >= 1 and r >= 1.
void ValidateParams(const SearchParams& params);

// "greedy", "grasp", "greedyl" or "graspl".
std::string AlgorithmName(const SearchParams& params);

struct Candidate {
  Move move;
  double value;  // objective after the move
};

// Only values above the current objective by more than this count as an
// improvement; it absorbs floating-point noise in incremental evaluation.
inline constexpr double kImprovementEpsilon = 1e-12;

// GREEDY returns the first candidate (in the given order) of maximal value;
// GRASP draws uniformly from the n best improving candidates. Returns
// nothing when no candidate beats `current`. The rng is untouched unless
// there are at least two candidates to choose from.
std::optional<Move> PickNextBest(std::span<const Candidate> candidates,
                                 double current, const SearchParams& params,
                                 Rng& rng);

// Builds an assignment on top of `state`. Returns the number of moves made.
int64_t Construct(SearchState& state, const SearchParams& params, Rng& rng);

// One pass over the entries in random order, applying the best
// add/remove/swap move per entry. Returns the number of moves made.
int64_t LocalSearch(SearchState& state, const SearchParams& params, Rng& rng);

// r independent construction + local search runs; best objective wins,
// earlier runs win ties.
SolveResult Solve(const Instance& instance, const SearchParams& params);

// Each run gives every entry exactly t adversaries sampled without
// replacement proportionally to w_da (uniformly for an all-zero row).
SolveResult RandPlus(const Instance& instance, int runs, uint64_t seed);

}  // namespace privpart

#endif  // PRIVPART_HEURISTICS_H_
