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

#include <algorithm>
#include <chrono>
#include <numeric>
#include <vector>

#include "errors.h"

namespace privpart {
namespace {

double ElapsedMs(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

std::vector<int> RandomOrder(int n, Rng& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

// Appends an add candidate for every adversary entry d does not yet have.
void AddCandidatesFor(const SearchState& state, int d,
                      std::vector<Candidate>& out) {
  const Assignment& s = state.assignment();
  for (int a = 0; a < s.num_adversaries(); ++a) {
    if (s.test(d, a)) continue;
    const Move m = Move::Add(d, a);
    out.push_back({m, state.ValueAfter(m)});
  }
}

int64_t ConstructGlobal(SearchState& state, const SearchParams& params,
                        Rng& rng) {
  const Instance& instance = state.instance();
  const int t = instance.t();
  const int64_t limit = static_cast<int64_t>(t) * instance.num_entries();
  std::vector<Candidate> candidates;
  int64_t moves = 0;
  for (int64_t it = 0; it < limit; ++it) {
    candidates.clear();
    for (int d = 0; d < instance.num_entries(); ++d) {
      if (state.assignment().count(d) < t) AddCandidatesFor(state, d, candidates);
    }
    const auto pick = PickNextBest(candidates, state.value(), params, rng);
    if (!pick) break;
    state.Apply(*pick);
    ++moves;
  }
  return moves;
}

int64_t ConstructMyopic(SearchState& state, const SearchParams& params,
                        Rng& rng) {
  const Instance& instance = state.instance();
  const std::vector<int> order = RandomOrder(instance.num_entries(), rng);
  std::vector<Candidate> candidates;
  int64_t moves = 0;
  for (int pass = 0; pass < instance.t(); ++pass) {
    for (int d : order) {
      if (state.assignment().count(d) >= instance.t()) continue;
      candidates.clear();
      AddCandidatesFor(state, d, candidates);
      const auto pick = PickNextBest(candidates, state.value(), params, rng);
      if (!pick) continue;
      state.Apply(*pick);
      ++moves;
    }
  }
  return moves;
}

}  // namespace

void ValidateParams(const SearchParams& params) {
  if (params.n < 1) {
    Fail(ErrorCode::kInvalidArgument, "GRASP list size n must be >= 1");
  }
  if (params.r < 1) {
    Fail(ErrorCode::kInvalidArgument, "repetitions r must be >= 1");
  }
}

std::string AlgorithmName(const SearchParams& params) {
  std::string name = params.strategy == Strategy::kGreedy ? "greedy" : "grasp";
  if (params.scope == Scope::kMyopic) name += "l";
  return name;
}

std::optional<Move> PickNextBest(std::span<const Candidate> candidates,
                                 double current, const SearchParams& params,
                                 Rng& rng) {
  const double threshold = current + kImprovementEpsilon;
  if (params.strategy == Strategy::kGreedy || params.n == 1) {
    const Candidate* best = nullptr;
    for (const Candidate& c : candidates) {
      if (best == nullptr || c.value > best->value) best = &c;
    }
    if (best == nullptr || !(best->value > threshold)) return std::nullopt;
    return best->move;
  }
  // Indices of improving candidates, best first; stable so earlier
  // candidates precede equal-valued later ones.
  std::vector<size_t> improving;
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i].value > threshold) improving.push_back(i);
  }
  if (improving.empty()) return std::nullopt;
  const size_t keep = std::min(improving.size(), static_cast<size_t>(params.n));
  std::partial_sort(improving.begin(), improving.begin() + keep,
                    improving.end(), [&](size_t x, size_t y) {
                      if (candidates[x].value != candidates[y].value) {
                        return candidates[x].value > candidates[y].value;
                      }
                      return x < y;
                    });
  if (keep == 1) return candidates[improving[0]].move;
  const int pick = UniformInt(rng, 0, static_cast<int>(keep) - 1);
  return candidates[improving[pick]].move;
}

int64_t Construct(SearchState& state, const SearchParams& params, Rng& rng) {
  return params.scope == Scope::kGlobal ? ConstructGlobal(state, params, rng)
                                        : ConstructMyopic(state, params, rng);
}

int64_t LocalSearch(SearchState& state, const SearchParams& params, Rng& rng) {
  (void)params;
  const Instance& instance = state.instance();
  const int k = instance.num_adversaries();
  const std::vector<int> order = RandomOrder(instance.num_entries(), rng);
  int64_t moves = 0;
  for (int d : order) {
    const Assignment& s = state.assignment();
    double best = state.value();
    std::optional<Move> best_move;
    auto consider = [&](const Move& m) {
      const double g = state.ValueAfter(m);
      if (g > best + kImprovementEpsilon) {
        best = g;
        best_move = m;
      }
    };
    if (s.count(d) < instance.t()) {
      for (int a = 0; a < k; ++a) {
        if (!s.test(d, a)) consider(Move::Add(d, a));
      }
    }
    for (int a = 0; a < k; ++a) {
      if (s.test(d, a)) consider(Move::Remove(d, a));
    }
    for (int from = 0; from < k; ++from) {
      if (!s.test(d, from)) continue;
      for (int to = 0; to < k; ++to) {
        if (!s.test(d, to)) consider(Move::Swap(d, from, to));
      }
    }
    if (best_move) {
      state.Apply(*best_move);
      ++moves;
    }
  }
  return moves;
}

SolveResult Solve(const Instance& instance, const SearchParams& params) {
  ValidateParams(params);
  const auto start = std::chrono::steady_clock::now();
  const Assignment empty(instance.num_entries(), instance.num_adversaries());
  std::optional<Assignment> best;
  double best_value = 0.0;
  int64_t iterations = 0;
  for (int run = 0; run < params.r; ++run) {
    Rng rng = DeriveRng(params.seed, static_cast<uint64_t>(run));
    SearchState state(instance, empty, params.verify);
    iterations += Construct(state, params, rng);
    iterations += LocalSearch(state, params, rng);
    if (!best || state.value() > best_value) {
      best = state.assignment();
      best_value = state.value();
    }
  }
  return MakeResult(instance, std::move(*best), AlgorithmName(params),
                    iterations, ElapsedMs(start), params.seed);
}

SolveResult RandPlus(const Instance& instance, int runs, uint64_t seed) {
  if (runs < 1) Fail(ErrorCode::kInvalidArgument, "runs must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  const int k = instance.num_adversaries();
  const int t = instance.t();
  std::optional<Assignment> best;
  double best_value = 0.0;
  std::vector<double> w(k);
  for (int run = 0; run < runs; ++run) {
    Rng rng = DeriveRng(seed, static_cast<uint64_t>(run));
    Assignment s(instance.num_entries(), k);
    for (int d = 0; d < instance.num_entries(); ++d) {
      const auto row = instance.weights_of(d);
      std::copy(row.begin(), row.end(), w.begin());
      for (int draw = 0; draw < t; ++draw) {
        double total = 0.0;
        for (int a = 0; a < k; ++a) {
          if (!s.test(d, a)) total += w[a];
        }
        int chosen = -1;
        if (total > 0.0) {
          double x = UniformReal(rng, 0.0, total);
          for (int a = 0; a < k; ++a) {
            if (s.test(d, a) || w[a] <= 0.0) continue;
            chosen = a;
            x -= w[a];
            if (x < 0.0) break;
          }
        } else {
          int remaining = k - s.count(d);
          int idx = UniformInt(rng, 0, remaining - 1);
          for (int a = 0; a < k; ++a) {
            if (s.test(d, a)) continue;
            if (idx-- == 0) {
              chosen = a;
              break;
            }
          }
        }
        s.Set(d, chosen, true);
      }
    }
    const double value = TradeoffObjective(instance, s).value;
    if (!best || value > best_value) {
      best = std::move(s);
      best_value = value;
    }
  }
  return MakeResult(instance, std::move(*best), "rand+", runs,
                    ElapsedMs(start), seed);
}

}  // namespace privpart
