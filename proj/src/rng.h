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

#ifndef PRIVPART_RNG_H_
#define PRIVPART_RNG_H_

#include <cstdint>
#include <random>

namespace privpart {

using Rng = std::mt19937_64;

// splitmix64 finalizer.
inline uint64_t MixSeed(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream `stream` of the generator family rooted at `seed`.
inline Rng DeriveRng(uint64_t seed, uint64_t stream) {
  return Rng(MixSeed(MixSeed(seed) ^ MixSeed(stream + 0x632be59bd9b4e019ULL)));
}

inline double UniformReal(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int UniformInt(Rng& rng, int lo, int hi_inclusive) {
  return std::uniform_int_distribution<int>(lo, hi_inclusive)(rng);
}

inline bool Bernoulli(Rng& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

}  // namespace privpart

#endif  // PRIVPART_RNG_H_
