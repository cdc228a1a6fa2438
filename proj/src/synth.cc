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


#include "synth.h"

#include "errors.h"
#include "rng.h"

namespace privpart {
namespace {
constexpr int kMaxPropertyRedraws = 100;
}  // namespace

Instance GenerateInstance(const SynthConfig& config) {
  if (!(config.p_f >= 0.0 && config.p_f <= 1.0) ||
      !(config.p_u >= 0.0 && config.p_u <= 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "p_f and p_u must lie in [0,1]");
  }
  if (config.num_entries <= 0 || config.num_properties < 0 ||
      config.num_adversaries < 2) {
    Fail(ErrorCode::kInvalidArgument, "invalid synthetic instance dimensions");
  }
  Rng rng = DeriveRng(config.seed, 0);
  InstanceData data;
  data.num_entries = config.num_entries;
  data.num_adversaries = config.num_adversaries;
  data.t = config.t;
  data.lambda = config.lambda;
  data.tau_i = config.tau_i;
  data.model = config.model;

  const double k = config.num_adversaries;
  const double u_min = UniformReal(rng, 0.0, 0.1);
  data.utility_weights.reserve(static_cast<size_t>(config.num_entries) *
                               config.num_adversaries);
  for (int d = 0; d < config.num_entries; ++d) {
    for (int a = 0; a < config.num_adversaries; ++a) {
      const double w =
          Bernoulli(rng, config.p_u) ? UniformReal(rng, 0.8, 1.0) : u_min;
      data.utility_weights.push_back(w / k);
    }
  }

  data.properties.resize(config.num_properties);
  for (int p = 0; p < config.num_properties; ++p) {
    auto& members = data.properties[p].members;
    for (int attempt = 0; members.empty(); ++attempt) {
      if (attempt == kMaxPropertyRedraws) {
        Fail(ErrorCode::kInvalidArgument,
             "p_f too small for non-empty properties");
      }
      for (int d = 0; d < config.num_entries; ++d) {
        if (Bernoulli(rng, config.p_f)) members.push_back(d);
      }
    }
    data.properties[p].weights.assign(members.size(),
                                      1.0 / static_cast<double>(members.size()));
  }
  return Instance::Validate(std::move(data));
}

}  // namespace privpart
