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


#ifndef PRIVPART_SYNTH_H_
#define PRIVPART_SYNTH_H_

#include <cstdint>

#include "instance.h"

namespace privpart {

struct SynthConfig {
  int num_entries = 100;
  int num_properties = 10;
  int num_adversaries = 2;
  int t = 1;
  double p_f = 0.3;  // probability of each entry-property edge
  double p_u = 0.4;  // probability of a high-utility pair
  double lambda = 1.0;
  double tau_i = 0.0;
  DisclosureModel model;
  uint64_t seed = 0;
};

// Random instance: u_min ~ U(0, 0.1) once; each w_da is U(0.8, 1) with
// probability p_u and u_min otherwise, divided by k; each (d, p) edge is
// present with probability p_f and a_dp = 1/|D_p|. A property whose row
// comes out empty is redrawn up to 100 times before failing.
Instance GenerateInstance(const SynthConfig& config);

}  // namespace privpart

#endif  // PRIVPART_SYNTH_H_
