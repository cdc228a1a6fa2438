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


// Location check-in ingestion and the cosine-disclosure instance built from
// check-ins plus a friendship graph.

#ifndef PRIVPART_GEODATA_H_
#define PRIVPART_GEODATA_H_

#include <cstdint>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "instance.h"

namespace privpart {

struct AggregatedEntry {
  std::string user;
  std::string location;
  int count = 0;

  bool operator==(const AggregatedEntry&) const = default;
};

struct IngestReport {
  // Sorted by (user, location).
  std::vector<AggregatedEntry> entries;
  int64_t valid_lines = 0;
  int64_t skipped_lines = 0;
};

// Reads tab- or comma-separated check-ins: either
//   user, timestamp, location
// or
//   user, timestamp, latitude, longitude, location.
// Blank lines are ignored; other malformed lines are counted and skipped.
// Throws Error(kIo) on a stream error and Error(kParse) when no valid line
// is found.
IngestReport IngestCheckins(std::istream& in);

struct FriendshipReport {
  // Undirected, deduplicated, without self-loops; each pair ordered and the
  // list sorted.
  std::vector<std::pair<std::string, std::string>> edges;
  int64_t skipped_lines = 0;
};

// One "user<sep>user" pair per line.
FriendshipReport ReadFriendships(std::istream& in);

struct LocationConfig {
  int num_adversaries = 2;
  int t = 1;
  double lambda = 1.0;
  double tau_i = 0.0;
  uint64_t seed = 0;
  int max_users = 0;  // 0 keeps all users
  int max_edges = 0;  // 0 keeps all edges
};

struct LocationInstance {
  Instance instance;
  std::vector<std::string> users;      // dense user id -> name
  std::vector<std::string> locations;  // dense location id -> name
  int dropped_edges = 0;  // endpoints without check-ins, or over the caps
};

// Locations are split uniformly at random into k regions; w_da ~ U(0.8, 1)
// when entry d's location lies in adversary a's region and 0.1 otherwise.
// Each surviving friendship becomes a property over all entries of both
// users. Throws Error(kInvalidArgument) when no friendship survives.
LocationInstance BuildLocationInstance(
    const std::vector<AggregatedEntry>& entries,
    const std::vector<std::pair<std::string, std::string>>& friendships,
    const LocationConfig& config);

struct CheckinSynthConfig {
  int communities = 50;
  int side = 4;  // each community is a complete bipartite side x side graph
  int loners = 100;
  int locations_per_user = 10;
  int shared_locations = 3;  // per community, visited by every member
  int shared_min_count = 10;
  int shared_max_count = 12;
  uint64_t seed = 0;
};

struct SyntheticCheckins {
  std::string checkins;     // 5-field tab-separated lines
  std::string friendships;  // "user\tuser" lines
};

// Brightkite-like check-in data: members of a community share a few heavily
// visited places with every friend; everyone else visits only personal
// places once.
SyntheticCheckins SynthesizeCheckins(const CheckinSynthConfig& config);

}  // namespace privpart

#endif  // PRIVPART_GEODATA_H_
