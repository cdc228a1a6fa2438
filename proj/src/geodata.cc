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


#include "geodata.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "errors.h"
#include "rng.h"

namespace privpart {
namespace {

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> SplitFields(const std::string& line) {
  const char sep = line.find('\t') != std::string::npos ? '\t' : ',';
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, sep)) fields.push_back(Trim(field));
  if (!line.empty() && line.back() == sep) fields.emplace_back();
  return fields;
}

bool IsBlank(const std::string& line) { return Trim(line).empty(); }

}  // namespace

IngestReport IngestCheckins(std::istream& in) {
  if (!in.good()) Fail(ErrorCode::kIo, "check-in stream is not readable");
  std::map<std::pair<std::string, std::string>, int> counts;
  IngestReport report;
  std::string line;
  while (std::getline(in, line)) {
    if (IsBlank(line)) continue;
    const auto fields = SplitFields(line);
    if (fields.size() != 3 && fields.size() != 5) {
      ++report.skipped_lines;
      continue;
    }
    const std::string& user = fields.front();
    const std::string& location = fields.back();
    if (user.empty() || location.empty()) {
      ++report.skipped_lines;
      continue;
    }
    ++counts[{user, location}];
    ++report.valid_lines;
  }
  if (in.bad()) Fail(ErrorCode::kIo, "error while reading check-ins");
  if (report.valid_lines == 0) {
    Fail(ErrorCode::kParse, "no valid check-in lines (" +
                                std::to_string(report.skipped_lines) +
                                " skipped)");
  }
  report.entries.reserve(counts.size());
  for (const auto& [key, count] : counts) {
    report.entries.push_back({key.first, key.second, count});
  }
  return report;
}

FriendshipReport ReadFriendships(std::istream& in) {
  if (!in.good()) Fail(ErrorCode::kIo, "friendship stream is not readable");
  std::set<std::pair<std::string, std::string>> edges;
  FriendshipReport report;
  std::string line;
  while (std::getline(in, line)) {
    if (IsBlank(line)) continue;
    const auto fields = SplitFields(line);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      ++report.skipped_lines;
      continue;
    }
    if (fields[0] == fields[1]) continue;
    edges.insert(std::minmax(fields[0], fields[1]));
  }
  if (in.bad()) Fail(ErrorCode::kIo, "error while reading friendships");
  report.edges.assign(edges.begin(), edges.end());
  return report;
}

LocationInstance BuildLocationInstance(
    const std::vector<AggregatedEntry>& entries,
    const std::vector<std::pair<std::string, std::string>>& friendships,
    const LocationConfig& config) {
  Rng rng = DeriveRng(config.seed, 0);
  LocationInstance out{};

  std::set<std::string> users;
  for (const auto& e : entries) users.insert(e.user);
  if (config.max_users > 0 &&
      static_cast<int>(users.size()) > config.max_users) {
    std::vector<std::string> pool(users.begin(), users.end());
    std::shuffle(pool.begin(), pool.end(), rng);
    users = std::set<std::string>(pool.begin(), pool.begin() + config.max_users);
  }

  std::set<std::pair<std::string, std::string>> kept;
  for (const auto& [u, v] : friendships) {
    if (u == v) continue;
    if (users.count(u) && users.count(v)) {
      kept.insert(std::minmax(u, v));
    } else {
      ++out.dropped_edges;
    }
  }
  std::vector<std::pair<std::string, std::string>> edges(kept.begin(),
                                                         kept.end());
  if (config.max_edges > 0 &&
      static_cast<int>(edges.size()) > config.max_edges) {
    std::shuffle(edges.begin(), edges.end(), rng);
    out.dropped_edges += static_cast<int>(edges.size()) - config.max_edges;
    edges.resize(config.max_edges);
    std::sort(edges.begin(), edges.end());
  }
  if (edges.empty()) {
    Fail(ErrorCode::kInvalidArgument,
         "no friendship edge survives filtering");
  }

  // Dense ids in sorted name order; entries in (user, location) order.
  std::vector<AggregatedEntry> kept_entries;
  std::set<std::string> locations;
  for (const auto& e : entries) {
    if (!users.count(e.user)) continue;
    kept_entries.push_back(e);
    locations.insert(e.location);
  }
  std::sort(kept_entries.begin(), kept_entries.end(),
            [](const AggregatedEntry& x, const AggregatedEntry& y) {
              return std::tie(x.user, x.location) < std::tie(y.user, y.location);
            });
  out.users.assign(users.begin(), users.end());
  out.locations.assign(locations.begin(), locations.end());
  std::map<std::string, int> user_id, location_id;
  for (size_t i = 0; i < out.users.size(); ++i) user_id[out.users[i]] = i;
  for (size_t i = 0; i < out.locations.size(); ++i) {
    location_id[out.locations[i]] = i;
  }

  const int k = config.num_adversaries;
  if (k < 2) Fail(ErrorCode::kInvalidArgument, "need at least 2 adversaries");
  std::vector<int> region(out.locations.size());
  for (int& r : region) r = UniformInt(rng, 0, k - 1);

  InstanceData data;
  data.num_entries = static_cast<int>(kept_entries.size());
  data.num_adversaries = k;
  data.t = config.t;
  data.lambda = config.lambda;
  data.tau_i = config.tau_i;
  data.model = {DisclosureFamily::kCosine, Aggregation::kAverage};
  std::map<std::string, std::vector<int>> entries_of;
  for (int d = 0; d < data.num_entries; ++d) {
    const auto& e = kept_entries[d];
    const int loc = location_id[e.location];
    data.payloads.push_back({user_id[e.user], loc, e.count});
    entries_of[e.user].push_back(d);
    for (int a = 0; a < k; ++a) {
      data.utility_weights.push_back(region[loc] == a
                                         ? UniformReal(rng, 0.8, 1.0)
                                         : 0.1);
    }
  }
  for (const auto& [u, v] : edges) {
    SensitiveProperty prop;
    prop.members = entries_of[u];
    prop.members.insert(prop.members.end(), entries_of[v].begin(),
                        entries_of[v].end());
    prop.users = std::array<int, 2>{user_id[u], user_id[v]};
    data.properties.push_back(std::move(prop));
  }
  out.instance = Instance::Validate(std::move(data));
  return out;
}

SyntheticCheckins SynthesizeCheckins(const CheckinSynthConfig& config) {
  if (config.communities < 0 || config.side < 1 || config.loners < 0 ||
      config.shared_locations < 0 ||
      config.shared_locations > config.locations_per_user ||
      config.shared_min_count < 1 ||
      config.shared_max_count < config.shared_min_count) {
    Fail(ErrorCode::kInvalidArgument, "invalid check-in synthesis config");
  }
  Rng rng = DeriveRng(config.seed, 1);
  std::ostringstream checkins, friendships;
  int next_location = 0;
  int stamp = 0;
  auto emit = [&](const std::string& user, int location, int times) {
    for (int i = 0; i < times; ++i) {
      checkins << user << "\t2010-01-01T00:00:" << (stamp++ % 60) << "Z\t"
               << UniformReal(rng, -90.0, 90.0) << "\t"
               << UniformReal(rng, -180.0, 180.0) << "\tloc" << location
               << "\n";
    }
  };
  auto name = [](const char* prefix, int i) {
    return std::string(prefix) + std::to_string(i);
  };
  int user_counter = 0;
  for (int c = 0; c < config.communities; ++c) {
    const int shared_base = next_location;
    next_location += config.shared_locations;
    std::vector<std::string> left, right;
    for (int i = 0; i < 2 * config.side; ++i) {
      const std::string user = name("u", user_counter++);
      (i < config.side ? left : right).push_back(user);
      for (int s = 0; s < config.shared_locations; ++s) {
        emit(user, shared_base + s,
             UniformInt(rng, config.shared_min_count, config.shared_max_count));
      }
      for (int s = config.shared_locations; s < config.locations_per_user;
           ++s) {
        emit(user, next_location++, 1);
      }
    }
    for (const auto& l : left) {
      for (const auto& r : right) friendships << l << "\t" << r << "\n";
    }
  }
  for (int i = 0; i < config.loners; ++i) {
    const std::string user = name("u", user_counter++);
    for (int s = 0; s < config.locations_per_user; ++s) {
      emit(user, next_location++, 1);
    }
  }
  return {checkins.str(), friendships.str()};
}

}  // namespace privpart
