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


#include "io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "errors.h"

namespace privpart {

using nlohmann::json;

json InstanceToJson(const Instance& instance) {
  const InstanceData& data = instance.data();
  json doc;
  doc["num_entries"] = data.num_entries;
  doc["num_adversaries"] = data.num_adversaries;
  doc["t"] = data.t;
  doc["lambda"] = data.lambda;
  doc["tau_I"] = data.tau_i;
  doc["model"] = {{"family", FamilyName(data.model.family)},
                  {"aggregation", AggregationName(data.model.aggregation)}};
  json props = json::array();
  for (const auto& p : data.properties) {
    json jp = {{"id", p.id}, {"members", p.members}};
    if (!p.weights.empty()) jp["weights"] = p.weights;
    if (p.users) jp["users"] = {(*p.users)[0], (*p.users)[1]};
    props.push_back(std::move(jp));
  }
  doc["properties"] = std::move(props);
  json weights = json::array();
  for (int d = 0; d < data.num_entries; ++d) {
    const auto row = instance.weights_of(d);
    weights.push_back(std::vector<double>(row.begin(), row.end()));
  }
  doc["utility_weights"] = std::move(weights);
  if (!data.payloads.empty()) {
    json entries = json::array();
    for (const auto& e : data.payloads) {
      entries.push_back(
          {{"user", e.user}, {"location", e.location}, {"count", e.count}});
    }
    doc["entries"] = std::move(entries);
  }
  return doc;
}

Instance InstanceFromJson(const json& doc) {
  InstanceData data;
  try {
    data.num_entries = doc.at("num_entries").get<int>();
    data.num_adversaries = doc.at("num_adversaries").get<int>();
    data.t = doc.at("t").get<int>();
    data.lambda = doc.value("lambda", 1.0);
    data.tau_i = doc.value("tau_I", 0.0);
    const json& model = doc.at("model");
    data.model.family = ParseFamily(model.at("family").get<std::string>());
    data.model.aggregation =
        ParseAggregation(model.value("aggregation", std::string("worst")));
    for (const json& jp : doc.at("properties")) {
      SensitiveProperty p;
      p.members = jp.at("members").get<std::vector<int>>();
      if (jp.contains("weights")) {
        p.weights = jp.at("weights").get<std::vector<double>>();
      }
      if (jp.contains("users")) {
        const auto u = jp.at("users").get<std::vector<int>>();
        if (u.size() != 2) {
          Fail(ErrorCode::kParse, "property users must list two ids");
        }
        p.users = std::array<int, 2>{u[0], u[1]};
      }
      data.properties.push_back(std::move(p));
    }
    const json& rows = doc.at("utility_weights");
    if (!rows.is_array() ||
        rows.size() != static_cast<size_t>(std::max(0, data.num_entries))) {
      Fail(ErrorCode::kParse, "utility_weights must have one row per entry");
    }
    for (const json& row : rows) {
      const auto values = row.get<std::vector<double>>();
      if (values.size() != static_cast<size_t>(data.num_adversaries)) {
        Fail(ErrorCode::kParse,
             "utility_weights rows must have num_adversaries columns");
      }
      data.utility_weights.insert(data.utility_weights.end(), values.begin(),
                                  values.end());
    }
    if (doc.contains("entries")) {
      for (const json& je : doc.at("entries")) {
        data.payloads.push_back({je.at("user").get<int>(),
                                 je.at("location").get<int>(),
                                 je.at("count").get<int>()});
      }
    }
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, std::string("malformed instance: ") + e.what());
  }
  return Instance::Validate(std::move(data));
}

Instance InstanceFromString(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  return InstanceFromJson(doc);
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) Fail(ErrorCode::kIo, "error reading '" + path + "'");
  return ss.str();
}

void WriteTextFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) Fail(ErrorCode::kIo, "cannot write '" + path + "'");
  out << contents;
  out.flush();
  if (!out) Fail(ErrorCode::kIo, "error writing '" + path + "'");
}

Instance LoadInstance(const std::string& path) {
  return InstanceFromString(ReadTextFile(path));
}

void SaveInstance(const Instance& instance, const std::string& path) {
  WriteTextFile(path, InstanceToJson(instance).dump(1) + "\n");
}

json ResultToJson(const SolveResult& result) {
  json assignment = json::array();
  for (int d = 0; d < result.assignment.num_entries(); ++d) {
    assignment.push_back(result.assignment.adversaries_of(d));
  }
  return {
      {"algorithm", result.algorithm},
      {"objective",
       {{"utility", result.objective.utility},
        {"disclosure", result.objective.disclosure},
        {"unassigned", result.objective.unassigned},
        {"value", result.objective.value}}},
      {"assignment", std::move(assignment)},
      {"per_property_disclosure", result.per_property_disclosure},
      {"iterations", result.iterations},
      {"wall_ms", result.wall_ms},
      {"seed", result.seed_used},
  };
}

}  // namespace privpart
