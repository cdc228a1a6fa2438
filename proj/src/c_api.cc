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


#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <string>

#include "errors.h"
#include "exact.h"
#include "experiment.h"
#include "geodata.h"
#include "io.h"
#include "privpart/privpart.h"
#include "synth.h"
#include "verify.h"

struct pp_instance {
  privpart::Instance value;
};

struct pp_result {
  privpart::SolveResult value;
};

namespace {

thread_local std::string last_error;

pp_status Record(pp_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `body`, mapping exceptions to status codes.
template <typename F>
pp_status Guard(F&& body) {
  try {
    last_error.clear();
    body();
    return PP_OK;
  } catch (const privpart::Error& e) {
    return Record(static_cast<pp_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Record(PP_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Record(PP_INTERNAL, e.what());
  }
}

void Require(bool ok, const char* what) {
  if (!ok) privpart::Fail(privpart::ErrorCode::kInvalidArgument, what);
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const char* const kAlgorithmNames[] = {"rand+",   "lp",    "ilp",   "greedy",
                                       "greedyl", "grasp", "graspl"};

}  // namespace

extern "C" {

const char* pp_version(void) { return "0.1.0"; }

const char* pp_last_error(void) { return last_error.c_str(); }

const char* pp_status_name(pp_status status) {
  switch (status) {
    case PP_OK:
      return "ok";
    case PP_INVALID_ARGUMENT:
      return "invalid argument";
    case PP_INFEASIBLE:
      return "infeasible";
    case PP_SIZE_GUARD:
      return "size guard";
    case PP_IO:
      return "io error";
    case PP_PARSE:
      return "parse error";
    case PP_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

void pp_string_free(char* s) { std::free(s); }

pp_status pp_instance_from_json(const char* json, pp_instance** out) {
  return Guard([&] {
    Require(json != nullptr && out != nullptr, "null argument");
    *out = new pp_instance{privpart::InstanceFromString(json)};
  });
}

pp_status pp_instance_load(const char* path, pp_instance** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "null argument");
    *out = new pp_instance{privpart::LoadInstance(path)};
  });
}

pp_status pp_instance_save(const pp_instance* instance, const char* path) {
  return Guard([&] {
    Require(instance != nullptr && path != nullptr, "null argument");
    privpart::SaveInstance(instance->value, path);
  });
}

pp_status pp_instance_to_json(const pp_instance* instance, char** out) {
  return Guard([&] {
    Require(instance != nullptr && out != nullptr, "null argument");
    *out = CopyString(privpart::InstanceToJson(instance->value).dump(1));
  });
}

pp_status pp_instance_info_get(const pp_instance* instance,
                               pp_instance_info* out) {
  return Guard([&] {
    Require(instance != nullptr && out != nullptr, "null argument");
    const privpart::Instance& inst = instance->value;
    out->num_entries = inst.num_entries();
    out->num_adversaries = inst.num_adversaries();
    out->num_properties = inst.num_properties();
    out->t = inst.t();
    out->lambda = inst.lambda();
    out->tau_i = inst.tau_i();
    out->dimension = inst.hypergraph().dimension();
    out->dimension_warning = inst.dimension_warning() ? 1 : 0;
    out->family = privpart::FamilyName(inst.model().family).data();
    out->aggregation =
        privpart::AggregationName(inst.model().aggregation).data();
  });
}

void pp_instance_free(pp_instance* instance) { delete instance; }

void pp_synth_config_init(pp_synth_config* config) {
  if (config == nullptr) return;
  const privpart::SynthConfig d;
  config->num_entries = d.num_entries;
  config->num_properties = d.num_properties;
  config->num_adversaries = d.num_adversaries;
  config->t = d.t;
  config->p_f = d.p_f;
  config->p_u = d.p_u;
  config->lambda = d.lambda;
  config->tau_i = d.tau_i;
  config->family = "linear";
  config->aggregation = "worst";
  config->seed = 0;
}

pp_status pp_generate_instance(const pp_synth_config* config,
                               pp_instance** out) {
  return Guard([&] {
    Require(config != nullptr && out != nullptr, "null argument");
    privpart::SynthConfig c;
    c.num_entries = config->num_entries;
    c.num_properties = config->num_properties;
    c.num_adversaries = config->num_adversaries;
    c.t = config->t;
    c.p_f = config->p_f;
    c.p_u = config->p_u;
    c.lambda = config->lambda;
    c.tau_i = config->tau_i;
    c.model.family =
        privpart::ParseFamily(config->family ? config->family : "linear");
    c.model.aggregation = privpart::ParseAggregation(
        config->aggregation ? config->aggregation : "worst");
    c.seed = config->seed;
    *out = new pp_instance{privpart::GenerateInstance(c)};
  });
}

void pp_location_config_init(pp_location_config* config) {
  if (config == nullptr) return;
  const privpart::LocationConfig d;
  config->num_adversaries = d.num_adversaries;
  config->t = d.t;
  config->lambda = d.lambda;
  config->tau_i = d.tau_i;
  config->seed = d.seed;
  config->max_users = d.max_users;
  config->max_edges = d.max_edges;
}

pp_status pp_ingest_location_instance(const char* checkins_path,
                                      const char* friendships_path,
                                      const pp_location_config* config,
                                      pp_instance** out,
                                      pp_ingest_stats* stats) {
  return Guard([&] {
    Require(checkins_path != nullptr && friendships_path != nullptr &&
                config != nullptr && out != nullptr,
            "null argument");
    std::ifstream checkins(checkins_path);
    if (!checkins) {
      privpart::Fail(privpart::ErrorCode::kIo,
                     std::string("cannot open '") + checkins_path + "'");
    }
    std::ifstream friends(friendships_path);
    if (!friends) {
      privpart::Fail(privpart::ErrorCode::kIo,
                     std::string("cannot open '") + friendships_path + "'");
    }
    const privpart::IngestReport ingest = privpart::IngestCheckins(checkins);
    const privpart::FriendshipReport graph = privpart::ReadFriendships(friends);
    privpart::LocationConfig c;
    c.num_adversaries = config->num_adversaries;
    c.t = config->t;
    c.lambda = config->lambda;
    c.tau_i = config->tau_i;
    c.seed = config->seed;
    c.max_users = config->max_users;
    c.max_edges = config->max_edges;
    privpart::LocationInstance built =
        privpart::BuildLocationInstance(ingest.entries, graph.edges, c);
    if (stats != nullptr) {
      stats->valid_lines = ingest.valid_lines;
      stats->skipped_lines = ingest.skipped_lines + graph.skipped_lines;
      stats->entries = built.instance.num_entries();
      stats->dropped_edges = built.dropped_edges;
    }
    *out = new pp_instance{std::move(built.instance)};
  });
}

pp_status pp_synthesize_checkins(uint64_t seed, char** checkins,
                                 char** friendships) {
  return Guard([&] {
    Require(checkins != nullptr && friendships != nullptr, "null argument");
    privpart::CheckinSynthConfig c;
    c.seed = seed;
    const privpart::SyntheticCheckins data = privpart::SynthesizeCheckins(c);
    char* a = CopyString(data.checkins);
    try {
      *friendships = CopyString(data.friendships);
    } catch (...) {
      std::free(a);
      throw;
    }
    *checkins = a;
  });
}

pp_status pp_algorithm_from_name(const char* name, pp_algorithm* out) {
  return Guard([&] {
    Require(name != nullptr && out != nullptr, "null argument");
    for (int i = 0; i < 7; ++i) {
      if (std::strcmp(name, kAlgorithmNames[i]) == 0) {
        *out = static_cast<pp_algorithm>(i);
        return;
      }
    }
    privpart::Fail(privpart::ErrorCode::kInvalidArgument,
                   std::string("unknown algorithm '") + name + "'");
  });
}

const char* pp_algorithm_name(pp_algorithm algorithm) {
  const int i = static_cast<int>(algorithm);
  return i >= 0 && i < 7 ? kAlgorithmNames[i] : "unknown";
}

pp_status pp_solve(const pp_instance* instance, pp_algorithm algorithm,
                   const pp_solve_options* options, pp_result** out) {
  return Guard([&] {
    Require(instance != nullptr && out != nullptr, "null argument");
    const int i = static_cast<int>(algorithm);
    Require(i >= 0 && i < 7, "unknown algorithm");
    privpart::AlgorithmSpec spec;
    spec.name = kAlgorithmNames[i];
    uint64_t seed = 0;
    if (options != nullptr) {
      Require(options->n >= 0 && options->r >= 0 && options->runs >= 0,
              "solve options must be non-negative");
      spec.n = options->n;
      spec.r = options->r;
      spec.runs = options->runs;
      seed = options->seed;
    }
    *out = new pp_result{privpart::RunAlgorithm(instance->value, spec, seed)};
  });
}

pp_status pp_solve_exact(const pp_instance* instance, const char* formulation,
                         pp_result** out) {
  return Guard([&] {
    Require(instance != nullptr && out != nullptr, "null argument");
    const auto f = privpart::ParseFormulation(
        formulation != nullptr ? formulation : "tradeoff");
    *out = new pp_result{privpart::SolveExact(instance->value, f)};
  });
}

pp_status pp_result_summary_get(const pp_result* result,
                                pp_result_summary* out) {
  return Guard([&] {
    Require(result != nullptr && out != nullptr, "null argument");
    const privpart::SolveResult& r = result->value;
    out->utility = r.objective.utility;
    out->disclosure = r.objective.disclosure;
    out->objective = r.objective.value;
    out->unassigned = r.objective.unassigned;
    out->fully_disclosed = privpart::CountFullyDisclosed(r);
    out->iterations = r.iterations;
    out->wall_ms = r.wall_ms;
    out->seed = r.seed_used;
  });
}

pp_status pp_result_assignment(const pp_result* result, uint8_t* bits,
                               size_t len) {
  return Guard([&] {
    Require(result != nullptr && bits != nullptr, "null argument");
    const privpart::Assignment& s = result->value.assignment;
    const size_t k = s.num_adversaries();
    Require(len == static_cast<size_t>(s.num_entries()) * k,
            "buffer length must equal |D| * k");
    for (int d = 0; d < s.num_entries(); ++d) {
      for (size_t a = 0; a < k; ++a) bits[d * k + a] = s.test(d, a) ? 1 : 0;
    }
  });
}

pp_status pp_result_property_disclosure(const pp_result* result, double* out,
                                        size_t len) {
  return Guard([&] {
    Require(result != nullptr && (out != nullptr || len == 0),
            "null argument");
    const auto& v = result->value.per_property_disclosure;
    Require(len == v.size(), "buffer length must equal |P|");
    std::copy(v.begin(), v.end(), out);
  });
}

pp_status pp_result_to_json(const pp_result* result, char** out) {
  return Guard([&] {
    Require(result != nullptr && out != nullptr, "null argument");
    *out = CopyString(privpart::ResultToJson(result->value).dump(1));
  });
}

pp_status pp_disclosure_curve(const pp_result* result,
                              const double* thresholds, size_t n,
                              int* counts) {
  return Guard([&] {
    Require(result != nullptr && ((thresholds != nullptr && counts != nullptr) ||
                                  n == 0),
            "null argument");
    const auto c = privpart::DisclosureLevelCurve(
        result->value.per_property_disclosure,
        std::span<const double>(thresholds, n));
    std::copy(c.begin(), c.end(), counts);
  });
}

void pp_result_free(pp_result* result) { delete result; }

pp_status pp_run_experiment(const char* config_json, int workers,
                            char** summary) {
  return Guard([&] {
    Require(config_json != nullptr, "null argument");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(config_json);
    } catch (const nlohmann::json::exception& e) {
      privpart::Fail(privpart::ErrorCode::kParse,
                     std::string("invalid config JSON: ") + e.what());
    }
    const privpart::ExperimentReport report = privpart::RunExperiment(
        privpart::ParseExperimentConfig(doc), workers);
    if (summary != nullptr) *summary = CopyString(report.summary_json);
  });
}

pp_status pp_verify(const pp_instance* instance, uint64_t seed, int* passed,
                    char** report) {
  return Guard([&] {
    Require(instance != nullptr && passed != nullptr, "null argument");
    const privpart::VerifyReport r =
        privpart::VerifyInstance(instance->value, seed);
    *passed = r.passed() ? 1 : 0;
    if (report != nullptr) {
      nlohmann::json checks = nlohmann::json::array();
      for (const auto& c : r.checks) {
        checks.push_back(
            {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      }
      *report = CopyString(
          nlohmann::json{{"passed", r.passed()}, {"checks", checks}}.dump(2));
    }
  });
}

}  // extern "C"
