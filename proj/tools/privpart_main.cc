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


// Command-line front end: gen, ingest, solve, bench, verify.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "privpart/privpart.h"

namespace {

// Exit codes: 0 success, 2 infeasible, 3 size guard, 1 anything else.
int ExitCode(pp_status status) {
  switch (status) {
    case PP_OK:
      return 0;
    case PP_INFEASIBLE:
      return 2;
    case PP_SIZE_GUARD:
      return 3;
    default:
      return 1;
  }
}

int Report(pp_status status) {
  if (status != PP_OK) {
    std::cerr << "privpart: " << pp_status_name(status) << ": "
              << pp_last_error() << "\n";
  }
  return ExitCode(status);
}

bool WriteFile(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  return static_cast<bool>(out);
}

int Emit(const std::string& path, char* text) {
  int rc = 0;
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
  } else if (!WriteFile(path, text)) {
    std::cerr << "privpart: cannot write '" << path << "'\n";
    rc = 1;
  }
  pp_string_free(text);
  return rc;
}

int WorkersFromEnv(int fallback) {
  const char* env = std::getenv("PRIVPART_WORKERS");
  if (env == nullptr || *env == '\0') return fallback;
  const int n = std::atoi(env);
  return n > 0 ? n : fallback;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Privacy-aware data partitioning across k adversaries"};
  app.set_version_flag("--version", std::string(pp_version()));
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a synthetic instance");
  pp_synth_config synth;
  pp_synth_config_init(&synth);
  std::string family = "linear", aggregation = "worst", gen_out;
  std::string checkins_out, friendships_out;
  gen->add_option("--entries", synth.num_entries, "|D|");
  gen->add_option("--properties", synth.num_properties, "|P|");
  gen->add_option("-k,--adversaries", synth.num_adversaries, "k");
  gen->add_option("-t", synth.t, "max adversaries per entry");
  gen->add_option("--pf", synth.p_f, "edge probability");
  gen->add_option("--pu", synth.p_u, "high-utility probability");
  gen->add_option("--lambda", synth.lambda);
  gen->add_option("--tau", synth.tau_i, "tau_I");
  gen->add_option("--family", family)
      ->check(CLI::IsMember({"step", "linear", "quadratic", "cosine"}));
  gen->add_option("--aggregation", aggregation)
      ->check(CLI::IsMember({"worst", "average"}));
  gen->add_option("--seed", synth.seed);
  gen->add_option("-o,--out", gen_out, "instance JSON (default stdout)");
  gen->add_option("--checkins-out", checkins_out,
                  "write synthetic check-ins instead of an instance");
  gen->add_option("--friendships-out", friendships_out,
                  "friendship file for --checkins-out");

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Build an instance from check-ins");
  pp_location_config loc;
  pp_location_config_init(&loc);
  std::string checkins_in, friendships_in, ingest_out;
  ingest->add_option("--checkins", checkins_in)->required();
  ingest->add_option("--friendships", friendships_in)->required();
  ingest->add_option("-k,--adversaries", loc.num_adversaries);
  ingest->add_option("-t", loc.t);
  ingest->add_option("--lambda", loc.lambda);
  ingest->add_option("--tau", loc.tau_i);
  ingest->add_option("--seed", loc.seed);
  ingest->add_option("--max-users", loc.max_users);
  ingest->add_option("--max-edges", loc.max_edges);
  ingest->add_option("-o,--out", ingest_out);

  // solve
  auto* solve = app.add_subcommand("solve", "Run one algorithm on an instance");
  std::string instance_path, algorithm = "greedy", formulation = "tradeoff",
                             solve_out;
  pp_solve_options opts{0, 0, 0, 0};
  solve->add_option("-i,--instance", instance_path)->required();
  solve->add_option("-a,--algorithm", algorithm)
      ->check(CLI::IsMember(
          {"rand+", "lp", "ilp", "greedy", "greedyl", "grasp", "graspl"}));
  solve->add_option("--formulation", formulation, "ilp only")
      ->check(CLI::IsMember({"tradeoff", "discbudget", "maxmin"}));
  solve->add_option("--n", opts.n, "GRASP list size");
  solve->add_option("--r", opts.r, "restarts");
  solve->add_option("--runs", opts.runs, "RAND+ restarts / LP roundings");
  solve->add_option("--seed", opts.seed);
  solve->add_option("-o,--out", solve_out, "result JSON (default stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "Run an experiment config");
  std::string config_path;
  int workers = 0;
  bench->add_option("-c,--config", config_path)->required();
  bench->add_option("-w,--workers", workers,
                    "worker threads (default PRIVPART_WORKERS or 1)");

  // verify
  auto* verify = app.add_subcommand("verify", "Oracle cross-checks");
  std::string verify_path;
  uint64_t verify_seed = 0;
  verify->add_option("-i,--instance", verify_path)->required();
  verify->add_option("--seed", verify_seed);

  CLI11_PARSE(app, argc, argv);

  if (*gen) {
    if (!checkins_out.empty() || !friendships_out.empty()) {
      if (checkins_out.empty() || friendships_out.empty()) {
        std::cerr << "privpart: --checkins-out and --friendships-out go "
                     "together\n";
        return 1;
      }
      char* c = nullptr;
      char* f = nullptr;
      const pp_status s = pp_synthesize_checkins(synth.seed, &c, &f);
      if (s != PP_OK) return Report(s);
      const int rc = Emit(checkins_out, c) | Emit(friendships_out, f);
      return rc;
    }
    synth.family = family.c_str();
    synth.aggregation = aggregation.c_str();
    pp_instance* inst = nullptr;
    pp_status s = pp_generate_instance(&synth, &inst);
    if (s != PP_OK) return Report(s);
    char* json = nullptr;
    s = pp_instance_to_json(inst, &json);
    pp_instance_free(inst);
    if (s != PP_OK) return Report(s);
    return Emit(gen_out, json);
  }

  if (*ingest) {
    pp_instance* inst = nullptr;
    pp_ingest_stats stats{};
    pp_status s = pp_ingest_location_instance(
        checkins_in.c_str(), friendships_in.c_str(), &loc, &inst, &stats);
    if (s != PP_OK) return Report(s);
    std::cerr << "ingested " << stats.valid_lines << " check-ins into "
              << stats.entries << " entries; skipped " << stats.skipped_lines
              << " malformed lines; dropped " << stats.dropped_edges
              << " friendships\n";
    char* json = nullptr;
    s = pp_instance_to_json(inst, &json);
    pp_instance_free(inst);
    if (s != PP_OK) return Report(s);
    return Emit(ingest_out, json);
  }

  if (*solve) {
    pp_instance* inst = nullptr;
    pp_status s = pp_instance_load(instance_path.c_str(), &inst);
    if (s != PP_OK) return Report(s);
    pp_result* result = nullptr;
    if (algorithm == "ilp") {
      s = pp_solve_exact(inst, formulation.c_str(), &result);
    } else {
      pp_algorithm algo;
      s = pp_algorithm_from_name(algorithm.c_str(), &algo);
      if (s == PP_OK) s = pp_solve(inst, algo, &opts, &result);
    }
    pp_instance_free(inst);
    if (s != PP_OK) return Report(s);
    char* json = nullptr;
    s = pp_result_to_json(result, &json);
    pp_result_free(result);
    if (s != PP_OK) return Report(s);
    return Emit(solve_out, json);
  }

  if (*bench) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "privpart: cannot open '" << config_path << "'\n";
      return 1;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    if (workers <= 0) workers = WorkersFromEnv(1);
    char* summary = nullptr;
    const pp_status s = pp_run_experiment(ss.str().c_str(), workers, &summary);
    if (s != PP_OK) return Report(s);
    std::cout << summary;
    pp_string_free(summary);
    return 0;
  }

  if (*verify) {
    pp_instance* inst = nullptr;
    pp_status s = pp_instance_load(verify_path.c_str(), &inst);
    if (s != PP_OK) return Report(s);
    int passed = 0;
    char* report = nullptr;
    s = pp_verify(inst, verify_seed, &passed, &report);
    pp_instance_free(inst);
    if (s != PP_OK) return Report(s);
    std::cout << report << "\n";
    pp_string_free(report);
    return passed ? 0 : 1;
  }
  return 0;
}
