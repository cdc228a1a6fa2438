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


// Experiment runner: instance sources, algorithm dispatch, the worker pool
// over (algorithm, k, seed) cells, and the CSV/JSON reports.

#ifndef PRIVPART_EXPERIMENT_H_
#define PRIVPART_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geodata.h"
#include "instance.h"
#include "json.hpp"
#include "result.h"
#include "synth.h"

namespace privpart {

struct AlgorithmSpec {
  std::string name;  // rand+, lp, ilp, greedy, greedyl, grasp, graspl
  int n = 0;         // GRASP list size; 0 picks the default
  int r = 0;         // restarts; 0 picks the default
  int runs = 0;      // RAND+ restarts or LP roundings; 0 picks the default

  // Defaults filled in for k adversaries.
  AlgorithmSpec Resolved(int k) const;
};

// Throws Error(kInvalidArgument) for an unknown algorithm name.
AlgorithmSpec ParseAlgorithm(const nlohmann::json& item);

// Runs one algorithm. lp and ilp reject families other than step and
// linear; ilp raises Error(kSizeGuard) on instances beyond its limit.
SolveResult RunAlgorithm(const Instance& instance, const AlgorithmSpec& spec,
                         uint64_t seed);

// Checks that `spec` may run on `instance` without running it.
void CheckApplicable(const Instance& instance, const AlgorithmSpec& spec);

struct InstanceSource {
  enum class Kind { kFile, kSynth, kGeodata };
  Kind kind = Kind::kSynth;
  std::string path;  // file
  SynthConfig synth;
  std::string checkins_path, friendships_path;  // geodata
  LocationConfig location;
};

struct ExperimentConfig {
  InstanceSource source;
  std::vector<AlgorithmSpec> algorithms;
  std::vector<int> ks;  // ignored for file sources
  std::vector<uint64_t> seeds;
  std::vector<double> curve_thresholds;
  std::string output_dir;
};

// Throws Error(kParse) / Error(kInvalidArgument) on bad configs.
ExperimentConfig ParseExperimentConfig(const nlohmann::json& doc);

struct ResultRow {
  std::string algorithm;
  uint64_t seed = 0;
  int k = 0;
  int t = 0;
  int num_entries = 0;
  int num_properties = 0;
  double utility = 0.0;
  double disclosure = 0.0;
  double objective = 0.0;
  int fully_disclosed = 0;
  double wall_ms = 0.0;
  std::vector<int> curve;  // counts per configured threshold
};

struct GroupSummary {
  std::string algorithm;
  int k = 0;
  int count = 0;
  double utility_mean = 0, utility_se = 0;
  double disclosure_mean = 0, disclosure_se = 0;
  double objective_mean = 0, objective_se = 0;
  double fully_disclosed_mean = 0, fully_disclosed_se = 0;
};

struct ExperimentReport {
  std::vector<ResultRow> rows;  // sorted by (algorithm order, k, seed)
  std::vector<GroupSummary> summary;
  std::string results_csv;
  std::string timings_csv;
  std::string curves_csv;
  std::string summary_json;
};

// Runs every (algorithm, k, seed) cell on up to `workers` threads and, when
// cfg.output_dir is non-empty, writes results.csv, timings.csv, curves.csv
// and summary.json there.
ExperimentReport RunExperiment(const ExperimentConfig& cfg, int workers);

// Builds the instance for one (k, seed) cell of a config.
Instance BuildInstance(const InstanceSource& source, int k, uint64_t seed);

// Properties whose max-over-adversaries disclosure reaches `threshold`.
int CountFullyDisclosed(const SolveResult& result,
                        double threshold = 1.0 - 1e-9);

// Properties strictly above each threshold. Thresholds must be ascending.
std::vector<int> DisclosureLevelCurve(std::span<const double> disclosure,
                                      std::span<const double> thresholds);

// Mean and standard error of the mean (sample standard deviation / sqrt(n)).
std::pair<double, double> MeanAndStdErr(std::span<const double> values);

}  // namespace privpart

#endif  // PRIVPART_EXPERIMENT_H_
