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


#include "experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "errors.h"
#include "exact.h"
#include "heuristics.h"
#include "io.h"
#include "relaxation.h"

namespace privpart {

using nlohmann::json;

namespace {

const char* const kAlgorithms[] = {"rand+", "lp",    "ilp",   "greedy",
                                   "greedyl", "grasp", "graspl"};

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

bool NeedsLinearFamily(const std::string& name) {
  return name == "lp" || name == "ilp";
}

}  // namespace

AlgorithmSpec AlgorithmSpec::Resolved(int k) const {
  AlgorithmSpec s = *this;
  if (s.runs == 0) s.runs = 100;
  if (s.r == 0) s.r = (name == "grasp" || name == "graspl") ? 10 : 1;
  if (s.n == 0) s.n = name == "graspl" ? std::min(k, 3) : 5;
  return s;
}

AlgorithmSpec ParseAlgorithm(const json& item) {
  AlgorithmSpec spec;
  try {
    if (item.is_string()) {
      spec.name = item.get<std::string>();
    } else {
      spec.name = item.at("name").get<std::string>();
      spec.n = item.value("n", 0);
      spec.r = item.value("r", 0);
      spec.runs = item.value("runs", 0);
    }
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, std::string("bad algorithm entry: ") + e.what());
  }
  if (std::find(std::begin(kAlgorithms), std::end(kAlgorithms), spec.name) ==
      std::end(kAlgorithms)) {
    Fail(ErrorCode::kInvalidArgument, "unknown algorithm '" + spec.name + "'");
  }
  if (spec.n < 0 || spec.r < 0 || spec.runs < 0) {
    Fail(ErrorCode::kInvalidArgument, "algorithm parameters must be positive");
  }
  return spec;
}

void CheckApplicable(const Instance& instance, const AlgorithmSpec& spec) {
  if (NeedsLinearFamily(spec.name)) {
    const auto family = instance.model().family;
    if (family != DisclosureFamily::kStep &&
        family != DisclosureFamily::kLinear) {
      Fail(ErrorCode::kInvalidArgument,
           spec.name + " requires the step or linear family, got " +
               std::string(FamilyName(family)));
    }
  }
  if (spec.name == "ilp" && !WithinSizeGuard(instance)) {
    Fail(ErrorCode::kSizeGuard,
         "ilp refused: instance with " + std::to_string(instance.num_entries()) +
             " entries exceeds the exact solver size limit");
  }
}

SolveResult RunAlgorithm(const Instance& instance, const AlgorithmSpec& raw,
                         uint64_t seed) {
  const AlgorithmSpec spec = raw.Resolved(instance.num_adversaries());
  CheckApplicable(instance, spec);
  if (spec.name == "rand+") return RandPlus(instance, spec.runs, seed);
  if (spec.name == "lp") {
    return RoundAndRepair(instance, SolveLpRelaxation(instance), spec.runs,
                          seed);
  }
  if (spec.name == "ilp") return SolveExact(instance, Formulation::kTradeoff);
  SearchParams params;
  params.strategy = spec.name.starts_with("grasp") ? Strategy::kGrasp
                                                   : Strategy::kGreedy;
  params.scope = spec.name.ends_with("l") ? Scope::kMyopic : Scope::kGlobal;
  params.n = spec.n;
  params.r = spec.r;
  params.seed = seed;
  return Solve(instance, params);
}

ExperimentConfig ParseExperimentConfig(const json& doc) {
  ExperimentConfig cfg;
  try {
    const json& src = doc.at("instance");
    if (src.contains("file")) {
      cfg.source.kind = InstanceSource::Kind::kFile;
      cfg.source.path = src.at("file").get<std::string>();
    } else if (src.contains("synth")) {
      const json& s = src.at("synth");
      cfg.source.kind = InstanceSource::Kind::kSynth;
      SynthConfig& c = cfg.source.synth;
      c.num_entries = s.value("num_entries", c.num_entries);
      c.num_properties = s.value("num_properties", c.num_properties);
      c.t = s.value("t", c.t);
      c.p_f = s.value("p_f", c.p_f);
      c.p_u = s.value("p_u", c.p_u);
      c.lambda = s.value("lambda", c.lambda);
      c.tau_i = s.value("tau_I", c.tau_i);
      c.model.family = ParseFamily(s.value("family", std::string("linear")));
      c.model.aggregation =
          ParseAggregation(s.value("aggregation", std::string("average")));
    } else if (src.contains("geodata")) {
      const json& g = src.at("geodata");
      cfg.source.kind = InstanceSource::Kind::kGeodata;
      cfg.source.checkins_path = g.at("checkins").get<std::string>();
      cfg.source.friendships_path = g.at("friendships").get<std::string>();
      LocationConfig& c = cfg.source.location;
      c.t = g.value("t", c.t);
      c.lambda = g.value("lambda", c.lambda);
      c.tau_i = g.value("tau_I", c.tau_i);
      c.max_users = g.value("max_users", 0);
      c.max_edges = g.value("max_edges", 0);
    } else {
      Fail(ErrorCode::kParse,
           "instance source must be one of file, synth, geodata");
    }
    for (const json& a : doc.at("algorithms")) {
      cfg.algorithms.push_back(ParseAlgorithm(a));
    }
    if (doc.contains("k")) cfg.ks = doc.at("k").get<std::vector<int>>();
    if (doc.contains("seeds")) {
      cfg.seeds = doc.at("seeds").get<std::vector<uint64_t>>();
    } else {
      const int num = doc.value("num_seeds", 10);
      for (int i = 0; i < num; ++i) cfg.seeds.push_back(i);
    }
    if (doc.contains("curve_thresholds")) {
      cfg.curve_thresholds =
          doc.at("curve_thresholds").get<std::vector<double>>();
    } else {
      for (int i = 0; i <= 10; ++i) cfg.curve_thresholds.push_back(i / 10.0);
    }
    cfg.output_dir = doc.value("output_dir", std::string());
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, std::string("malformed experiment config: ") +
                                e.what());
  }
  if (cfg.algorithms.empty()) {
    Fail(ErrorCode::kInvalidArgument, "config lists no algorithms");
  }
  if (cfg.seeds.empty()) Fail(ErrorCode::kInvalidArgument, "no seeds given");
  if (cfg.source.kind != InstanceSource::Kind::kFile && cfg.ks.empty()) {
    Fail(ErrorCode::kInvalidArgument, "generated instances need a k list");
  }
  if (!std::is_sorted(cfg.curve_thresholds.begin(),
                      cfg.curve_thresholds.end())) {
    Fail(ErrorCode::kInvalidArgument, "curve thresholds must be ascending");
  }
  return cfg;
}

Instance BuildInstance(const InstanceSource& source, int k, uint64_t seed) {
  switch (source.kind) {
    case InstanceSource::Kind::kFile:
      return LoadInstance(source.path);
    case InstanceSource::Kind::kSynth: {
      SynthConfig c = source.synth;
      c.num_adversaries = k;
      c.seed = seed;
      return GenerateInstance(c);
    }
    case InstanceSource::Kind::kGeodata: {
      std::ifstream checkins(source.checkins_path);
      if (!checkins) {
        Fail(ErrorCode::kIo, "cannot open '" + source.checkins_path + "'");
      }
      std::ifstream friends(source.friendships_path);
      if (!friends) {
        Fail(ErrorCode::kIo, "cannot open '" + source.friendships_path + "'");
      }
      const IngestReport ingest = IngestCheckins(checkins);
      const FriendshipReport graph = ReadFriendships(friends);
      LocationConfig c = source.location;
      c.num_adversaries = k;
      c.seed = seed;
      return BuildLocationInstance(ingest.entries, graph.edges, c).instance;
    }
  }
  Fail(ErrorCode::kInternal, "unknown instance source");
}

int CountFullyDisclosed(const SolveResult& result, double threshold) {
  return static_cast<int>(std::count_if(
      result.per_property_disclosure.begin(),
      result.per_property_disclosure.end(),
      [threshold](double v) { return v >= threshold; }));
}

std::vector<int> DisclosureLevelCurve(std::span<const double> disclosure,
                                      std::span<const double> thresholds) {
  if (!std::is_sorted(thresholds.begin(), thresholds.end())) {
    Fail(ErrorCode::kInvalidArgument, "thresholds must be sorted ascending");
  }
  std::vector<int> counts;
  counts.reserve(thresholds.size());
  for (double th : thresholds) {
    counts.push_back(static_cast<int>(std::count_if(
        disclosure.begin(), disclosure.end(),
        [th](double v) { return v > th; })));
  }
  return counts;
}

std::pair<double, double> MeanAndStdErr(std::span<const double> values) {
  if (values.empty()) return {0.0, 0.0};
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= values.size();
  if (values.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / (values.size() - 1));
  return {mean, sd / std::sqrt(static_cast<double>(values.size()))};
}

ExperimentReport RunExperiment(const ExperimentConfig& cfg, int workers) {
  // Instances, one per (k, seed), built up front so that every algorithm
  // sees the same data.
  std::vector<int> ks = cfg.ks;
  std::vector<Instance> instances;
  struct Cell {
    size_t algorithm;
    size_t instance;
    int k;
    uint64_t seed;
  };
  std::vector<std::pair<int, uint64_t>> keys;
  if (cfg.source.kind == InstanceSource::Kind::kFile) {
    const Instance inst = LoadInstance(cfg.source.path);
    ks = {inst.num_adversaries()};
    for (uint64_t seed : cfg.seeds) {
      instances.push_back(inst);
      keys.emplace_back(inst.num_adversaries(), seed);
    }
  } else {
    for (int k : ks) {
      for (uint64_t seed : cfg.seeds) {
        instances.push_back(BuildInstance(cfg.source, k, seed));
        keys.emplace_back(k, seed);
      }
    }
  }
  std::vector<Cell> cells;
  for (size_t a = 0; a < cfg.algorithms.size(); ++a) {
    for (size_t i = 0; i < instances.size(); ++i) {
      CheckApplicable(instances[i],
                      cfg.algorithms[a].Resolved(keys[i].first));
      cells.push_back({a, i, keys[i].first, keys[i].second});
    }
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) {
    return std::tie(x.algorithm, x.k, x.seed) <
           std::tie(y.algorithm, y.k, y.seed);
  });

  std::vector<std::optional<SolveResult>> results(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t c = next++; c < cells.size(); c = next++) {
      try {
        results[c] = RunAlgorithm(instances[cells[c].instance],
                                  cfg.algorithms[cells[c].algorithm],
                                  cells[c].seed);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    }
  };
  const int threads =
      std::max(1, std::min<int>(workers, static_cast<int>(cells.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ExperimentReport report;
  std::ostringstream results_csv, timings_csv, curves_csv;
  results_csv << "algorithm,seed,k,t,num_entries,num_properties,utility,"
                 "disclosure,objective,fully_disclosed\n";
  timings_csv << "algorithm,seed,k,wall_ms\n";
  curves_csv << "algorithm,seed,k,threshold,count\n";
  for (size_t c = 0; c < cells.size(); ++c) {
    const Instance& inst = instances[cells[c].instance];
    const SolveResult& r = *results[c];
    ResultRow row;
    row.algorithm = cfg.algorithms[cells[c].algorithm].name;
    row.seed = cells[c].seed;
    row.k = cells[c].k;
    row.t = inst.t();
    row.num_entries = inst.num_entries();
    row.num_properties = inst.num_properties();
    row.utility = r.objective.utility;
    row.disclosure = r.objective.disclosure;
    row.objective = r.objective.value;
    row.fully_disclosed = CountFullyDisclosed(r);
    row.wall_ms = r.wall_ms;
    row.curve = DisclosureLevelCurve(r.per_property_disclosure,
                                     cfg.curve_thresholds);
    results_csv << row.algorithm << ',' << row.seed << ',' << row.k << ','
                << row.t << ',' << row.num_entries << ','
                << row.num_properties << ',' << Num(row.utility) << ','
                << Num(row.disclosure) << ',' << Num(row.objective) << ','
                << row.fully_disclosed << '\n';
    timings_csv << row.algorithm << ',' << row.seed << ',' << row.k << ','
                << Num(row.wall_ms) << '\n';
    for (size_t i = 0; i < cfg.curve_thresholds.size(); ++i) {
      curves_csv << row.algorithm << ',' << row.seed << ',' << row.k << ','
                 << Num(cfg.curve_thresholds[i]) << ',' << row.curve[i]
                 << '\n';
    }
    report.rows.push_back(std::move(row));
  }

  json groups = json::array();
  for (size_t a = 0; a < cfg.algorithms.size(); ++a) {
    for (int k : ks) {
      std::vector<double> u, f, g, fd;
      for (size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].algorithm != a || cells[c].k != k) continue;
        const ResultRow& row = report.rows[c];
        u.push_back(row.utility);
        f.push_back(row.disclosure);
        g.push_back(row.objective);
        fd.push_back(row.fully_disclosed);
      }
      if (u.empty()) continue;
      GroupSummary s;
      s.algorithm = cfg.algorithms[a].name;
      s.k = k;
      s.count = static_cast<int>(u.size());
      std::tie(s.utility_mean, s.utility_se) = MeanAndStdErr(u);
      std::tie(s.disclosure_mean, s.disclosure_se) = MeanAndStdErr(f);
      std::tie(s.objective_mean, s.objective_se) = MeanAndStdErr(g);
      std::tie(s.fully_disclosed_mean, s.fully_disclosed_se) =
          MeanAndStdErr(fd);
      auto stat = [](double m, double se) {
        return json{{"mean", m}, {"stderr", se}};
      };
      groups.push_back({{"algorithm", s.algorithm},
                        {"k", s.k},
                        {"count", s.count},
                        {"utility", stat(s.utility_mean, s.utility_se)},
                        {"disclosure", stat(s.disclosure_mean, s.disclosure_se)},
                        {"objective", stat(s.objective_mean, s.objective_se)},
                        {"fully_disclosed",
                         stat(s.fully_disclosed_mean, s.fully_disclosed_se)}});
      report.summary.push_back(s);
    }
  }
  report.results_csv = results_csv.str();
  report.timings_csv = timings_csv.str();
  report.curves_csv = curves_csv.str();
  report.summary_json = json{{"groups", groups}}.dump(2) + "\n";

  if (!cfg.output_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.output_dir, ec);
    if (ec) {
      Fail(ErrorCode::kIo, "cannot create '" + cfg.output_dir + "': " +
                               ec.message());
    }
    const std::filesystem::path dir(cfg.output_dir);
    WriteTextFile((dir / "results.csv").string(), report.results_csv);
    WriteTextFile((dir / "timings.csv").string(), report.timings_csv);
    WriteTextFile((dir / "curves.csv").string(), report.curves_csv);
    WriteTextFile((dir / "summary.json").string(), report.summary_json);
  }
  return report;
}

}  // namespace privpart
