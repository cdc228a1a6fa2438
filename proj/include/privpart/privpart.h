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


/* C interface to the privpart engine.
 *
 * Objects are opaque handles created by pp_*_new-style functions and
 * released with the matching pp_*_free. Every fallible call returns a
 * pp_status; on failure pp_last_error() describes the problem for the
 * calling thread. Strings returned through char** are owned by the caller
 * and released with pp_string_free.
 */

#ifndef PRIVPART_PRIVPART_H_
#define PRIVPART_PRIVPART_H_

#include <stddef.h>
#include <stdint.h>

#if defined(PRIVPART_BUILDING_LIBRARY)
#define PP_API __attribute__((visibility("default")))
#else
#define PP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pp_status {
  PP_OK = 0,
  PP_INVALID_ARGUMENT = 1,
  PP_INFEASIBLE = 2,
  PP_SIZE_GUARD = 3,
  PP_IO = 4,
  PP_PARSE = 5,
  PP_INTERNAL = 6,
} pp_status;

typedef enum pp_algorithm {
  PP_ALGO_RAND_PLUS = 0,
  PP_ALGO_LP = 1,
  PP_ALGO_ILP = 2,
  PP_ALGO_GREEDY = 3,
  PP_ALGO_GREEDYL = 4,
  PP_ALGO_GRASP = 5,
  PP_ALGO_GRASPL = 6,
} pp_algorithm;

typedef struct pp_instance pp_instance;
typedef struct pp_result pp_result;

PP_API const char* pp_version(void);
/* Message of the last failed call on this thread; empty after success. */
PP_API const char* pp_last_error(void);
PP_API const char* pp_status_name(pp_status status);
PP_API void pp_string_free(char* s);

/* ---- Instances ---- */

typedef struct pp_instance_info {
  int num_entries;
  int num_adversaries;
  int num_properties;
  int t;
  double lambda;
  double tau_i;
  int dimension;
  int dimension_warning; /* largest hyperedge does not exceed k */
  const char* family;      /* static string */
  const char* aggregation; /* static string */
} pp_instance_info;

PP_API pp_status pp_instance_from_json(const char* json, pp_instance** out);
PP_API pp_status pp_instance_load(const char* path, pp_instance** out);
PP_API pp_status pp_instance_save(const pp_instance* instance,
                                  const char* path);
PP_API pp_status pp_instance_to_json(const pp_instance* instance, char** out);
PP_API pp_status pp_instance_info_get(const pp_instance* instance,
                                      pp_instance_info* out);
PP_API void pp_instance_free(pp_instance* instance);

typedef struct pp_synth_config {
  int num_entries;
  int num_properties;
  int num_adversaries;
  int t;
  double p_f;
  double p_u;
  double lambda;
  double tau_i;
  const char* family;      /* step | linear | quadratic | cosine */
  const char* aggregation; /* worst | average */
  uint64_t seed;
} pp_synth_config;

/* Fills defaults: 100 entries, 10 properties, k=2, t=1, p_f=0.3,
 * p_u=0.4, lambda=1, tau_I=0, linear/worst, seed 0. */
PP_API void pp_synth_config_init(pp_synth_config* config);
PP_API pp_status pp_generate_instance(const pp_synth_config* config,
                                      pp_instance** out);

typedef struct pp_location_config {
  int num_adversaries;
  int t;
  double lambda;
  double tau_i;
  uint64_t seed;
  int max_users; /* 0 keeps all */
  int max_edges; /* 0 keeps all */
} pp_location_config;

typedef struct pp_ingest_stats {
  int64_t valid_lines;
  int64_t skipped_lines;
  int64_t entries;
  int64_t dropped_edges;
} pp_ingest_stats;

PP_API void pp_location_config_init(pp_location_config* config);
/* Builds a cosine-disclosure instance from check-in and friendship files.
 * `stats` may be NULL. */
PP_API pp_status pp_ingest_location_instance(const char* checkins_path,
                                             const char* friendships_path,
                                             const pp_location_config* config,
                                             pp_instance** out,
                                             pp_ingest_stats* stats);
/* Synthetic Brightkite-like check-ins (500 users, 5000 aggregated entries,
 * 800 friendships with the default layout). */
PP_API pp_status pp_synthesize_checkins(uint64_t seed, char** checkins,
                                        char** friendships);

/* ---- Solving ---- */

typedef struct pp_solve_options {
  int n;    /* GRASP candidate list size, 0 = default */
  int r;    /* restarts, 0 = default */
  int runs; /* RAND+ restarts / LP roundings, 0 = default (100) */
  uint64_t seed;
} pp_solve_options;

typedef struct pp_result_summary {
  double utility;
  double disclosure;
  double objective;
  int unassigned;
  int fully_disclosed;
  int64_t iterations;
  double wall_ms;
  uint64_t seed;
} pp_result_summary;

PP_API pp_status pp_algorithm_from_name(const char* name, pp_algorithm* out);
PP_API const char* pp_algorithm_name(pp_algorithm algorithm);

/* `options` may be NULL for defaults. */
PP_API pp_status pp_solve(const pp_instance* instance, pp_algorithm algorithm,
                          const pp_solve_options* options, pp_result** out);
/* formulation: tradeoff | discbudget | maxmin */
PP_API pp_status pp_solve_exact(const pp_instance* instance,
                                const char* formulation, pp_result** out);

PP_API pp_status pp_result_summary_get(const pp_result* result,
                                       pp_result_summary* out);
/* Row-major |D| x k 0/1 matrix; `len` must equal |D| * k. */
PP_API pp_status pp_result_assignment(const pp_result* result, uint8_t* bits,
                                      size_t len);
/* One value per property; `len` must equal |P|. */
PP_API pp_status pp_result_property_disclosure(const pp_result* result,
                                               double* out, size_t len);
PP_API pp_status pp_result_to_json(const pp_result* result, char** out);
/* counts[i] = properties with disclosure strictly above thresholds[i];
 * thresholds must be ascending. */
PP_API pp_status pp_disclosure_curve(const pp_result* result,
                                     const double* thresholds, size_t n,
                                     int* counts);
PP_API void pp_result_free(pp_result* result);

/* ---- Experiments and verification ---- */

/* Runs a JSON experiment config; writes reports to its output_dir and
 * returns summary.json's contents through `summary` (may be NULL). */
PP_API pp_status pp_run_experiment(const char* config_json, int workers,
                                   char** summary);
/* Runs the oracle cross-checks; `*passed` is 1 when all checks pass.
 * `report` (may be NULL) receives a JSON description. */
PP_API pp_status pp_verify(const pp_instance* instance, uint64_t seed,
                           int* passed, char** report);

#ifdef __cplusplus
}
#endif

#endif /* PRIVPART_PRIVPART_H_ */
