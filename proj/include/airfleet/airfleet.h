/* Copyright 2026 The airfleet Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the airfleet scheduling library.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Every call returns an af_status. On failure the message
 * is available from af_last_error() on the same thread until the next call.
 * Strings returned through char** out-parameters are heap allocated and must
 * be released with af_string_free().
 */

#ifndef AIRFLEET_AIRFLEET_H_
#define AIRFLEET_AIRFLEET_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define AF_API __declspec(dllexport)
#else
#define AF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum af_status {
  AF_OK = 0,
  AF_ERR_INVALID_ARGUMENT = 1,
  AF_ERR_PARSE = 2,
  AF_ERR_VALIDATION = 3,
  AF_ERR_IO = 4,
  AF_ERR_CONSTRUCTION = 5,
  AF_ERR_GENERATION = 6,
  AF_ERR_CONFLICT = 7,
  AF_ERR_UNAVAILABLE = 8,
  AF_ERR_INTERNAL = 9
} af_status;

typedef struct af_instance af_instance;
typedef struct af_schedule af_schedule;

AF_API const char* af_version(void);
AF_API const char* af_last_error(void);
AF_API const char* af_status_name(af_status status);
AF_API void af_string_free(char* s);

/* ---- instances ---------------------------------------------------------- */

/* `spec` is a JSON file path or "bases.csv,missions.csv". */
AF_API af_status af_instance_load(const char* spec, af_instance** out);
AF_API af_status af_instance_from_json(const char* json, af_instance** out);
AF_API af_status af_instance_to_json(const af_instance* instance, char** out);
AF_API af_status af_instance_save(const af_instance* instance, const char* path);
AF_API void af_instance_free(af_instance* instance);
AF_API size_t af_instance_mission_count(const af_instance* instance);
AF_API size_t af_instance_base_count(const af_instance* instance);
/* Validation warnings as a JSON array of strings. */
AF_API af_status af_instance_validate(const af_instance* instance, char** warnings_json);

typedef struct af_generate_options {
  /* Bases come from `bases` when non-null, else the built-in sample fleet. */
  const af_instance* bases;
  size_t mission_count;
  uint64_t seed;
  double heli_only_fraction;
  /* Require a mission set on which construction succeeds. */
  int require_constructible;
} af_generate_options;

AF_API void af_generate_options_default(af_generate_options* options);
AF_API af_status af_instance_generate(const af_generate_options* options, af_instance** out);

/* ---- schedules ---------------------------------------------------------- */

AF_API af_status af_schedule_from_json(const af_instance* instance, const char* json,
                                       af_schedule** out);
AF_API af_status af_schedule_to_json(const af_instance* instance, const af_schedule* schedule,
                                     char** out);
AF_API void af_schedule_free(af_schedule* schedule);

typedef struct af_evaluation {
  int feasible;
  double objective_hours;
  size_t violation_count;
} af_evaluation;

/* `report_json` may be null; otherwise receives the violation list. */
AF_API af_status af_evaluate(const af_instance* instance, const af_schedule* schedule,
                             af_evaluation* result, char** report_json);

/* ---- algorithms --------------------------------------------------------- */

/* AF_ERR_CONSTRUCTION when no feasible start schedule is found. */
AF_API af_status af_construct(const af_instance* instance, int parallel_eval, af_schedule** out);

typedef enum af_search_mode { AF_SEARCH_NEIGHBOURHOOD = 0, AF_SEARCH_TABU = 1 } af_search_mode;

typedef struct af_search_config {
  af_search_mode mode;
  size_t tabu_tenure;
  int permute_scan_order;
  uint64_t seed;
  int parallel_eval;
  /* 0 means unlimited. */
  size_t max_sweeps;
} af_search_config;

typedef struct af_search_stats {
  double objective_hours;
  size_t sweeps;
  size_t moves_applied;
} af_search_stats;

AF_API void af_search_config_default(af_search_config* config);
/* `stats` may be null. */
AF_API af_status af_search(const af_instance* instance, const af_schedule* start,
                           const af_search_config* config, af_schedule** out,
                           af_search_stats* stats);

typedef enum af_exact_status {
  AF_EXACT_OPTIMAL = 0,
  AF_EXACT_INFEASIBLE = 1,
  AF_EXACT_NODE_LIMIT = 2
} af_exact_status;

typedef struct af_exact_limits {
  /* 0 means unlimited. */
  uint64_t node_budget;
  /* <= 0 means unlimited. */
  double time_budget_s;
  size_t max_missions;
  int warm_start;
} af_exact_limits;

typedef struct af_exact_report {
  af_exact_status status;
  /* +infinity without an incumbent. */
  double objective_hours;
  uint64_t nodes_explored;
  double best_bound;
  double elapsed_s;
} af_exact_report;

AF_API void af_exact_limits_default(af_exact_limits* limits);
/* `out` receives the best schedule found, or null when there is none. */
AF_API af_status af_solve_exact(const af_instance* instance, const af_exact_limits* limits,
                                af_schedule** out, af_exact_report* report);

/* Fixed-format MPS unless a name needs more than 8 characters. */
AF_API af_status af_export_mps(const af_instance* instance, const char* path, int free_format);
AF_API af_status af_write_mps(const af_instance* instance, int free_format, char** out);

/* ---- experiments -------------------------------------------------------- */

/* `plan_json` keys (all optional): mission_counts, runs, algorithms
 * ("ns,tabu,exact,ns-par,tabu-par,both-parallel-modes"), seed, tabu_tenure,
 * permute_scan_order, heli_only_fraction, exact_time_budget_s,
 * exact_node_budget. `fixed` may be null to generate instances over the
 * sample fleet. Writes the record stream as JSON. */
AF_API af_status af_bench_run(const char* plan_json, const af_instance* fixed,
                              char** records_json);
/* Summarizes a record stream; `format` is "csv", "markdown" or "json".
 * `notices_json` may be null. */
AF_API af_status af_report(const char* records_json, const char* format, char** out,
                           char** notices_json);

#ifdef __cplusplus
}
#endif

#endif /* AIRFLEET_AIRFLEET_H_ */
