// Copyright 2026 The airfleet Authors
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

#include "airfleet/airfleet.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <sstream>
#include <string>
#include <utility>

#include "bench.hpp"
#include "construct.hpp"
#include "error.hpp"
#include "exact.hpp"
#include "feasibility.hpp"
#include "json.hpp"
#include "model.hpp"
#include "search.hpp"

struct af_instance {
  airfleet::Instance instance;
  airfleet::TravelTimeMatrix matrix;

  explicit af_instance(airfleet::Instance in)
      : instance(std::move(in)), matrix(airfleet::BuildMatrix(instance)) {}
};

struct af_schedule {
  airfleet::Schedule schedule;
};

namespace {

using airfleet::ErrorCode;
using json = nlohmann::json;

thread_local std::string last_error;

af_status ToStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return AF_ERR_INVALID_ARGUMENT;
    case ErrorCode::kParse: return AF_ERR_PARSE;
    case ErrorCode::kValidation: return AF_ERR_VALIDATION;
    case ErrorCode::kIo: return AF_ERR_IO;
    case ErrorCode::kConstruction: return AF_ERR_CONSTRUCTION;
    case ErrorCode::kGeneration: return AF_ERR_GENERATION;
    case ErrorCode::kConflict: return AF_ERR_CONFLICT;
    case ErrorCode::kUnavailable: return AF_ERR_UNAVAILABLE;
  }
  return AF_ERR_INTERNAL;
}

af_status Fail(af_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
af_status Guard(F&& body) {
  last_error.clear();
  try {
    body();
    return AF_OK;
  } catch (const airfleet::Error& e) {
    return Fail(ToStatus(e.code()), e.what());
  } catch (const json::exception& e) {
    return Fail(AF_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(AF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(AF_ERR_INTERNAL, e.what());
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Require(bool ok, const char* what) {
  if (!ok) airfleet::Fail(ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

airfleet::BenchPlan PlanFromJson(const json& j) {
  airfleet::BenchPlan plan;
  if (j.contains("mission_counts")) {
    plan.mission_counts = j["mission_counts"].get<std::vector<int>>();
  }
  plan.runs_per_point = j.value("runs", plan.runs_per_point);
  if (j.contains("algorithms")) {
    plan.algorithms = airfleet::ParseAlgorithmList(j["algorithms"].get<std::string>());
  }
  plan.seed = j.value("seed", plan.seed);
  plan.tabu_tenure = j.value("tabu_tenure", plan.tabu_tenure);
  plan.permute_scan_order = j.value("permute_scan_order", plan.permute_scan_order);
  if (j.contains("exact_time_budget_s")) {
    const double t = j["exact_time_budget_s"].get<double>();
    plan.exact_limits.time_budget_s =
        t > 0.0 ? std::optional<double>(t) : std::optional<double>();
  }
  if (j.contains("exact_node_budget")) {
    const auto n = j["exact_node_budget"].get<std::uint64_t>();
    plan.exact_limits.node_budget =
        n > 0 ? std::optional<std::uint64_t>(n) : std::optional<std::uint64_t>();
  }
  if (plan.tabu_tenure == 0) {
    airfleet::Fail(ErrorCode::kInvalidArgument, "tabu_tenure must be >= 1");
  }
  return plan;
}

}  // namespace

extern "C" {

const char* af_version(void) { return "1.0.0"; }

const char* af_last_error(void) { return last_error.c_str(); }

const char* af_status_name(af_status status) {
  switch (status) {
    case AF_OK: return "ok";
    case AF_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case AF_ERR_PARSE: return "parse_error";
    case AF_ERR_VALIDATION: return "validation_error";
    case AF_ERR_IO: return "io_error";
    case AF_ERR_CONSTRUCTION: return "construction_failure";
    case AF_ERR_GENERATION: return "generation_failure";
    case AF_ERR_CONFLICT: return "conflict";
    case AF_ERR_UNAVAILABLE: return "unavailable";
    case AF_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

void af_string_free(char* s) { std::free(s); }

af_status af_instance_load(const char* spec, af_instance** out) {
  return Guard([&] {
    Require(spec != nullptr && out != nullptr, "argument");
    *out = new af_instance(airfleet::LoadInstance(spec));
  });
}

af_status af_instance_from_json(const char* text, af_instance** out) {
  return Guard([&] {
    Require(text != nullptr && out != nullptr, "argument");
    *out = new af_instance(airfleet::InstanceFromJson(text));
  });
}

af_status af_instance_to_json(const af_instance* instance, char** out) {
  return Guard([&] {
    Require(instance != nullptr && out != nullptr, "argument");
    *out = Dup(airfleet::InstanceToJson(instance->instance));
  });
}

af_status af_instance_save(const af_instance* instance, const char* path) {
  return Guard([&] {
    Require(instance != nullptr && path != nullptr, "argument");
    airfleet::SaveInstanceJson(instance->instance, path);
  });
}

void af_instance_free(af_instance* instance) { delete instance; }

size_t af_instance_mission_count(const af_instance* instance) {
  return instance == nullptr ? 0 : instance->instance.mission_count();
}

size_t af_instance_base_count(const af_instance* instance) {
  return instance == nullptr ? 0 : instance->instance.base_count();
}

af_status af_instance_validate(const af_instance* instance, char** warnings_json) {
  return Guard([&] {
    Require(instance != nullptr, "instance");
    const auto warnings = airfleet::ValidateInstance(instance->instance);
    if (warnings_json != nullptr) *warnings_json = Dup(json(warnings).dump());
  });
}

void af_generate_options_default(af_generate_options* options) {
  if (options == nullptr) return;
  options->bases = nullptr;
  options->mission_count = 12;
  options->seed = 1;
  options->heli_only_fraction = airfleet::GenerationOptions{}.heli_only_fraction;
  options->require_constructible = 1;
}

af_status af_instance_generate(const af_generate_options* options, af_instance** out) {
  return Guard([&] {
    Require(options != nullptr && out != nullptr, "argument");
    airfleet::InstanceSource source;
    if (options->bases != nullptr) {
      source.bases = options->bases->instance.bases;
      source.flight_limit_h = options->bases->instance.flight_limit_h;
      source.day_length_h = options->bases->instance.day_length_h;
    }
    source.generation.heli_only_fraction = options->heli_only_fraction;
    const int count = static_cast<int>(options->mission_count);
    if (options->require_constructible) {
      *out = new af_instance(airfleet::MakeBenchInstance(source, count, options->seed));
      return;
    }
    airfleet::Instance instance;
    instance.bases = source.bases;
    instance.flight_limit_h = source.flight_limit_h;
    instance.day_length_h = source.day_length_h;
    instance.missions = airfleet::GenerateMissions(source.bases, source.facilities, count,
                                                   options->seed, source.generation);
    airfleet::ValidateInstance(instance);
    *out = new af_instance(std::move(instance));
  });
}

af_status af_schedule_from_json(const af_instance* instance, const char* text,
                                af_schedule** out) {
  return Guard([&] {
    Require(instance != nullptr && text != nullptr && out != nullptr, "argument");
    *out = new af_schedule{airfleet::ScheduleFromJson(instance->instance, text)};
  });
}

af_status af_schedule_to_json(const af_instance* instance, const af_schedule* schedule,
                              char** out) {
  return Guard([&] {
    Require(instance != nullptr && schedule != nullptr && out != nullptr, "argument");
    *out = Dup(airfleet::ScheduleToJson(instance->instance, schedule->schedule));
  });
}

void af_schedule_free(af_schedule* schedule) { delete schedule; }

af_status af_evaluate(const af_instance* instance, const af_schedule* schedule,
                      af_evaluation* result, char** report_json) {
  return Guard([&] {
    Require(instance != nullptr && schedule != nullptr && result != nullptr, "argument");
    const airfleet::EvalReport report =
        airfleet::Evaluate(instance->instance, instance->matrix, schedule->schedule);
    result->feasible = report.feasible ? 1 : 0;
    result->objective_hours = report.objective_hours;
    result->violation_count = report.violations.size();
    if (report_json == nullptr) return;
    const airfleet::Instance& in = instance->instance;
    json doc = {{"feasible", report.feasible},
                {"objective_hours", report.objective_hours},
                {"per_base_flight_hours", report.per_base_flight_hours}};
    json violations = json::array();
    for (const airfleet::Violation& v : report.violations) {
      json j = {{"constraint", std::string(airfleet::TagName(v.tag))},
                {"magnitude", v.magnitude}};
      if (v.base) j["base"] = in.bases[*v.base].id;
      if (v.node) {
        if (*v.node < in.mission_count()) {
          j["mission"] = in.missions[*v.node].id;
        } else {
          j["node"] = *v.node;
        }
      }
      violations.push_back(std::move(j));
    }
    doc["violations"] = std::move(violations);
    *report_json = Dup(doc.dump(2));
  });
}

af_status af_construct(const af_instance* instance, int parallel_eval, af_schedule** out) {
  return Guard([&] {
    Require(instance != nullptr && out != nullptr, "argument");
    airfleet::ConstructConfig config;
    config.parallel_eval = parallel_eval != 0;
    airfleet::ConstructOutcome outcome =
        airfleet::Initialize(instance->instance, instance->matrix, config);
    if (!outcome.ok()) airfleet::Fail(ErrorCode::kConstruction, outcome.failure);
    *out = new af_schedule{std::move(*outcome.schedule)};
  });
}

void af_search_config_default(af_search_config* config) {
  if (config == nullptr) return;
  const airfleet::SearchConfig d;
  config->mode = AF_SEARCH_TABU;
  config->tabu_tenure = d.tabu_tenure;
  config->permute_scan_order = d.permute_scan_order ? 1 : 0;
  config->seed = d.rng_seed;
  config->parallel_eval = d.parallel_eval ? 1 : 0;
  config->max_sweeps = 0;
}

af_status af_search(const af_instance* instance, const af_schedule* start,
                    const af_search_config* config, af_schedule** out, af_search_stats* stats) {
  return Guard([&] {
    Require(instance != nullptr && start != nullptr && config != nullptr && out != nullptr,
            "argument");
    airfleet::SearchConfig c;
    switch (config->mode) {
      case AF_SEARCH_NEIGHBOURHOOD: c.mode = airfleet::SearchMode::kNeighbourhood; break;
      case AF_SEARCH_TABU: c.mode = airfleet::SearchMode::kTabu; break;
      default: airfleet::Fail(ErrorCode::kInvalidArgument, "unknown search mode");
    }
    c.tabu_tenure = config->tabu_tenure;
    c.permute_scan_order = config->permute_scan_order != 0;
    c.rng_seed = config->seed;
    c.parallel_eval = config->parallel_eval != 0;
    if (config->max_sweeps > 0) c.max_sweeps = config->max_sweeps;
    airfleet::SearchResult result =
        airfleet::RunSearch(instance->instance, instance->matrix, start->schedule, c);
    if (stats != nullptr) {
      stats->objective_hours = result.objective_hours;
      stats->sweeps = result.sweeps;
      stats->moves_applied = result.moves_applied;
    }
    *out = new af_schedule{std::move(result.schedule)};
  });
}

void af_exact_limits_default(af_exact_limits* limits) {
  if (limits == nullptr) return;
  const airfleet::ExactLimits d;
  limits->node_budget = d.node_budget.value_or(0);
  limits->time_budget_s = d.time_budget_s.value_or(0.0);
  limits->max_missions = d.max_missions;
  limits->warm_start = d.warm_start ? 1 : 0;
}

af_status af_solve_exact(const af_instance* instance, const af_exact_limits* limits,
                         af_schedule** out, af_exact_report* report) {
  return Guard([&] {
    Require(instance != nullptr && out != nullptr && report != nullptr, "argument");
    airfleet::ExactLimits l;
    if (limits != nullptr) {
      l.node_budget = limits->node_budget > 0 ? std::optional<std::uint64_t>(limits->node_budget)
                                              : std::nullopt;
      l.time_budget_s =
          limits->time_budget_s > 0.0 ? std::optional<double>(limits->time_budget_s)
                                      : std::nullopt;
      l.max_missions = limits->max_missions;
      l.warm_start = limits->warm_start != 0;
    }
    airfleet::ExactResult r = airfleet::SolveExact(instance->instance, instance->matrix, l);
    switch (r.status) {
      case airfleet::ExactStatus::kOptimal: report->status = AF_EXACT_OPTIMAL; break;
      case airfleet::ExactStatus::kInfeasible: report->status = AF_EXACT_INFEASIBLE; break;
      case airfleet::ExactStatus::kNodeLimit: report->status = AF_EXACT_NODE_LIMIT; break;
    }
    report->objective_hours = r.objective_hours;
    report->nodes_explored = r.nodes_explored;
    report->best_bound = r.best_bound;
    report->elapsed_s = r.elapsed_s;
    *out = r.schedule ? new af_schedule{std::move(*r.schedule)} : nullptr;
  });
}

af_status af_export_mps(const af_instance* instance, const char* path, int free_format) {
  return Guard([&] {
    Require(instance != nullptr && path != nullptr, "argument");
    airfleet::MpsOptions options;
    options.free_format = free_format != 0;
    airfleet::ExportMps(instance->instance, instance->matrix, path, options);
  });
}

af_status af_write_mps(const af_instance* instance, int free_format, char** out) {
  return Guard([&] {
    Require(instance != nullptr && out != nullptr, "argument");
    airfleet::MpsOptions options;
    options.free_format = free_format != 0;
    std::ostringstream text;
    airfleet::WriteMps(instance->instance, instance->matrix, text, options);
    *out = Dup(text.str());
  });
}

af_status af_bench_run(const char* plan_json, const af_instance* fixed, char** records_json) {
  return Guard([&] {
    Require(records_json != nullptr, "records_json");
    const json j = plan_json != nullptr && *plan_json != '\0' ? json::parse(plan_json)
                                                              : json::object();
    const airfleet::BenchPlan plan = PlanFromJson(j);
    airfleet::InstanceSource source;
    if (fixed != nullptr) source.fixed = fixed->instance;
    source.generation.heli_only_fraction =
        j.value("heli_only_fraction", source.generation.heli_only_fraction);
    *records_json = Dup(airfleet::RecordsToJson(airfleet::RunPlan(plan, source)));
  });
}

af_status af_report(const char* records_json, const char* format, char** out,
                    char** notices_json) {
  return Guard([&] {
    Require(records_json != nullptr && format != nullptr && out != nullptr, "argument");
    std::vector<std::string> notices;
    const auto rows = airfleet::Summarize(airfleet::RecordsFromJson(records_json), &notices);
    *out = Dup(airfleet::RenderReport(rows, airfleet::ParseReportFormat(format)));
    if (notices_json != nullptr) *notices_json = Dup(json(notices).dump());
  });
}

}  // extern "C"
