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

// Command line front end over the C API.
//
//   airfleet gen --missions 12 --seed 3 --out inst.json
//   airfleet solve --instance inst.json --algo exact --time-budget 60
//   airfleet search --instance inst.json --algo tabu --tabu-tenure 7
//   airfleet bench --missions 12,15 --runs 10 --algo ns,tabu,exact --out rec.json
//   airfleet report --in rec.json --format markdown
//   airfleet export-mps --instance inst.json --out model.mps

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "airfleet/airfleet.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

struct InstanceDeleter {
  void operator()(af_instance* p) const { af_instance_free(p); }
};
struct ScheduleDeleter {
  void operator()(af_schedule* p) const { af_schedule_free(p); }
};
using InstancePtr = std::unique_ptr<af_instance, InstanceDeleter>;
using SchedulePtr = std::unique_ptr<af_schedule, ScheduleDeleter>;

// Error raised after a failed C call, carrying the exit code.
struct Exit {
  int code;
};

int ExitFor(af_status status) {
  switch (status) {
    case AF_OK: return kExitOk;
    case AF_ERR_INVALID_ARGUMENT: return kExitUsage;
    case AF_ERR_CONSTRUCTION: return kExitInfeasible;
    default: return kExitError;
  }
}

void Check(af_status status) {
  if (status == AF_OK) return;
  std::cerr << "airfleet: " << af_status_name(status) << ": " << af_last_error() << '\n';
  throw Exit{ExitFor(status)};
}

std::string Take(char* s) {
  std::string out(s);
  af_string_free(s);
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "airfleet: cannot read '" << path << "'\n";
    throw Exit{kExitError};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteOut(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
  out.flush();
  if (!out) {
    std::cerr << "airfleet: cannot write '" << path << "'\n";
    throw Exit{kExitError};
  }
}

InstancePtr LoadInstance(const std::string& spec) {
  af_instance* raw = nullptr;
  Check(af_instance_load(spec.c_str(), &raw));
  InstancePtr instance(raw);
  char* warnings = nullptr;
  Check(af_instance_validate(instance.get(), &warnings));
  for (const auto& w : nlohmann::json::parse(Take(warnings))) {
    std::cerr << "airfleet: warning: " << w.get<std::string>() << '\n';
  }
  return instance;
}

struct Options {
  std::string instance;
  std::string start;
  std::string input;
  std::string out;
  std::string missions = "12";
  std::string algo;
  std::string format;
  std::uint64_t seed = 1;
  bool parallel = false;
  bool permute = false;
  std::size_t tabu_tenure = 7;
  int runs = 10;
  double time_budget = 60.0;
  double heli_fraction = 0.25;
};

void PrintSummary(const af_instance* instance, const af_schedule* schedule) {
  af_evaluation eval{};
  Check(af_evaluate(instance, schedule, &eval, nullptr));
  std::fprintf(stderr, "objective_hours=%.9f feasible=%s\n", eval.objective_hours,
               eval.feasible ? "true" : "false");
}

int RunGen(const Options& o) {
  std::size_t count = 0;
  try {
    std::size_t used = 0;
    count = std::stoul(o.missions, &used);
    if (used != o.missions.size()) throw std::invalid_argument(o.missions);
  } catch (const std::exception&) {
    std::cerr << "airfleet: --missions must be a single count for gen\n";
    return kExitUsage;
  }
  InstancePtr bases;
  af_generate_options g;
  af_generate_options_default(&g);
  if (!o.instance.empty()) {
    bases = LoadInstance(o.instance);
    g.bases = bases.get();
  }
  g.mission_count = count;
  g.seed = o.seed;
  g.heli_only_fraction = o.heli_fraction;
  af_instance* raw = nullptr;
  const af_status status = af_instance_generate(&g, &raw);
  if (status == AF_ERR_GENERATION) {
    std::cerr << "airfleet: " << af_last_error() << '\n';
    return kExitInfeasible;
  }
  Check(status);
  InstancePtr instance(raw);
  char* text = nullptr;
  Check(af_instance_to_json(instance.get(), &text));
  WriteOut(o.out, Take(text));
  return kExitOk;
}

SchedulePtr Construct(const af_instance* instance, bool parallel) {
  af_schedule* raw = nullptr;
  Check(af_construct(instance, parallel ? 1 : 0, &raw));
  return SchedulePtr(raw);
}

SchedulePtr Search(const af_instance* instance, const af_schedule* start, const Options& o,
                   const std::string& algo) {
  af_search_config c;
  af_search_config_default(&c);
  c.mode = algo == "ns" ? AF_SEARCH_NEIGHBOURHOOD : AF_SEARCH_TABU;
  c.tabu_tenure = o.tabu_tenure;
  c.permute_scan_order = o.permute ? 1 : 0;
  c.seed = o.seed;
  c.parallel_eval = o.parallel ? 1 : 0;
  af_schedule* raw = nullptr;
  af_search_stats stats{};
  Check(af_search(instance, start, &c, &raw, &stats));
  std::fprintf(stderr, "sweeps=%zu moves_applied=%zu\n", stats.sweeps, stats.moves_applied);
  return SchedulePtr(raw);
}

void EmitSchedule(const af_instance* instance, const af_schedule* schedule, const Options& o) {
  char* text = nullptr;
  Check(af_schedule_to_json(instance, schedule, &text));
  WriteOut(o.out, Take(text));
  PrintSummary(instance, schedule);
}

int RunSolve(const Options& o) {
  InstancePtr instance = LoadInstance(o.instance);
  if (o.algo == "exact") {
    af_exact_limits limits;
    af_exact_limits_default(&limits);
    limits.time_budget_s = o.time_budget;
    af_schedule* raw = nullptr;
    af_exact_report report{};
    Check(af_solve_exact(instance.get(), &limits, &raw, &report));
    SchedulePtr schedule(raw);
    const char* status = report.status == AF_EXACT_OPTIMAL      ? "optimal"
                         : report.status == AF_EXACT_INFEASIBLE ? "infeasible"
                                                                : "node_limit";
    std::fprintf(stderr, "status=%s nodes=%llu best_bound=%.6f elapsed_s=%.3f\n", status,
                 static_cast<unsigned long long>(report.nodes_explored), report.best_bound,
                 report.elapsed_s);
    if (schedule) EmitSchedule(instance.get(), schedule.get(), o);
    if (report.status == AF_EXACT_INFEASIBLE) return kExitInfeasible;
    if (report.status == AF_EXACT_NODE_LIMIT) return kExitBudget;
    return kExitOk;
  }
  SchedulePtr start = Construct(instance.get(), o.parallel);
  SchedulePtr result = Search(instance.get(), start.get(), o, o.algo);
  EmitSchedule(instance.get(), result.get(), o);
  return kExitOk;
}

int RunSearch(const Options& o) {
  if (o.algo == "exact") {
    std::cerr << "airfleet: search takes --algo ns or tabu\n";
    return kExitUsage;
  }
  InstancePtr instance = LoadInstance(o.instance);
  SchedulePtr start;
  if (o.start.empty()) {
    start = Construct(instance.get(), o.parallel);
  } else {
    af_schedule* raw = nullptr;
    Check(af_schedule_from_json(instance.get(), ReadFile(o.start).c_str(), &raw));
    start.reset(raw);
    af_evaluation eval{};
    Check(af_evaluate(instance.get(), start.get(), &eval, nullptr));
    if (!eval.feasible) {
      std::cerr << "airfleet: start schedule is infeasible\n";
      return kExitInfeasible;
    }
  }
  SchedulePtr result = Search(instance.get(), start.get(), o, o.algo);
  EmitSchedule(instance.get(), result.get(), o);
  return kExitOk;
}

std::vector<int> ParseCounts(const std::string& text) {
  std::vector<int> counts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      counts.push_back(std::stoi(item));
    } catch (const std::exception&) {
      std::cerr << "airfleet: bad mission count '" << item << "'\n";
      throw Exit{kExitUsage};
    }
  }
  return counts;
}

int RunBench(const Options& o) {
  nlohmann::json plan = {{"mission_counts", ParseCounts(o.missions)},
                         {"runs", o.runs},
                         {"algorithms", o.algo},
                         {"seed", o.seed},
                         {"tabu_tenure", o.tabu_tenure},
                         {"permute_scan_order", o.permute},
                         {"heli_only_fraction", o.heli_fraction},
                         {"exact_time_budget_s", o.time_budget}};
  if (o.parallel) plan["algorithms"] = o.algo + ",both-parallel-modes";
  InstancePtr fixed;
  if (!o.instance.empty()) fixed = LoadInstance(o.instance);
  char* records = nullptr;
  Check(af_bench_run(plan.dump().c_str(), fixed.get(), &records));
  const std::string text = Take(records);
  if (o.format.empty()) {
    WriteOut(o.out, text);
    return kExitOk;
  }
  if (!o.out.empty()) WriteOut(o.out, text);
  char* report = nullptr;
  char* notices = nullptr;
  Check(af_report(text.c_str(), o.format.c_str(), &report, &notices));
  for (const auto& n : nlohmann::json::parse(Take(notices))) {
    std::cerr << "airfleet: " << n.get<std::string>() << '\n';
  }
  WriteOut("", Take(report));
  return kExitOk;
}

int RunReport(const Options& o) {
  char* report = nullptr;
  char* notices = nullptr;
  Check(af_report(ReadFile(o.input).c_str(), o.format.empty() ? "markdown" : o.format.c_str(),
                  &report, &notices));
  for (const auto& n : nlohmann::json::parse(Take(notices))) {
    std::cerr << "airfleet: " << n.get<std::string>() << '\n';
  }
  WriteOut(o.out, Take(report));
  return kExitOk;
}

int RunExportMps(const Options& o) {
  if (!o.format.empty() && o.format != "fixed" && o.format != "free") {
    std::cerr << "airfleet: --format must be fixed or free\n";
    return kExitUsage;
  }
  InstancePtr instance = LoadInstance(o.instance);
  const int free_format = o.format == "free" ? 1 : 0;
  if (o.out.empty() || o.out == "-") {
    char* text = nullptr;
    Check(af_write_mps(instance.get(), free_format, &text));
    WriteOut("", Take(text));
  } else {
    Check(af_export_mps(instance.get(), o.out.c_str(), free_format));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Air ambulance fleet scheduling"};
  app.require_subcommand(1);
  app.set_version_flag("--version", af_version());
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate a mission set over a base fleet");
  gen->add_option("--instance", o.instance, "Take bases and limits from this instance");
  gen->add_option("--missions", o.missions, "Number of missions");
  gen->add_option("--seed", o.seed, "Random seed");
  gen->add_option("--heli-fraction", o.heli_fraction, "Share of helicopter-only missions")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--out", o.out, "Output file (default stdout)");

  auto* solve = app.add_subcommand("solve", "Construct and optimize, or solve exactly");
  auto* search = app.add_subcommand("search", "Local search from a start schedule");
  for (CLI::App* cmd : {solve, search}) {
    cmd->add_option("--instance", o.instance, "Instance JSON or bases.csv,missions.csv")
        ->required();
    cmd->add_option("--algo", o.algo, "ns, tabu or exact")
        ->check(CLI::IsMember({"ns", "tabu", "exact"}))
        ->default_val("tabu");
    cmd->add_flag("--parallel", o.parallel, "Evaluate candidate moves in parallel");
    cmd->add_option("--tabu-tenure", o.tabu_tenure, "Tabu tenure in iterations")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "Seed for scan order permutation");
    cmd->add_flag("--permute", o.permute, "Permute the scan order every sweep");
    cmd->add_option("--time-budget", o.time_budget, "Exact solver budget in seconds, 0 = none");
    cmd->add_option("--out", o.out, "Schedule JSON output (default stdout)");
  }
  search->add_option("--start", o.start, "Start schedule JSON (default: construct)");

  auto* bench = app.add_subcommand("bench", "Multi-seed experiment");
  bench->add_option("--instance", o.instance, "Fixed instance truncated per count");
  bench->add_option("--missions", o.missions, "Comma separated mission counts")
      ->default_val("12,15,18,21,24,27,30,33");
  bench->add_option("--runs", o.runs, "Runs per mission count")->check(CLI::PositiveNumber);
  bench->add_option("--algo", o.algo, "Comma list of ns, tabu, exact, ns-par, tabu-par")
      ->default_val("ns,tabu");
  bench->add_flag("--parallel", o.parallel, "Also run the parallel variants");
  bench->add_option("--seed", o.seed, "Base seed");
  bench->add_option("--tabu-tenure", o.tabu_tenure, "Tabu tenure")->check(CLI::PositiveNumber);
  bench->add_flag("--permute", o.permute, "Permute the scan order every sweep");
  bench->add_option("--heli-fraction", o.heli_fraction, "Share of helicopter-only missions")
      ->check(CLI::Range(0.0, 1.0));
  bench->add_option("--time-budget", o.time_budget, "Exact solver budget per instance");
  bench->add_option("--out", o.out, "Record stream JSON output");
  bench->add_option("--format", o.format, "Also print a summary: csv, markdown or json")
      ->check(CLI::IsMember({"csv", "markdown", "md", "json"}));

  auto* report = app.add_subcommand("report", "Summarize a record stream");
  report->add_option("--in", o.input, "Record stream JSON")->required();
  report->add_option("--format", o.format, "csv, markdown or json")
      ->check(CLI::IsMember({"csv", "markdown", "md", "json"}));
  report->add_option("--out", o.out, "Output file (default stdout)");

  auto* mps = app.add_subcommand("export-mps", "Write the integer program in MPS format");
  mps->add_option("--instance", o.instance, "Instance")->required();
  mps->add_option("--out", o.out, "MPS output (default stdout)");
  mps->add_option("--format", o.format, "fixed (default) or free");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return RunGen(o);
    if (solve->parsed()) return RunSolve(o);
    if (search->parsed()) return RunSearch(o);
    if (bench->parsed()) return RunBench(o);
    if (report->parsed()) return RunReport(o);
    if (mps->parsed()) return RunExportMps(o);
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "airfleet: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}
