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

#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "construct.hpp"
#include "error.hpp"
#include "feasibility.hpp"
#include "json.hpp"
#include "rng.hpp"
#include "search.hpp"

namespace airfleet {

using json = nlohmann::json;

std::string_view AlgorithmName(Algorithm a) {
  switch (a) {
    case Algorithm::kNeighbourhood: return "ns";
    case Algorithm::kTabu: return "tabu";
    case Algorithm::kNeighbourhoodParallel: return "ns-par";
    case Algorithm::kTabuParallel: return "tabu-par";
    case Algorithm::kExact: return "exact";
  }
  return "?";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kNeighbourhood, Algorithm::kTabu,
                      Algorithm::kNeighbourhoodParallel, Algorithm::kTabuParallel,
                      Algorithm::kExact}) {
    if (name == AlgorithmName(a)) return a;
  }
  if (name == "neighbourhood") return Algorithm::kNeighbourhood;
  Fail(ErrorCode::kInvalidArgument, "unknown algorithm '" + std::string(name) + "'");
}

std::vector<Algorithm> ParseAlgorithmList(std::string_view text) {
  std::vector<Algorithm> out;
  auto push = [&](Algorithm a) {
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view token = text.substr(start, comma - start);
    if (token == "both-parallel-modes") {
      push(Algorithm::kNeighbourhoodParallel);
      push(Algorithm::kTabuParallel);
    } else if (!token.empty()) {
      push(ParseAlgorithm(token));
    }
    start = comma + 1;
  }
  if (out.empty()) Fail(ErrorCode::kInvalidArgument, "no algorithms given");
  return out;
}

Instance MakeBenchInstance(const InstanceSource& source, int count, std::uint64_t seed) {
  if (source.fixed) {
    Instance instance = *source.fixed;
    if (count < 0 || static_cast<std::size_t>(count) > instance.missions.size()) {
      Fail(ErrorCode::kInvalidArgument, "instance has fewer than " + std::to_string(count) +
                                            " missions");
    }
    instance.missions.resize(static_cast<std::size_t>(count));
    return instance;
  }
  Instance instance;
  instance.bases = source.bases;
  instance.flight_limit_h = source.flight_limit_h;
  instance.day_length_h = source.day_length_h;
  auto constructible = [&](const std::vector<Mission>& missions) {
    Instance candidate = instance;
    candidate.missions = missions;
    return Initialize(candidate, BuildMatrix(candidate)).ok();
  };
  instance.missions = GenerateMissions(source.bases, source.facilities, count, seed,
                                       source.generation, constructible);
  ValidateInstance(instance);
  return instance;
}

namespace {

double SecondsSince(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<BenchRecord> RunPlan(const BenchPlan& plan, const InstanceSource& source) {
  if (plan.runs_per_point < 1) Fail(ErrorCode::kInvalidArgument, "runs_per_point must be >= 1");
  if (plan.mission_counts.empty()) Fail(ErrorCode::kInvalidArgument, "mission_counts is empty");
  if (plan.algorithms.empty()) Fail(ErrorCode::kInvalidArgument, "no algorithms requested");

  std::vector<BenchRecord> records;
  for (int count : plan.mission_counts) {
    for (int run = 0; run < plan.runs_per_point; ++run) {
      const std::uint64_t seed =
          DeriveSeed(plan.seed, {static_cast<std::uint64_t>(count), static_cast<std::uint64_t>(run)});
      auto make_record = [&](Algorithm a) {
        BenchRecord r;
        r.algorithm = std::string(AlgorithmName(a));
        r.mission_count = count;
        r.run = run;
        r.seed = seed;
        return r;
      };

      std::optional<Instance> instance;
      try {
        instance = MakeBenchInstance(source, count, seed);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kGeneration) throw;
        for (Algorithm a : plan.algorithms) {
          BenchRecord r = make_record(a);
          r.status = "generation_failure";
          records.push_back(r);
        }
        continue;
      }
      const TravelTimeMatrix matrix = BuildMatrix(*instance);

      // The oracle runs first so heuristic records can carry their gap.
      std::optional<ExactResult> oracle;
      std::optional<BenchRecord> exact_record;
      if (std::find(plan.algorithms.begin(), plan.algorithms.end(), Algorithm::kExact) !=
          plan.algorithms.end()) {
        BenchRecord r = make_record(Algorithm::kExact);
        const auto t0 = std::chrono::steady_clock::now();
        oracle = SolveExact(*instance, matrix, plan.exact_limits);
        r.runtime_seconds = SecondsSince(t0);
        r.iterations = oracle->nodes_explored;
        r.status = std::string(oracle->status == ExactStatus::kOptimal ? "ok" : StatusName(oracle->status));
        if (oracle->status == ExactStatus::kOptimal) {
          r.objective_hours = oracle->objective_hours;
          r.gap_fraction = 0.0;
        }
        exact_record = r;
      }

      const auto c0 = std::chrono::steady_clock::now();
      const ConstructOutcome start = Initialize(*instance, matrix);
      const double construct_s = SecondsSince(c0);

      for (Algorithm a : plan.algorithms) {
        if (a == Algorithm::kExact) {
          records.push_back(*exact_record);
          continue;
        }
        BenchRecord r = make_record(a);
        r.construct_seconds = construct_s;
        if (!start.ok()) {
          r.status = "construction_failure";
          records.push_back(r);
          continue;
        }
        SearchConfig config;
        config.mode = (a == Algorithm::kTabu || a == Algorithm::kTabuParallel)
                          ? SearchMode::kTabu
                          : SearchMode::kNeighbourhood;
        config.parallel_eval =
            a == Algorithm::kNeighbourhoodParallel || a == Algorithm::kTabuParallel;
        config.tabu_tenure = plan.tabu_tenure;
        config.permute_scan_order = plan.permute_scan_order;
        config.rng_seed = DeriveSeed(seed, {0x5ea7c4});

        const auto t0 = std::chrono::steady_clock::now();
        const SearchResult result = RunSearch(*instance, matrix, *start.schedule, config);
        r.runtime_seconds = SecondsSince(t0);
        r.status = "ok";
        r.objective_hours = result.objective_hours;
        r.iterations = result.moves_applied;
        if (oracle && oracle->status == ExactStatus::kOptimal) {
          r.gap_fraction = VerifyAgainstOracle(*instance, matrix, result.schedule, *oracle);
        }
        records.push_back(r);
      }
    }
  }
  return records;
}

// --- record stream -----------------------------------------------------------

std::string RecordsToJson(const std::vector<BenchRecord>& records) {
  json doc = json::array();
  for (const BenchRecord& r : records) {
    json j = {{"algorithm", r.algorithm},
              {"mission_count", r.mission_count},
              {"run", r.run},
              {"seed", r.seed},
              {"status", r.status},
              {"runtime_seconds", r.runtime_seconds},
              {"construct_seconds", r.construct_seconds},
              {"iterations", r.iterations}};
    j["objective_hours"] = r.objective_hours ? json(*r.objective_hours) : json(nullptr);
    j["gap_fraction"] = r.gap_fraction ? json(*r.gap_fraction) : json(nullptr);
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::vector<BenchRecord> RecordsFromJson(std::string_view text) {
  std::vector<BenchRecord> out;
  try {
    const json doc = json::parse(text);
    for (const json& j : doc) {
      BenchRecord r;
      r.algorithm = j.at("algorithm").get<std::string>();
      r.mission_count = j.at("mission_count").get<int>();
      r.run = j.value("run", 0);
      r.seed = j.value("seed", std::uint64_t{0});
      r.status = j.at("status").get<std::string>();
      r.runtime_seconds = j.value("runtime_seconds", 0.0);
      r.construct_seconds = j.value("construct_seconds", 0.0);
      r.iterations = j.value("iterations", std::uint64_t{0});
      if (j.contains("objective_hours") && !j["objective_hours"].is_null()) {
        r.objective_hours = j["objective_hours"].get<double>();
      }
      if (j.contains("gap_fraction") && !j["gap_fraction"].is_null()) {
        r.gap_fraction = j["gap_fraction"].get<double>();
      }
      out.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, std::string("bench records: ") + e.what());
  }
  return out;
}

// --- summaries ---------------------------------------------------------------

std::vector<SummaryRow> Summarize(const std::vector<BenchRecord>& records,
                                  std::vector<std::string>* notices) {
  // Cells keep first-appearance order of algorithms within each count.
  std::map<int, std::vector<std::string>> algorithms;
  std::map<std::pair<int, std::string>, std::vector<const BenchRecord*>> cells;
  for (const BenchRecord& r : records) {
    auto& names = algorithms[r.mission_count];
    if (std::find(names.begin(), names.end(), r.algorithm) == names.end()) {
      names.push_back(r.algorithm);
    }
    cells[{r.mission_count, r.algorithm}].push_back(&r);
  }

  std::vector<SummaryRow> rows;
  for (const auto& [count, names] : algorithms) {
    for (const std::string& name : names) {
      SummaryRow row;
      row.mission_count = count;
      row.algorithm = name;
      double sum = 0.0, runtime = 0.0, gap_sum = 0.0;
      for (const BenchRecord* r : cells[{count, name}]) {
        if (r->status != "ok" || !r->objective_hours) continue;
        const double v = *r->objective_hours;
        row.upper = row.runs == 0 ? v : std::max(row.upper, v);
        row.lower = row.runs == 0 ? v : std::min(row.lower, v);
        sum += v;
        runtime += r->runtime_seconds;
        ++row.runs;
        if (r->gap_fraction) {
          gap_sum += *r->gap_fraction;
          row.gap_max = row.gap_count == 0 ? *r->gap_fraction
                                           : std::max(*row.gap_max, *r->gap_fraction);
          ++row.gap_count;
        }
      }
      if (row.runs == 0) {
        if (notices != nullptr) {
          notices->push_back("no successful runs for " + name + " at " + std::to_string(count) +
                             " missions; row omitted");
        }
        continue;
      }
      row.average = sum / static_cast<double>(row.runs);
      row.mean_runtime_s = runtime / static_cast<double>(row.runs);
      if (row.gap_count > 0) row.gap_mean = gap_sum / static_cast<double>(row.gap_count);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "markdown" || name == "md") return ReportFormat::kMarkdown;
  if (name == "json") return ReportFormat::kJson;
  Fail(ErrorCode::kInvalidArgument, "unknown report format '" + std::string(name) + "'");
}

namespace {

constexpr const char* kCsvHeader =
    "mission_count,algorithm,runs,upper,lower,average,mean_runtime_s,gap_mean,gap_max,gap_count";

std::string Fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

std::string Exact(double v) { return Fmt("%.17g", v); }

std::string RenderCsv(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const SummaryRow& r : rows) {
    out << r.mission_count << ',' << r.algorithm << ',' << r.runs << ',' << Exact(r.upper) << ','
        << Exact(r.lower) << ',' << Exact(r.average) << ',' << Exact(r.mean_runtime_s) << ','
        << (r.gap_mean ? Exact(*r.gap_mean) : "") << ',' << (r.gap_max ? Exact(*r.gap_max) : "")
        << ',' << r.gap_count << '\n';
  }
  return out.str();
}

std::string RenderJson(const std::vector<SummaryRow>& rows) {
  json doc = json::array();
  for (const SummaryRow& r : rows) {
    doc.push_back({{"mission_count", r.mission_count},
                   {"algorithm", r.algorithm},
                   {"runs", r.runs},
                   {"upper", r.upper},
                   {"lower", r.lower},
                   {"average", r.average},
                   {"mean_runtime_s", r.mean_runtime_s},
                   {"gap_mean", r.gap_mean ? json(*r.gap_mean) : json(nullptr)},
                   {"gap_max", r.gap_max ? json(*r.gap_max) : json(nullptr)},
                   {"gap_count", r.gap_count}});
  }
  return doc.dump(2) + "\n";
}

// Two tables: mean runtimes per algorithm, then U/L/A objectives next to the
// exact optimum.
std::string RenderMarkdown(const std::vector<SummaryRow>& rows) {
  std::vector<int> counts;
  std::vector<std::string> algorithms;
  std::map<std::pair<int, std::string>, const SummaryRow*> cell;
  for (const SummaryRow& r : rows) {
    if (std::find(counts.begin(), counts.end(), r.mission_count) == counts.end()) {
      counts.push_back(r.mission_count);
    }
    if (std::find(algorithms.begin(), algorithms.end(), r.algorithm) == algorithms.end()) {
      algorithms.push_back(r.algorithm);
    }
    cell[{r.mission_count, r.algorithm}] = &r;
  }
  std::sort(counts.begin(), counts.end());
  std::vector<std::string> heuristics;
  for (const std::string& a : algorithms) {
    if (a != "exact") heuristics.push_back(a);
  }
  auto find = [&](int c, const std::string& a) -> const SummaryRow* {
    auto it = cell.find({c, a});
    return it == cell.end() ? nullptr : it->second;
  };

  std::ostringstream out;
  out << "## Mean runtime (seconds)\n\n| Missions |";
  for (const std::string& a : algorithms) out << ' ' << a << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < algorithms.size(); ++i) out << "---|";
  out << '\n';
  for (int c : counts) {
    out << "| " << c << " |";
    for (const std::string& a : algorithms) {
      const SummaryRow* r = find(c, a);
      out << ' ' << (r ? Fmt("%.4f", r->mean_runtime_s) : "N/A") << " |";
    }
    out << '\n';
  }

  out << "\n## Total mission hours (U: worst, L: best, A: average)\n\n| Missions | Optimal |";
  for (const std::string& a : heuristics) out << ' ' << a << " |";
  out << "\n|---|---|";
  for (std::size_t i = 0; i < heuristics.size(); ++i) out << "---|";
  out << '\n';
  for (int c : counts) {
    const SummaryRow* opt = find(c, "exact");
    out << "| " << c << " | " << (opt ? Fmt("%.3f", opt->average) : "N/A") << " |";
    for (const std::string& a : heuristics) {
      const SummaryRow* r = find(c, a);
      if (r == nullptr) {
        out << " N/A |";
        continue;
      }
      out << " U: " << Fmt("%.3f", r->upper) << "<br>L: " << Fmt("%.3f", r->lower)
          << "<br>A: " << Fmt("%.3f", r->average);
      if (r->gap_mean) out << "<br>gap: " << Fmt("%.2f", 100.0 * *r->gap_mean) << "%";
      out << " |";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string RenderReport(const std::vector<SummaryRow>& rows, ReportFormat format) {
  switch (format) {
    case ReportFormat::kCsv: return RenderCsv(rows);
    case ReportFormat::kJson: return RenderJson(rows);
    case ReportFormat::kMarkdown: return RenderMarkdown(rows);
  }
  return {};
}

void EmitReport(const std::vector<SummaryRow>& rows, ReportFormat format,
                const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorCode::kIo, "cannot write '" + path + "'");
  out << RenderReport(rows, format);
  out.flush();
  if (!out) Fail(ErrorCode::kIo, "write failed for '" + path + "'");
}

std::vector<SummaryRow> SummaryRowsFromCsv(std::string_view text) {
  std::vector<SummaryRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    Fail(ErrorCode::kParse, "summary CSV: unexpected header");
  }
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (cells.size() != 10) {
      Fail(ErrorCode::kParse, "summary CSV line " + std::to_string(line_no) + ": expected 10 fields");
    }
    try {
      SummaryRow r;
      r.mission_count = std::stoi(cells[0]);
      r.algorithm = cells[1];
      r.runs = std::stoul(cells[2]);
      r.upper = std::stod(cells[3]);
      r.lower = std::stod(cells[4]);
      r.average = std::stod(cells[5]);
      r.mean_runtime_s = std::stod(cells[6]);
      if (!cells[7].empty()) r.gap_mean = std::stod(cells[7]);
      if (!cells[8].empty()) r.gap_max = std::stod(cells[8]);
      r.gap_count = std::stoul(cells[9]);
      rows.push_back(std::move(r));
    } catch (const std::exception& e) {
      Fail(ErrorCode::kParse, "summary CSV line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return rows;
}

}  // namespace airfleet
