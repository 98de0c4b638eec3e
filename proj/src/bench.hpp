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

// Multi-seed experiment harness: instance families, per-run records and
// Upper / Lower / Average summaries.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exact.hpp"
#include "model.hpp"

namespace airfleet {

enum class Algorithm { kNeighbourhood, kTabu, kNeighbourhoodParallel, kTabuParallel, kExact };

// "ns", "tabu", "ns-par", "tabu-par", "exact".
std::string_view AlgorithmName(Algorithm a);
// Also accepts "both-parallel-modes" via ParseAlgorithmList.
Algorithm ParseAlgorithm(std::string_view name);
std::vector<Algorithm> ParseAlgorithmList(std::string_view comma_separated);

struct BenchPlan {
  std::vector<int> mission_counts = {12, 15, 18, 21, 24, 27, 30, 33};
  int runs_per_point = 10;
  std::vector<Algorithm> algorithms = {Algorithm::kNeighbourhood, Algorithm::kTabu};
  std::uint64_t seed = 1;
  std::size_t tabu_tenure = 7;
  bool permute_scan_order = false;
  ExactLimits exact_limits;
};

// Where instances come from: a fixed file truncated to the first `count`
// missions, or missions generated over a base set and facility pool.
struct InstanceSource {
  std::optional<Instance> fixed;
  std::vector<Base> bases = SampleBases();
  std::vector<GeoPoint> facilities = SampleFacilities();
  GenerationOptions generation;
  double flight_limit_h = kDefaultFlightLimitHours;
  double day_length_h = kDefaultDayLengthHours;
};

// Seeded instance for (count, run); throws kGeneration when no mission set
// admits a constructive schedule.
Instance MakeBenchInstance(const InstanceSource& source, int count, std::uint64_t seed);

struct BenchRecord {
  std::string algorithm;
  int mission_count = 0;
  int run = 0;
  std::uint64_t seed = 0;
  // "ok", "construction_failure", "generation_failure", "infeasible",
  // "node_limit".
  std::string status;
  std::optional<double> objective_hours;
  double runtime_seconds = 0.0;
  double construct_seconds = 0.0;
  // Moves applied for heuristics, nodes explored for the exact solver.
  std::uint64_t iterations = 0;
  std::optional<double> gap_fraction;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

// Deterministic in (plan, source) apart from the timing fields. Records are
// ordered by (mission count, run, algorithm order in the plan).
std::vector<BenchRecord> RunPlan(const BenchPlan& plan, const InstanceSource& source);

std::string RecordsToJson(const std::vector<BenchRecord>& records);
std::vector<BenchRecord> RecordsFromJson(std::string_view text);

struct SummaryRow {
  int mission_count = 0;
  std::string algorithm;
  std::size_t runs = 0;
  double upper = 0.0;
  double lower = 0.0;
  double average = 0.0;
  double mean_runtime_s = 0.0;
  std::optional<double> gap_mean;
  std::optional<double> gap_max;
  std::size_t gap_count = 0;

  friend bool operator==(const SummaryRow&, const SummaryRow&) = default;
};

// One row per (mission count, algorithm) with at least one successful run.
// Cells without one are skipped and described in `notices`.
std::vector<SummaryRow> Summarize(const std::vector<BenchRecord>& records,
                                  std::vector<std::string>* notices = nullptr);

enum class ReportFormat { kCsv, kMarkdown, kJson };
ReportFormat ParseReportFormat(std::string_view name);

std::string RenderReport(const std::vector<SummaryRow>& rows, ReportFormat format);
// Throws kIo when the path is not writable.
void EmitReport(const std::vector<SummaryRow>& rows, ReportFormat format,
                const std::string& path);
std::vector<SummaryRow> SummaryRowsFromCsv(std::string_view text);

}  // namespace airfleet
