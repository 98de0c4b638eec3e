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

// Relocate-neighbourhood local search and its tabu extension.
//
// One sweep visits every (base, mission) pair in scan order. For each
// mission the best strictly improving relocation to another base is
// committed immediately. Search ends after a sweep commits nothing.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "feasibility.hpp"
#include "geo.hpp"
#include "model.hpp"

namespace airfleet {

// A move must beat this (delta < -kImprovementThreshold) to be applied.
inline constexpr double kImprovementThreshold = 1e-9;

struct Move {
  std::size_t mission = 0;
  std::size_t from_base = 0;
  std::size_t from_position = 0;
  std::size_t to_base = 0;
  // Index in the target route before insertion.
  std::size_t to_position = 0;
  double delta_hours = 0.0;

  friend bool operator==(const Move&, const Move&) = default;
};

// Relocation that undoes `move` on the schedule it produced.
Move InverseMove(const Move& move);

// Keys are (mission, target base). An entry added with tenure t blocks its
// key for the next t calls to Tick().
class TabuList {
 public:
  bool Active(std::size_t mission, std::size_t base) const {
    return entries_.count({mission, base}) > 0;
  }
  std::size_t Remaining(std::size_t mission, std::size_t base) const;
  void Add(std::size_t mission, std::size_t base, std::size_t tenure);
  void Tick();
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> entries_;
};

enum class SearchMode { kNeighbourhood, kTabu };

struct SearchConfig {
  SearchMode mode = SearchMode::kNeighbourhood;
  std::size_t tabu_tenure = 7;
  bool permute_scan_order = false;
  std::uint64_t rng_seed = 0;
  std::optional<std::size_t> max_sweeps;
  bool parallel_eval = false;
};

struct SearchResult {
  Schedule schedule;
  double objective_hours = 0.0;
  std::size_t sweeps = 0;
  std::size_t moves_applied = 0;
  // (sweep, objective) after every sweep that applied at least one move.
  std::vector<std::pair<std::size_t, double>> improvement_trace;
  std::vector<Move> moves;
};

struct MoveScan {
  std::optional<Move> best;
  // A feasible strictly improving candidate was skipped because it is tabu.
  bool tabu_blocked = false;
};

// Best strictly improving relocation of routes[base][position], ranked by
// (delta, target base id, target position). Routes must be feasible.
// `route_hours` holds RouteFlightHours for every route.
MoveScan ScanMoves(const Instance& instance, const TravelTimeMatrix& matrix,
                   const Schedule& schedule, std::span<const double> route_hours,
                   std::size_t base, std::size_t position, const TabuList* tabu,
                   bool parallel_eval);

std::optional<Move> EnumerateMoves(const Instance& instance, const TravelTimeMatrix& matrix,
                                   const Schedule& schedule, std::size_t base,
                                   std::size_t position, const TabuList* tabu = nullptr,
                                   bool parallel_eval = false);

// Structural application; throws kConflict when the move does not match the
// schedule (stale source position, same base, or target out of range).
Schedule ApplyMove(Schedule schedule, const Move& move);
void ApplyMoveInPlace(Schedule& schedule, const Move& move);

// Throw kInvalidArgument when `start` is infeasible or incomplete.
SearchResult NeighbourhoodSearch(const Instance& instance, const TravelTimeMatrix& matrix,
                                 const Schedule& start, const SearchConfig& config);
SearchResult TabuSearch(const Instance& instance, const TravelTimeMatrix& matrix,
                        const Schedule& start, const SearchConfig& config);
// Dispatches on config.mode.
SearchResult RunSearch(const Instance& instance, const TravelTimeMatrix& matrix,
                       const Schedule& start, const SearchConfig& config);

// One identity-order neighbourhood sweep over a possibly partial schedule,
// used to reorganize routes during construction. Returns moves applied.
std::size_t RelocationSweep(const Instance& instance, const TravelTimeMatrix& matrix,
                            Schedule& schedule, bool parallel_eval = false);

}  // namespace airfleet
