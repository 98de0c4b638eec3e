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

#include "search.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "error.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace airfleet {

Move InverseMove(const Move& move) {
  return Move{move.mission, move.to_base, move.to_position,
              move.from_base, move.from_position, -move.delta_hours};
}

std::size_t TabuList::Remaining(std::size_t mission, std::size_t base) const {
  auto it = entries_.find({mission, base});
  return it == entries_.end() ? 0 : it->second;
}

void TabuList::Add(std::size_t mission, std::size_t base, std::size_t tenure) {
  if (tenure == 0) Fail(ErrorCode::kInvalidArgument, "tabu tenure must be >= 1");
  entries_[{mission, base}] = tenure;
}

void TabuList::Tick() {
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (--it->second == 0) {
      it = entries_.erase(it);
    } else {
      ++it;
    }
  }
}

namespace {

struct Candidate {
  bool found = false;
  std::size_t position = 0;
  double delta = 0.0;
  bool tabu_blocked = false;
};

// Ranking used by both evaluation modes: smaller delta, then lower target
// base id, then lower target position.
bool Better(const Instance& instance, double delta, std::size_t base, std::size_t position,
            const Move& incumbent) {
  if (delta != incumbent.delta_hours) return delta < incumbent.delta_hours;
  const auto id = instance.bases[base].id;
  const auto inc_id = instance.bases[incumbent.to_base].id;
  if (id != inc_id) return id < inc_id;
  return position < incumbent.to_position;
}

Candidate BestInsertion(const Instance& instance, const TravelTimeMatrix& matrix,
                        const Schedule& schedule, std::span<const double> route_hours,
                        std::size_t mission, std::size_t target, double removal_delta,
                        const TabuList* tabu) {
  Candidate best;
  if (!instance.Compatible(target, mission)) return best;
  const bool blocked = tabu != nullptr && tabu->Active(mission, target);
  const auto& route = schedule.routes[target];
  for (std::size_t pos = 0; pos <= route.size(); ++pos) {
    const InsertionVerdict v = CheckInsertion(instance, matrix, target, route,
                                              route_hours[target], mission, pos);
    if (!v.feasible) continue;
    const double delta = removal_delta + v.delta_hours;
    if (!(delta < -kImprovementThreshold)) continue;
    if (blocked) {
      best.tabu_blocked = true;
      continue;
    }
    if (!best.found || delta < best.delta) {
      best.found = true;
      best.position = pos;
      best.delta = delta;
    }
  }
  return best;
}

}  // namespace

MoveScan ScanMoves(const Instance& instance, const TravelTimeMatrix& matrix,
                   const Schedule& schedule, std::span<const double> route_hours,
                   std::size_t base, std::size_t position, const TabuList* tabu,
                   bool parallel_eval) {
  MoveScan scan;
  const auto& source = schedule.routes[base];
  if (position >= source.size()) return scan;
  const std::size_t mission = source[position];
  const InsertionVerdict removal = CheckRemoval(instance, matrix, base, source, position);
  if (!removal.feasible) return scan;

  const std::size_t k = instance.base_count();
  std::vector<Candidate> per_base(k);
  auto evaluate = [&](std::size_t target) {
    if (target == base) return;
    per_base[target] = BestInsertion(instance, matrix, schedule, route_hours, mission, target,
                                     removal.delta_hours, tabu);
  };
  if (parallel_eval && k > 1) {
    ParallelFor(k, evaluate);
  } else {
    for (std::size_t t = 0; t < k; ++t) evaluate(t);
  }

  for (std::size_t t = 0; t < k; ++t) {
    const Candidate& c = per_base[t];
    scan.tabu_blocked |= c.tabu_blocked;
    if (!c.found) continue;
    if (!scan.best || Better(instance, c.delta, t, c.position, *scan.best)) {
      scan.best = Move{mission, base, position, t, c.position, c.delta};
    }
  }
  return scan;
}

std::optional<Move> EnumerateMoves(const Instance& instance, const TravelTimeMatrix& matrix,
                                   const Schedule& schedule, std::size_t base,
                                   std::size_t position, const TabuList* tabu,
                                   bool parallel_eval) {
  std::vector<double> hours(schedule.routes.size());
  for (std::size_t b = 0; b < hours.size(); ++b) {
    hours[b] = RouteFlightHours(instance, matrix, b, schedule.routes[b]);
  }
  return ScanMoves(instance, matrix, schedule, hours, base, position, tabu, parallel_eval).best;
}

void ApplyMoveInPlace(Schedule& schedule, const Move& move) {
  auto conflict = [](const std::string& what) {
    Fail(ErrorCode::kConflict, "cannot apply move: " + what);
  };
  if (move.from_base == move.to_base) conflict("source and target base are equal");
  if (move.from_base >= schedule.routes.size() || move.to_base >= schedule.routes.size()) {
    conflict("base out of range");
  }
  auto& source = schedule.routes[move.from_base];
  auto& target = schedule.routes[move.to_base];
  if (move.from_position >= source.size() || source[move.from_position] != move.mission) {
    conflict("mission is not at the recorded source position");
  }
  if (move.to_position > target.size()) conflict("target position out of range");
  source.erase(source.begin() + static_cast<std::ptrdiff_t>(move.from_position));
  target.insert(target.begin() + static_cast<std::ptrdiff_t>(move.to_position), move.mission);
}

Schedule ApplyMove(Schedule schedule, const Move& move) {
  ApplyMoveInPlace(schedule, move);
  return schedule;
}

namespace {

// Mutable search state shared by both modes.
class Searcher {
 public:
  Searcher(const Instance& instance, const TravelTimeMatrix& matrix, Schedule schedule,
           bool parallel_eval)
      : instance_(instance),
        matrix_(matrix),
        schedule_(std::move(schedule)),
        parallel_eval_(parallel_eval),
        hours_(schedule_.routes.size()) {
    for (std::size_t b = 0; b < hours_.size(); ++b) RefreshHours(b);
  }

  // Returns the number of moves applied; sets `blocked` when a tabu entry
  // hid an improving move at any point of the sweep.
  std::size_t Sweep(const std::vector<std::size_t>& base_order, Rng* rng, TabuList* tabu,
                    std::size_t tenure, bool& blocked, std::vector<Move>* log) {
    std::size_t applied = 0;
    for (std::size_t base : base_order) {
      std::vector<std::size_t> missions = schedule_.routes[base];
      if (rng != nullptr) rng->Shuffle(missions);
      for (std::size_t mission : missions) {
        const auto& route = schedule_.routes[base];
        const auto it = std::find(route.begin(), route.end(), mission);
        const auto position = static_cast<std::size_t>(it - route.begin());
        const MoveScan scan = ScanMoves(instance_, matrix_, schedule_, hours_, base, position,
                                        tabu, parallel_eval_);
        blocked |= scan.tabu_blocked;
        if (tabu != nullptr) tabu->Tick();
        if (!scan.best) continue;
        const Move& move = *scan.best;
        ApplyMoveInPlace(schedule_, move);
        RefreshHours(move.from_base);
        RefreshHours(move.to_base);
        if (tabu != nullptr) tabu->Add(move.mission, move.to_base, tenure);
        if (log != nullptr) log->push_back(move);
        ++applied;
      }
    }
    return applied;
  }

  const Schedule& schedule() const { return schedule_; }
  Schedule& schedule() { return schedule_; }

 private:
  void RefreshHours(std::size_t base) {
    hours_[base] = RouteFlightHours(instance_, matrix_, base, schedule_.routes[base]);
  }

  const Instance& instance_;
  const TravelTimeMatrix& matrix_;
  Schedule schedule_;
  bool parallel_eval_;
  std::vector<double> hours_;
};

SearchResult Run(const Instance& instance, const TravelTimeMatrix& matrix,
                 const Schedule& start, const SearchConfig& config, bool tabu_mode) {
  if (!ValidateScheduleShape(instance, start)) {
    Fail(ErrorCode::kInvalidArgument, "search start is not a complete schedule");
  }
  const EvalReport initial = Evaluate(instance, matrix, start);
  if (!initial.feasible) {
    Fail(ErrorCode::kInvalidArgument, "search start is infeasible");
  }
  if (tabu_mode && config.tabu_tenure == 0) {
    Fail(ErrorCode::kInvalidArgument, "tabu tenure must be >= 1");
  }

  Searcher searcher(instance, matrix, start, config.parallel_eval);
  TabuList tabu;
  SearchResult result;

  std::vector<std::size_t> base_order(instance.base_count());
  std::iota(base_order.begin(), base_order.end(), std::size_t{0});
  while (!config.max_sweeps || result.sweeps < *config.max_sweeps) {
    std::optional<Rng> rng;
    if (config.permute_scan_order) {
      rng.emplace(DeriveSeed(config.rng_seed, {result.sweeps}));
      std::iota(base_order.begin(), base_order.end(), std::size_t{0});
      rng->Shuffle(base_order);
    }
    bool blocked = false;
    const std::size_t applied =
        searcher.Sweep(base_order, rng ? &*rng : nullptr, tabu_mode ? &tabu : nullptr,
                       config.tabu_tenure, blocked, &result.moves);
    ++result.sweeps;
    result.moves_applied += applied;
    if (applied > 0) {
      result.improvement_trace.emplace_back(
          result.sweeps, Evaluate(instance, matrix, searcher.schedule()).objective_hours);
      continue;
    }
    // A tabu-hidden improvement keeps the search alive until its key expires.
    if (!blocked) break;
  }

  result.schedule = searcher.schedule();
  result.objective_hours = Evaluate(instance, matrix, result.schedule).objective_hours;
  return result;
}

}  // namespace

SearchResult NeighbourhoodSearch(const Instance& instance, const TravelTimeMatrix& matrix,
                                 const Schedule& start, const SearchConfig& config) {
  return Run(instance, matrix, start, config, /*tabu_mode=*/false);
}

SearchResult TabuSearch(const Instance& instance, const TravelTimeMatrix& matrix,
                        const Schedule& start, const SearchConfig& config) {
  return Run(instance, matrix, start, config, /*tabu_mode=*/true);
}

SearchResult RunSearch(const Instance& instance, const TravelTimeMatrix& matrix,
                       const Schedule& start, const SearchConfig& config) {
  return config.mode == SearchMode::kTabu ? TabuSearch(instance, matrix, start, config)
                                          : NeighbourhoodSearch(instance, matrix, start, config);
}

std::size_t RelocationSweep(const Instance& instance, const TravelTimeMatrix& matrix,
                            Schedule& schedule, bool parallel_eval) {
  Searcher searcher(instance, matrix, schedule, parallel_eval);
  std::vector<std::size_t> order(instance.base_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  bool blocked = false;
  const std::size_t applied = searcher.Sweep(order, nullptr, nullptr, 1, blocked, nullptr);
  schedule = std::move(searcher.schedule());
  return applied;
}

}  // namespace airfleet
