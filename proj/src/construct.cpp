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

#include "construct.hpp"

#include "feasibility.hpp"
#include "parallel.hpp"
#include "search.hpp"

namespace airfleet {

std::optional<std::size_t> SelectNextMission(const Instance& instance,
                                             const std::vector<bool>& assigned,
                                             ConstructPhase phase) {
  std::optional<std::size_t> best;
  for (std::size_t m = 0; m < instance.mission_count(); ++m) {
    if (assigned[m]) continue;
    const Mission& mission = instance.missions[m];
    if (phase == ConstructPhase::kHeliOnly && !mission.heli_only) continue;
    if (!best) {
      best = m;
      continue;
    }
    const Mission& current = instance.missions[*best];
    if (mission.deadline_h < current.deadline_h ||
        (mission.deadline_h == current.deadline_h && mission.id < current.id)) {
      best = m;
    }
  }
  return best;
}

namespace {

struct TailSlot {
  bool feasible = false;
  double delta = 0.0;
};

// Best base for appending `mission`: smallest delta, ties to lowest base id.
std::optional<std::size_t> BestBase(const Instance& instance, const TravelTimeMatrix& matrix,
                                    const Schedule& schedule, std::size_t mission,
                                    bool parallel_eval) {
  const std::size_t k = instance.base_count();
  std::vector<TailSlot> slots(k);
  auto evaluate = [&](std::size_t b) {
    const auto& route = schedule.routes[b];
    const InsertionVerdict v = CheckInsertion(instance, matrix, b, route, mission, route.size());
    slots[b] = {v.feasible, v.delta_hours};
  };
  if (parallel_eval && k > 1) {
    ParallelFor(k, evaluate);
  } else {
    for (std::size_t b = 0; b < k; ++b) evaluate(b);
  }

  std::optional<std::size_t> best;
  for (std::size_t b = 0; b < k; ++b) {
    if (!slots[b].feasible) continue;
    if (!best || slots[b].delta < slots[*best].delta ||
        (slots[b].delta == slots[*best].delta && instance.bases[b].id < instance.bases[*best].id)) {
      best = b;
    }
  }
  return best;
}

}  // namespace

ConstructOutcome Initialize(const Instance& instance, const TravelTimeMatrix& matrix,
                            const ConstructConfig& config) {
  ConstructOutcome outcome;
  Schedule schedule = Schedule::Empty(instance.base_count());
  std::vector<bool> assigned(instance.mission_count(), false);

  for (ConstructPhase phase : {ConstructPhase::kHeliOnly, ConstructPhase::kRemaining}) {
    while (auto next = SelectNextMission(instance, assigned, phase)) {
      const std::size_t mission = *next;
      auto base = BestBase(instance, matrix, schedule, mission, config.parallel_eval);
      if (!base) {
        const std::string who = "mission " + std::to_string(instance.missions[mission].id);
        if (outcome.assignment_order.empty()) {
          outcome.failure = who + " fits no base and nothing is assigned yet";
          return outcome;
        }
        if (outcome.repair_invocations >= config.max_repairs) {
          outcome.failure = who + " fits no base and the repair budget is exhausted";
          return outcome;
        }
        ++outcome.repair_invocations;
        if (RelocationSweep(instance, matrix, schedule, config.parallel_eval) == 0) {
          outcome.failure = who + " fits no base and no reorganization is possible";
          return outcome;
        }
        base = BestBase(instance, matrix, schedule, mission, config.parallel_eval);
        if (!base) {
          outcome.failure = who + " still fits no base after reorganization";
          return outcome;
        }
      }
      schedule.routes[*base].push_back(mission);
      assigned[mission] = true;
      outcome.assignment_order.push_back(mission);
    }
  }
  outcome.schedule = std::move(schedule);
  return outcome;
}

}  // namespace airfleet
