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

// Deadline-greedy constructive initialization.
//
// Helicopter-only missions are placed first, then the rest. Within a phase
// the unassigned mission with the earliest deadline is appended to the tail
// of the compatible base with the smallest added flight time. When no base
// can take it, one relocation sweep reorganizes the partial schedule and
// the same mission is retried once.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "geo.hpp"
#include "model.hpp"

namespace airfleet {

struct ConstructConfig {
  std::size_t max_repairs = 50;
  bool parallel_eval = false;
};

struct ConstructOutcome {
  std::optional<Schedule> schedule;
  std::size_t repair_invocations = 0;
  // Missions in the order they were committed.
  std::vector<std::size_t> assignment_order;
  // Set when schedule is empty.
  std::string failure;

  bool ok() const { return schedule.has_value(); }
};

enum class ConstructPhase { kHeliOnly, kRemaining };

// Earliest-deadline unassigned mission (heli-only ones only in kHeliOnly),
// ties to the lowest mission id. Returns nullopt when none qualifies.
std::optional<std::size_t> SelectNextMission(const Instance& instance,
                                             const std::vector<bool>& assigned,
                                             ConstructPhase phase);

ConstructOutcome Initialize(const Instance& instance, const TravelTimeMatrix& matrix,
                            const ConstructConfig& config = {});

}  // namespace airfleet
