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

// Objective and constraint evaluation for schedules.
//
// Timing model: a vehicle leaves its base at time 0. Arriving at a mission
// means the delivery is complete; the vehicle then waits until the mission's
// deadline before departing, so departure times never depend on how early a
// vehicle arrived. Only in-flight time counts toward the flight limit.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "geo.hpp"
#include "model.hpp"

namespace airfleet {

// Slack applied to every "<=" comparison against a time limit.
inline constexpr double kTimeTolerance = 1e-9;

enum class ConstraintTag {
  kAssignment,     // mission missing or assigned more than once
  kUnknownNode,    // route references a node outside the instance
  kBaseInRoute,    // route visits a base node
  kVehicleCompat,  // helicopter-only mission on a plane base
  kDeadline,       // arrival after the mission deadline
  kDayReturn,      // return to base after the end of the day
  kFlightLimit,    // in-flight hours above the daily limit
};

std::string_view TagName(ConstraintTag tag);

struct Violation {
  ConstraintTag tag;
  std::optional<std::size_t> base;
  std::optional<std::size_t> node;
  double magnitude = 0.0;
};

struct EvalReport {
  bool feasible = true;
  double objective_hours = 0.0;
  std::vector<double> per_base_flight_hours;
  std::vector<Violation> violations;
};

struct Visit {
  std::size_t node;
  double arrival;
  double departure;
};

struct ArrivalTrace {
  std::vector<Visit> visits;
  // Arrival back at the owning base; 0 for an empty route.
  double return_arrival = 0.0;
};

// In-flight hours of base -> route... -> base at the base's layer. Throws
// kInvalidArgument on nodes outside the instance.
double RouteFlightHours(const Instance& instance, const TravelTimeMatrix& matrix,
                        std::size_t base, std::span<const std::size_t> route);

ArrivalTrace RouteArrivalTrace(const Instance& instance, const TravelTimeMatrix& matrix,
                               std::size_t base, std::span<const std::size_t> route);

std::vector<Violation> CheckRoute(const Instance& instance, const TravelTimeMatrix& matrix,
                                  std::size_t base, std::span<const std::size_t> route);

EvalReport Evaluate(const Instance& instance, const TravelTimeMatrix& matrix,
                    const Schedule& schedule);

struct InsertionVerdict {
  bool feasible = false;
  double delta_hours = 0.0;
};

// Legality and objective change of inserting `mission` before route[position]
// (position == route.size() appends). The route must already be feasible;
// only the two new legs and the flight total are checked, which is exact
// under the waiting timing model. `route_hours` is RouteFlightHours(route).
InsertionVerdict CheckInsertion(const Instance& instance, const TravelTimeMatrix& matrix,
                                std::size_t base, std::span<const std::size_t> route,
                                double route_hours, std::size_t mission,
                                std::size_t position);

InsertionVerdict CheckInsertion(const Instance& instance, const TravelTimeMatrix& matrix,
                                std::size_t base, std::span<const std::size_t> route,
                                std::size_t mission, std::size_t position);

// Same contract for removing route[position] from a feasible route.
InsertionVerdict CheckRemoval(const Instance& instance, const TravelTimeMatrix& matrix,
                              std::size_t base, std::span<const std::size_t> route,
                              std::size_t position);

}  // namespace airfleet
