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

#include "feasibility.hpp"

#include <string>

#include "error.hpp"

namespace airfleet {

std::string_view TagName(ConstraintTag tag) {
  switch (tag) {
    case ConstraintTag::kAssignment: return "assignment";
    case ConstraintTag::kUnknownNode: return "unknown-node";
    case ConstraintTag::kBaseInRoute: return "base-in-route";
    case ConstraintTag::kVehicleCompat: return "vehicle-compat";
    case ConstraintTag::kDeadline: return "deadline";
    case ConstraintTag::kDayReturn: return "day-return";
    case ConstraintTag::kFlightLimit: return "flight-limit";
  }
  return "?";
}

namespace {

void RequireKnown(const Instance& instance, std::size_t base,
                  std::span<const std::size_t> route) {
  if (base >= instance.base_count()) {
    Fail(ErrorCode::kInvalidArgument, "base index " + std::to_string(base) + " out of range");
  }
  for (std::size_t node : route) {
    if (node >= instance.node_count()) {
      Fail(ErrorCode::kInvalidArgument, "route references unknown node " + std::to_string(node));
    }
  }
}

}  // namespace

double RouteFlightHours(const Instance& instance, const TravelTimeMatrix& matrix,
                        std::size_t base, std::span<const std::size_t> route) {
  RequireKnown(instance, base, route);
  if (route.empty()) return 0.0;
  const std::size_t layer = LayerOf(instance.bases[base].vehicle);
  const std::size_t home = instance.BaseNode(base);
  double hours = 0.0;
  std::size_t prev = home;
  for (std::size_t node : route) {
    hours += matrix.at(prev, node, layer);
    prev = node;
  }
  return hours + matrix.at(prev, home, layer);
}

ArrivalTrace RouteArrivalTrace(const Instance& instance, const TravelTimeMatrix& matrix,
                               std::size_t base, std::span<const std::size_t> route) {
  RequireKnown(instance, base, route);
  ArrivalTrace trace;
  if (route.empty()) return trace;
  const std::size_t layer = LayerOf(instance.bases[base].vehicle);
  const std::size_t home = instance.BaseNode(base);
  std::size_t prev = home;
  double clock = 0.0;
  for (std::size_t node : route) {
    const double arrival = clock + matrix.at(prev, node, layer);
    // Base nodes inside a route are already a violation; pass through them.
    const double departure = instance.IsMissionNode(node) ? instance.NodeDeadline(node) : arrival;
    trace.visits.push_back({node, arrival, departure});
    clock = departure;
    prev = node;
  }
  trace.return_arrival = clock + matrix.at(prev, home, layer);
  return trace;
}

std::vector<Violation> CheckRoute(const Instance& instance, const TravelTimeMatrix& matrix,
                                  std::size_t base, std::span<const std::size_t> route) {
  std::vector<Violation> out;
  if (route.empty()) return out;
  const ArrivalTrace trace = RouteArrivalTrace(instance, matrix, base, route);
  for (const Visit& v : trace.visits) {
    if (!instance.IsMissionNode(v.node)) {
      out.push_back({ConstraintTag::kBaseInRoute, base, v.node, 1.0});
      continue;
    }
    if (!instance.Compatible(base, v.node)) {
      out.push_back({ConstraintTag::kVehicleCompat, base, v.node, 1.0});
    }
    const double late = v.arrival - instance.missions[v.node].deadline_h;
    if (late > kTimeTolerance) out.push_back({ConstraintTag::kDeadline, base, v.node, late});
  }
  const double overrun = trace.return_arrival - instance.day_length_h;
  if (overrun > kTimeTolerance) {
    out.push_back({ConstraintTag::kDayReturn, base, std::nullopt, overrun});
  }
  const double excess =
      RouteFlightHours(instance, matrix, base, route) - instance.flight_limit_h;
  if (excess > kTimeTolerance) {
    out.push_back({ConstraintTag::kFlightLimit, base, std::nullopt, excess});
  }
  return out;
}

EvalReport Evaluate(const Instance& instance, const TravelTimeMatrix& matrix,
                    const Schedule& schedule) {
  if (schedule.routes.size() != instance.base_count()) {
    Fail(ErrorCode::kInvalidArgument,
         "schedule has " + std::to_string(schedule.routes.size()) + " routes for " +
             std::to_string(instance.base_count()) + " bases");
  }
  EvalReport report;
  report.per_base_flight_hours.assign(instance.base_count(), 0.0);
  std::vector<int> visits(instance.mission_count(), 0);

  for (std::size_t b = 0; b < schedule.routes.size(); ++b) {
    const auto& route = schedule.routes[b];
    bool known = true;
    for (std::size_t node : route) {
      if (node >= instance.node_count()) {
        report.violations.push_back({ConstraintTag::kUnknownNode, b, node, 1.0});
        known = false;
      } else if (instance.IsMissionNode(node)) {
        ++visits[node];
      }
    }
    if (!known) continue;
    auto violations = CheckRoute(instance, matrix, b, route);
    report.violations.insert(report.violations.end(), violations.begin(), violations.end());
    report.per_base_flight_hours[b] = RouteFlightHours(instance, matrix, b, route);
  }
  for (std::size_t m = 0; m < visits.size(); ++m) {
    if (visits[m] != 1) {
      report.violations.push_back({ConstraintTag::kAssignment, std::nullopt, m,
                                   static_cast<double>(visits[m] == 0 ? 1 : visits[m] - 1)});
    }
  }
  for (double h : report.per_base_flight_hours) report.objective_hours += h;
  report.feasible = report.violations.empty();
  return report;
}

InsertionVerdict CheckInsertion(const Instance& instance, const TravelTimeMatrix& matrix,
                                std::size_t base, std::span<const std::size_t> route,
                                double route_hours, std::size_t mission,
                                std::size_t position) {
  InsertionVerdict verdict;
  if (!instance.IsMissionNode(mission) || position > route.size()) return verdict;
  const std::size_t layer = LayerOf(instance.bases[base].vehicle);
  const std::size_t home = instance.BaseNode(base);
  const std::size_t prev = position == 0 ? home : route[position - 1];
  const std::size_t next = position == route.size() ? home : route[position];

  const double in_leg = matrix.at(prev, mission, layer);
  const double out_leg = matrix.at(mission, next, layer);
  const double old_leg = route.empty() ? 0.0 : matrix.at(prev, next, layer);
  verdict.delta_hours = in_leg + out_leg - old_leg;

  if (!instance.Compatible(base, mission)) return verdict;
  const double start = position == 0 ? 0.0 : instance.NodeDeadline(prev);
  const double deadline = instance.missions[mission].deadline_h;
  if (start + in_leg > deadline + kTimeTolerance) return verdict;
  if (deadline + out_leg > instance.NodeDeadline(next) + kTimeTolerance) return verdict;
  if (route_hours + verdict.delta_hours > instance.flight_limit_h + kTimeTolerance) {
    return verdict;
  }
  verdict.feasible = true;
  return verdict;
}

InsertionVerdict CheckInsertion(const Instance& instance, const TravelTimeMatrix& matrix,
                                std::size_t base, std::span<const std::size_t> route,
                                std::size_t mission, std::size_t position) {
  return CheckInsertion(instance, matrix, base, route,
                        RouteFlightHours(instance, matrix, base, route), mission, position);
}

InsertionVerdict CheckRemoval(const Instance& instance, const TravelTimeMatrix& matrix,
                              std::size_t base, std::span<const std::size_t> route,
                              std::size_t position) {
  InsertionVerdict verdict;
  if (position >= route.size()) return verdict;
  const std::size_t layer = LayerOf(instance.bases[base].vehicle);
  const std::size_t home = instance.BaseNode(base);
  const std::size_t prev = position == 0 ? home : route[position - 1];
  const std::size_t next = position + 1 == route.size() ? home : route[position + 1];
  const std::size_t node = route[position];

  const double new_leg = route.size() == 1 ? 0.0 : matrix.at(prev, next, layer);
  verdict.delta_hours = new_leg - matrix.at(prev, node, layer) - matrix.at(node, next, layer);
  // Flight time cannot grow; only the bridging leg's window needs checking.
  if (route.size() > 1) {
    const double start = position == 0 ? 0.0 : instance.NodeDeadline(prev);
    if (start + new_leg > instance.NodeDeadline(next) + kTimeTolerance) return verdict;
  }
  verdict.feasible = true;
  return verdict;
}

}  // namespace airfleet
