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

// Problem instances, schedules, file ingestion and mission generation.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "geo.hpp"

namespace airfleet {

// The enumerator value is both the vehicle flag (0 helicopter, 1 plane) and
// the travel-time matrix layer.
enum class VehicleClass : std::uint8_t { kHelicopter = 0, kPlane = 1 };

inline constexpr double kHelicopterSpeedKmh = 300.0;
inline constexpr double kPlaneSpeedKmh = 500.0;
inline constexpr double kDefaultFlightLimitHours = 10.0;
inline constexpr double kDefaultDayLengthHours = 24.0;

constexpr std::size_t LayerOf(VehicleClass v) { return static_cast<std::size_t>(v); }
double DefaultSpeed(VehicleClass v);
std::string_view VehicleName(VehicleClass v);
VehicleClass ParseVehicle(std::string_view text);

struct Base {
  std::int64_t id = 0;
  VehicleClass vehicle = VehicleClass::kHelicopter;
  double speed_kmh = kHelicopterSpeedKmh;
  GeoPoint location;
};

struct Mission {
  std::int64_t id = 0;
  GeoPoint pickup;
  GeoPoint delivery;
  bool heli_only = false;
  // Latest arrival (delivery completion) time, hours after the day starts.
  double deadline_h = 24.0;
};

struct Instance {
  std::vector<Base> bases;
  std::vector<Mission> missions;
  double flight_limit_h = kDefaultFlightLimitHours;
  double day_length_h = kDefaultDayLengthHours;

  std::size_t mission_count() const { return missions.size(); }
  std::size_t base_count() const { return bases.size(); }
  std::size_t node_count() const { return missions.size() + bases.size(); }
  std::size_t BaseNode(std::size_t base) const { return missions.size() + base; }
  bool IsMissionNode(std::size_t node) const { return node < missions.size(); }

  // Speed shared by all bases of class v, or the class default when the
  // instance has no such base.
  double ClassSpeed(VehicleClass v) const;

  // Deadline of a mission node; bases impose the end of the day.
  double NodeDeadline(std::size_t node) const {
    return node < missions.size() ? missions[node].deadline_h : day_length_h;
  }

  bool Compatible(std::size_t base, std::size_t mission) const {
    return !missions[mission].heli_only ||
           bases[base].vehicle == VehicleClass::kHelicopter;
  }
};

// Throws kValidation naming the violated invariant. Returns soft warnings
// (currently: heli-only missions with no helicopter base).
std::vector<std::string> ValidateInstance(const Instance& instance);

// One ordered route per base, holding node indices. Valid schedules only
// contain mission nodes; the owning base brackets each route implicitly.
struct Schedule {
  std::vector<std::vector<std::size_t>> routes;

  static Schedule Empty(std::size_t bases) {
    return Schedule{std::vector<std::vector<std::size_t>>(bases)};
  }
  friend bool operator==(const Schedule&, const Schedule&) = default;
};

// True iff there is one route per base and every mission appears exactly
// once with no unknown or base nodes.
bool ValidateScheduleShape(const Instance& instance, const Schedule& schedule);

// --- file formats ------------------------------------------------------------

Instance InstanceFromJson(std::string_view text);
std::string InstanceToJson(const Instance& instance);
Instance LoadInstanceJson(const std::string& path);
void SaveInstanceJson(const Instance& instance, const std::string& path);

// bases.csv + missions.csv with header rows. Limits take their defaults.
Instance InstanceFromCsv(std::istream& bases, std::istream& missions);
Instance LoadInstanceCsv(const std::string& bases_path,
                         const std::string& missions_path);

// Dispatches on extension: ".json" or a "bases.csv,missions.csv" pair.
Instance LoadInstance(const std::string& spec);

std::string ScheduleToJson(const Instance& instance, const Schedule& schedule);
// Routes reference mission ids; unknown ids throw kParse.
Schedule ScheduleFromJson(const Instance& instance, std::string_view text);

// --- generation --------------------------------------------------------------

struct GenerationOptions {
  double heli_only_fraction = 0.25;
  double deadline_min_h = 2.0;
  double deadline_max_h = 24.0;
  int max_attempts = 100;
};

// Returns true when a candidate mission set is acceptable (e.g. the
// constructive heuristic finds a schedule for it).
using MissionSetCheck = std::function<bool(const std::vector<Mission>&)>;

// Deterministic in (inputs, seed). Pickup and delivery are distinct pool
// entries whenever the pool holds at least two points. When `accept` is
// given, deadlines are redrawn until it passes, at most max_attempts times,
// then kGeneration is thrown.
std::vector<Mission> GenerateMissions(const std::vector<Base>& bases,
                                      const std::vector<GeoPoint>& facility_pool,
                                      int count, std::uint64_t seed,
                                      const GenerationOptions& options = {},
                                      const MissionSetCheck& accept = {});

// Synthetic Ontario-like data: 8 helicopter + 4 plane bases and a pool of
// health-facility coordinates. Not real operational data.
std::vector<Base> SampleBases();
std::vector<GeoPoint> SampleFacilities();

}  // namespace airfleet
