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

// Random instances and schedules for property tests.

#pragma once

#include <cstddef>
#include <cstdint>

#include "model.hpp"
#include "rng.hpp"

namespace airfleet::testing {

struct RandomInstanceOptions {
  std::size_t missions = 4;
  std::size_t bases = 3;
  double heli_only_fraction = 0.3;
  double deadline_min_h = 1.0;
  double deadline_max_h = 24.0;
  double flight_limit_h = kDefaultFlightLimitHours;
  // Coordinates are drawn inside this box.
  double lat_min = 43.0, lat_max = 50.0;
  double lon_min = -92.0, lon_max = -78.0;
};

// Mission ids 1..n, base ids 101..100+k. At least one helicopter base.
inline Instance RandomInstance(std::uint64_t seed, const RandomInstanceOptions& o) {
  Rng rng(seed);
  auto point = [&] {
    const double lat = rng.Uniform(o.lat_min, o.lat_max);
    const double lon = rng.Uniform(o.lon_min, o.lon_max);
    return GeoPoint{lat, lon};
  };
  Instance in;
  in.flight_limit_h = o.flight_limit_h;
  for (std::size_t b = 0; b < o.bases; ++b) {
    Base base;
    base.id = static_cast<std::int64_t>(101 + b);
    base.vehicle = (b == 0 || rng.Unit() < 0.6) ? VehicleClass::kHelicopter : VehicleClass::kPlane;
    base.speed_kmh = DefaultSpeed(base.vehicle);
    base.location = point();
    in.bases.push_back(base);
  }
  for (std::size_t m = 0; m < o.missions; ++m) {
    Mission mission;
    mission.id = static_cast<std::int64_t>(1 + m);
    mission.pickup = point();
    mission.delivery = point();
    mission.heli_only = rng.Unit() < o.heli_only_fraction;
    mission.deadline_h = rng.Uniform(o.deadline_min_h, o.deadline_max_h);
    in.missions.push_back(mission);
  }
  return in;
}

// A tighter box with later deadlines, where construction mostly succeeds
// even for 30 missions over a dozen bases.
inline RandomInstanceOptions DenseOptions(std::size_t missions, std::size_t bases) {
  RandomInstanceOptions o;
  o.missions = missions;
  o.bases = bases;
  o.deadline_min_h = 6.0;
  o.lat_max = 46.0;
  o.lon_min = -86.0;
  return o;
}

// Every mission on a uniformly random base at a random position, ignoring
// feasibility.
inline Schedule RandomSchedule(const Instance& in, Rng& rng) {
  Schedule s = Schedule::Empty(in.base_count());
  for (std::size_t m = 0; m < in.mission_count(); ++m) {
    auto& route = s.routes[rng.Index(in.base_count())];
    route.insert(route.begin() + static_cast<std::ptrdiff_t>(rng.Index(route.size() + 1)), m);
  }
  return s;
}

}  // namespace airfleet::testing
