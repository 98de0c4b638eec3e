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

// Great-circle distances and the node-to-node travel-time matrix.

#pragma once

#include <cstddef>
#include <vector>

namespace airfleet {

struct Instance;

// Mean Earth radius. Oracle scripts must use the same constant.
inline constexpr double kEarthRadiusKm = 6371.0;

// Geodetic coordinates in degrees.
struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

bool IsValidPoint(GeoPoint p);

double HaversineKm(GeoPoint a, GeoPoint b);

// Throws kInvalidArgument when speed_kmh <= 0.
double TravelHours(GeoPoint a, GeoPoint b, double speed_kmh);

// Travel times in hours between the n + k nodes of an instance, one layer per
// vehicle class (0 = helicopter, 1 = plane). Missions occupy nodes [0, n),
// bases occupy [n, n + k).
//
// Entering a mission node includes flying its pickup -> delivery leg, so
// at(i, j) for a mission j is travel(origin(i), pickup_j) + leg_j where
// origin(i) is the delivery point of mission i or the location of base i.
class TravelTimeMatrix {
 public:
  static constexpr std::size_t kLayers = 2;

  TravelTimeMatrix() = default;
  TravelTimeMatrix(std::size_t missions, std::size_t bases);

  std::size_t mission_count() const { return missions_; }
  std::size_t base_count() const { return bases_; }
  std::size_t node_count() const { return missions_ + bases_; }

  double at(std::size_t from, std::size_t to, std::size_t layer) const {
    return entries_[(from * node_count() + to) * kLayers + layer];
  }
  double& at(std::size_t from, std::size_t to, std::size_t layer) {
    return entries_[(from * node_count() + to) * kLayers + layer];
  }

 private:
  std::size_t missions_ = 0;
  std::size_t bases_ = 0;
  std::vector<double> entries_;
};

// Assumes a validated instance.
TravelTimeMatrix BuildMatrix(const Instance& instance);

}  // namespace airfleet
