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

#include "geo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "error.hpp"
#include "model.hpp"

namespace airfleet {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

}  // namespace

bool IsValidPoint(GeoPoint p) {
  return std::isfinite(p.lat) && std::isfinite(p.lon) && p.lat >= -90.0 &&
         p.lat <= 90.0 && p.lon >= -180.0 && p.lon <= 180.0;
}

double HaversineKm(GeoPoint a, GeoPoint b) {
  const double phi1 = a.lat * kDegToRad;
  const double phi2 = b.lat * kDegToRad;
  const double dphi = (b.lat - a.lat) * kDegToRad;
  const double dpsi = (b.lon - a.lon) * kDegToRad;
  const double s_phi = std::sin(dphi / 2.0);
  const double s_psi = std::sin(dpsi / 2.0);
  const double h = s_phi * s_phi + std::cos(phi1) * std::cos(phi2) * s_psi * s_psi;
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(std::clamp(h, 0.0, 1.0)));
}

double TravelHours(GeoPoint a, GeoPoint b, double speed_kmh) {
  if (!(speed_kmh > 0.0) || !std::isfinite(speed_kmh)) {
    Fail(ErrorCode::kInvalidArgument,
         "speed must be positive, got " + std::to_string(speed_kmh));
  }
  return HaversineKm(a, b) / speed_kmh;
}

TravelTimeMatrix::TravelTimeMatrix(std::size_t missions, std::size_t bases)
    : missions_(missions),
      bases_(bases),
      entries_((missions + bases) * (missions + bases) * kLayers, 0.0) {}

TravelTimeMatrix BuildMatrix(const Instance& instance) {
  const std::size_t n = instance.missions.size();
  const std::size_t k = instance.bases.size();
  TravelTimeMatrix matrix(n, k);

  const double speeds[TravelTimeMatrix::kLayers] = {
      instance.ClassSpeed(VehicleClass::kHelicopter),
      instance.ClassSpeed(VehicleClass::kPlane)};

  auto origin = [&](std::size_t node) {
    return node < n ? instance.missions[node].delivery
                    : instance.bases[node - n].location;
  };

  for (std::size_t layer = 0; layer < TravelTimeMatrix::kLayers; ++layer) {
    const double speed = speeds[layer];
    for (std::size_t i = 0; i < n + k; ++i) {
      const GeoPoint from = origin(i);
      for (std::size_t j = 0; j < n + k; ++j) {
        if (i == j) continue;
        double hours;
        if (j < n) {
          const Mission& target = instance.missions[j];
          hours = TravelHours(from, target.pickup, speed) +
                  TravelHours(target.pickup, target.delivery, speed);
        } else {
          hours = TravelHours(from, instance.bases[j - n].location, speed);
        }
        matrix.at(i, j, layer) = hours;
      }
    }
  }
  return matrix;
}

}  // namespace airfleet
