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

#include <gtest/gtest.h>

#include <cmath>

#include "error.hpp"
#include "model.hpp"
#include "support/random_instances.hpp"

namespace airfleet {
namespace {

// Reference distances from an independent haversine script (R = 6371 km),
// frozen here.
struct DistanceCase {
  GeoPoint a, b;
  double km;
};

const DistanceCase kDistances[] = {
    {{43.6532, -79.3832}, {45.4215, -75.6972}, 352.0961642940289},   // Toronto - Ottawa
    {{48.3809, -89.2477}, {46.4917, -80.993}, 655.0414711106422},    // Thunder Bay - Sudbury
    {{0, 0}, {0, 90}, 10007.543398010284},
    {{90, 0}, {-90, 0}, 20015.086796020572},
    {{51.2, -93.5}, {51.2, -93.5}, 0.0},
    {{10, 179.5}, {10, -179.5}, 109.5055839436892},                  // across the antimeridian
    {{0, 0}, {0, 180}, 20015.086796020572},
};

TEST(Haversine, MatchesReferenceDistances) {
  for (const auto& c : kDistances) {
    EXPECT_NEAR(HaversineKm(c.a, c.b), c.km, 1e-9) << c.a.lat << "," << c.a.lon;
    EXPECT_NEAR(HaversineKm(c.b, c.a), c.km, 1e-9);
  }
}

TEST(Haversine, TravelHoursDividesBySpeed) {
  EXPECT_NEAR(TravelHours({43.6532, -79.3832}, {45.4215, -75.6972}, 300.0),
              1.1736538809800963, 1e-12);
  EXPECT_NEAR(TravelHours({48.3809, -89.2477}, {46.4917, -80.993}, 500.0),
              1.3100829422212843, 1e-12);
  EXPECT_EQ(TravelHours({1, 2}, {1, 2}, 300.0), 0.0);
}

TEST(Haversine, RejectsNonPositiveSpeed) {
  try {
    TravelHours({0, 0}, {1, 1}, 0.0);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  EXPECT_THROW(TravelHours({0, 0}, {1, 1}, -5.0), Error);
}

TEST(GeoPoint, Validity) {
  EXPECT_TRUE(IsValidPoint({90, 180}));
  EXPECT_TRUE(IsValidPoint({-90, -180}));
  EXPECT_FALSE(IsValidPoint({90.5, 0}));
  EXPECT_FALSE(IsValidPoint({0, 181}));
  EXPECT_FALSE(IsValidPoint({std::nan(""), 0}));
}

Instance TwoByTwo() {
  Instance in;
  in.bases = {{10, VehicleClass::kHelicopter, 300.0, {46.4917, -80.993}},
              {20, VehicleClass::kPlane, 500.0, {48.3809, -89.2477}}};
  in.missions = {{1, {43.6532, -79.3832}, {45.4215, -75.6972}, false, 12.0},
                 {2, {48.3809, -89.2477}, {46.4917, -80.993}, true, 20.0}};
  return in;
}

TEST(TravelTimeMatrix, MissionEntryIncludesTheTransportLeg) {
  const Instance in = TwoByTwo();
  const TravelTimeMatrix m = BuildMatrix(in);
  ASSERT_EQ(m.node_count(), 4u);
  // Base 10 (node 2) to mission 1 (node 0), helicopter layer.
  const double approach = HaversineKm({46.4917, -80.993}, {43.6532, -79.3832}) / 300.0;
  const double leg = 352.0961642940289 / 300.0;
  EXPECT_NEAR(m.at(2, 0, 0), approach + leg, 1e-12);
  // Mission 1 to mission 2: from delivery of 1 to pickup of 2, plus leg of 2.
  const double hop = HaversineKm({45.4215, -75.6972}, {48.3809, -89.2477}) / 500.0;
  EXPECT_NEAR(m.at(0, 1, 1), hop + 655.0414711106422 / 500.0, 1e-12);
  // Mission to base: delivery point to the base, no extra leg.
  EXPECT_NEAR(m.at(1, 2, 0), 0.0, 1e-12);  // mission 2 delivers at Sudbury
}

TEST(TravelTimeMatrix, DiagonalIsZeroAndLayersScaleBySpeed) {
  const Instance in = TwoByTwo();
  const TravelTimeMatrix m = BuildMatrix(in);
  for (std::size_t i = 0; i < m.node_count(); ++i) {
    for (std::size_t l = 0; l < TravelTimeMatrix::kLayers; ++l) EXPECT_EQ(m.at(i, i, l), 0.0);
    for (std::size_t j = 0; j < m.node_count(); ++j) {
      if (i != j) EXPECT_NEAR(m.at(i, j, 0) * 300.0, m.at(i, j, 1) * 500.0, 1e-9);
    }
  }
}

TEST(TravelTimeMatrix, EmptyInstance) {
  Instance in;
  const TravelTimeMatrix m = BuildMatrix(in);
  EXPECT_EQ(m.node_count(), 0u);
}

// Insertion costs are never negative because the matrix obeys the triangle
// inequality through every intermediate node.
TEST(TravelTimeMatrix, TriangleInequalityOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    testing::RandomInstanceOptions o;
    o.missions = 6;
    o.bases = 3;
    const Instance in = testing::RandomInstance(seed, o);
    const TravelTimeMatrix m = BuildMatrix(in);
    const std::size_t nodes = m.node_count();
    for (std::size_t l = 0; l < 2; ++l)
      for (std::size_t i = 0; i < nodes; ++i)
        for (std::size_t j = 0; j < nodes; ++j)
          for (std::size_t x = 0; x < in.mission_count(); ++x) {
            if (x == i || x == j || i == j) continue;
            EXPECT_LE(m.at(i, j, l), m.at(i, x, l) + m.at(x, j, l) + 1e-12);
          }
  }
}

}  // namespace
}  // namespace airfleet
