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

#include <gtest/gtest.h>

#include "feasibility.hpp"
#include "support/random_instances.hpp"

namespace airfleet {
namespace {

const std::string kData = AIRFLEET_DATA_DIR;

TEST(SelectNextMission, HeliOnlyPhaseThenDeadlineOrder) {
  Instance in;
  in.bases = {{1, VehicleClass::kHelicopter, 300.0, {45, -80}}};
  in.missions = {{10, {45, -80}, {45.1, -80}, false, 2.0},
                 {11, {45, -80}, {45.1, -80}, true, 9.0},
                 {12, {45, -80}, {45.1, -80}, true, 5.0},
                 {4, {45, -80}, {45.1, -80}, false, 2.0}};
  std::vector<bool> assigned(4, false);
  EXPECT_EQ(SelectNextMission(in, assigned, ConstructPhase::kHeliOnly), 2u);
  assigned[2] = true;
  EXPECT_EQ(SelectNextMission(in, assigned, ConstructPhase::kHeliOnly), 1u);
  assigned[1] = true;
  EXPECT_EQ(SelectNextMission(in, assigned, ConstructPhase::kHeliOnly), std::nullopt);
  // Equal deadlines go to the lower id, not the lower index.
  EXPECT_EQ(SelectNextMission(in, assigned, ConstructPhase::kRemaining), 3u);
  assigned[3] = true;
  EXPECT_EQ(SelectNextMission(in, assigned, ConstructPhase::kRemaining), 0u);
}

TEST(Initialize, EmptyInstance) {
  Instance in;
  in.bases = {{1, VehicleClass::kPlane, 500.0, {45, -80}}};
  const ConstructOutcome out = Initialize(in, BuildMatrix(in));
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(out.schedule->routes.size(), 1u);
  EXPECT_TRUE(out.schedule->routes[0].empty());
}

TEST(Initialize, ShippedSampleIsFeasibleAndOrdered) {
  const Instance in = LoadInstance(kData + "/sample_4.json");
  const TravelTimeMatrix m = BuildMatrix(in);
  const ConstructOutcome out = Initialize(in, m);
  ASSERT_TRUE(out.ok()) << out.failure;
  EXPECT_TRUE(Evaluate(in, m, *out.schedule).feasible);
  // Heli-only missions 2 (deadline 4) and 4 (deadline 8) first, then 1, 3.
  const std::vector<std::size_t> expected = {1, 3, 0, 2};
  EXPECT_EQ(out.assignment_order, expected);
}

TEST(Initialize, AppendsToTheCheapestBase) {
  Instance in;
  in.bases = {{1, VehicleClass::kHelicopter, 300.0, {48.38, -89.25}},   // Thunder Bay
              {2, VehicleClass::kHelicopter, 300.0, {46.49, -80.99}}};  // Sudbury
  in.missions = {{1, {46.31, -79.46}, {46.49, -80.99}, false, 10.0}};
  const ConstructOutcome out = Initialize(in, BuildMatrix(in));
  ASSERT_TRUE(out.ok());
  EXPECT_TRUE(out.schedule->routes[0].empty());
  EXPECT_EQ(out.schedule->routes[1], std::vector<std::size_t>{0});
}

TEST(Initialize, ReportsUnservableMission) {
  Instance in;
  in.bases = {{1, VehicleClass::kPlane, 500.0, {45, -80}}};
  in.missions = {{1, {45, -80}, {46, -80}, true, 10.0}};
  const ConstructOutcome out = Initialize(in, BuildMatrix(in));
  EXPECT_FALSE(out.ok());
  EXPECT_NE(out.failure.find("mission 1"), std::string::npos);
}

TEST(Initialize, ImpossibleDeadlineAfterOthersFails) {
  Instance in;
  in.bases = {{1, VehicleClass::kHelicopter, 300.0, {45, -80}}};
  in.missions = {{1, {45, -80}, {45.1, -80}, false, 5.0},
                 {2, {50, -90}, {50.1, -90}, false, 0.5}};  // unreachable by 0.5 h
  const ConstructOutcome out = Initialize(in, BuildMatrix(in));
  EXPECT_FALSE(out.ok());
}

TEST(Initialize, RandomInstancesYieldFeasibleOrFailure) {
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    testing::RandomInstanceOptions o;
    o.missions = 3 + seed % 10;
    o.bases = 2 + seed % 5;
    const Instance in = testing::RandomInstance(seed, o);
    const TravelTimeMatrix m = BuildMatrix(in);
    const ConstructOutcome out = Initialize(in, m);
    if (!out.ok()) {
      EXPECT_FALSE(out.failure.empty());
      continue;
    }
    ++ok;
    EXPECT_TRUE(ValidateScheduleShape(in, *out.schedule));
    EXPECT_TRUE(Evaluate(in, m, *out.schedule).feasible) << "seed " << seed;
    ConstructConfig parallel;
    parallel.parallel_eval = true;
    EXPECT_EQ(Initialize(in, m, parallel).schedule, out.schedule);
  }
  EXPECT_GT(ok, 50);
}

}  // namespace
}  // namespace airfleet
