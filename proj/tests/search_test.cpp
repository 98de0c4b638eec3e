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

#include "search.hpp"

#include <gtest/gtest.h>

#include "construct.hpp"
#include "error.hpp"
#include "exact.hpp"
#include "feasibility.hpp"
#include "support/random_instances.hpp"

namespace airfleet {
namespace {

// Thunder Bay and Sudbury helicopters; the only mission sits near Sudbury but
// starts on the Thunder Bay route.
struct TwoBases {
  Instance in;
  TravelTimeMatrix m;
  Schedule start = Schedule::Empty(2);

  TwoBases() {
    in.bases = {{1, VehicleClass::kHelicopter, 300.0, {48.38, -89.25}},
                {2, VehicleClass::kHelicopter, 300.0, {46.49, -80.99}}};
    in.missions = {{1, {46.31, -79.46}, {46.49, -80.99}, false, 20.0}};
    m = BuildMatrix(in);
    start.routes[0] = {0};
  }
};

TEST(TabuList, TenureCountsTicks) {
  TabuList t;
  EXPECT_THROW(t.Add(1, 2, 0), Error);
  t.Add(1, 2, 2);
  EXPECT_TRUE(t.Active(1, 2));
  EXPECT_FALSE(t.Active(2, 1));
  EXPECT_EQ(t.Remaining(1, 2), 2u);
  t.Tick();
  EXPECT_TRUE(t.Active(1, 2));
  t.Tick();
  EXPECT_FALSE(t.Active(1, 2));
  EXPECT_TRUE(t.empty());
}

TEST(EnumerateMoves, RelocatesToTheNearBase) {
  TwoBases f;
  const auto move = EnumerateMoves(f.in, f.m, f.start, 0, 0);
  ASSERT_TRUE(move.has_value());
  EXPECT_EQ(move->to_base, 1u);
  EXPECT_EQ(move->to_position, 0u);
  const double expected = RouteFlightHours(f.in, f.m, 1, std::vector<std::size_t>{0}) -
                          RouteFlightHours(f.in, f.m, 0, std::vector<std::size_t>{0});
  EXPECT_NEAR(move->delta_hours, expected, 1e-12);
  EXPECT_LT(move->delta_hours, 0.0);
  // Already on the near base: every alternative is worse.
  Schedule near = Schedule::Empty(2);
  near.routes[1] = {0};
  EXPECT_FALSE(EnumerateMoves(f.in, f.m, near, 1, 0).has_value());
}

TEST(EnumerateMoves, NoCompatibleOtherBase) {
  TwoBases f;
  f.in.bases[1].vehicle = VehicleClass::kPlane;
  f.in.bases[1].speed_kmh = 500.0;
  f.in.missions[0].heli_only = true;
  f.m = BuildMatrix(f.in);
  EXPECT_FALSE(EnumerateMoves(f.in, f.m, f.start, 0, 0).has_value());
}

// The only improving relocation is tabu for two iterations, then allowed.
TEST(ScanMoves, TabuEntrySkipsMoveUntilExpiry) {
  TwoBases f;
  std::vector<double> hours = {RouteFlightHours(f.in, f.m, 0, f.start.routes[0]), 0.0};
  TabuList tabu;
  tabu.Add(0, 1, 2);
  for (int iteration = 0; iteration < 2; ++iteration) {
    const MoveScan scan = ScanMoves(f.in, f.m, f.start, hours, 0, 0, &tabu, false);
    EXPECT_FALSE(scan.best.has_value()) << iteration;
    EXPECT_TRUE(scan.tabu_blocked);
    tabu.Tick();
  }
  const MoveScan scan = ScanMoves(f.in, f.m, f.start, hours, 0, 0, &tabu, false);
  ASSERT_TRUE(scan.best.has_value());
  EXPECT_EQ(scan.best->to_base, 1u);
  EXPECT_FALSE(scan.tabu_blocked);
}

TEST(ApplyMove, InverseRestoresSchedule) {
  TwoBases f;
  const Move move = *EnumerateMoves(f.in, f.m, f.start, 0, 0);
  const Schedule after = ApplyMove(f.start, move);
  EXPECT_EQ(after.routes[1], std::vector<std::size_t>{0});
  EXPECT_EQ(ApplyMove(after, InverseMove(move)), f.start);
  // Replaying on the moved schedule is stale.
  try {
    ApplyMove(after, move);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConflict);
  }
}

TEST(Search, SingleRelocation) {
  TwoBases f;
  for (SearchMode mode : {SearchMode::kNeighbourhood, SearchMode::kTabu}) {
    SearchConfig c;
    c.mode = mode;
    const SearchResult r = RunSearch(f.in, f.m, f.start, c);
    EXPECT_EQ(r.moves_applied, 1u);
    EXPECT_EQ(r.schedule.routes[1], std::vector<std::size_t>{0});
    EXPECT_NEAR(r.objective_hours, Evaluate(f.in, f.m, r.schedule).objective_hours, 0.0);
  }
}

TEST(Search, RejectsBadStarts) {
  TwoBases f;
  SearchConfig c;
  EXPECT_THROW(NeighbourhoodSearch(f.in, f.m, Schedule::Empty(2), c), Error);
  f.in.missions[0].deadline_h = 0.1;
  EXPECT_THROW(NeighbourhoodSearch(f.in, f.m, f.start, c), Error);
  TwoBases g;
  c.tabu_tenure = 0;
  EXPECT_THROW(TabuSearch(g.in, g.m, g.start, c), Error);
}

TEST(Search, ZeroMissionInstance) {
  Instance in;
  in.bases = {{1, VehicleClass::kHelicopter, 300.0, {45, -80}}};
  const SearchResult r = TabuSearch(in, BuildMatrix(in), Schedule::Empty(1), {});
  EXPECT_EQ(r.moves_applied, 0u);
  EXPECT_EQ(r.objective_hours, 0.0);
}

TEST(Search, OptimalStartIsAFixedPoint) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    testing::RandomInstanceOptions o;
    o.missions = 1 + seed % 6;
    o.bases = 2 + seed % 3;
    const Instance in = testing::RandomInstance(seed, o);
    const TravelTimeMatrix m = BuildMatrix(in);
    const ExactResult opt = SolveExact(in, m);
    if (opt.status != ExactStatus::kOptimal) continue;
    for (SearchMode mode : {SearchMode::kNeighbourhood, SearchMode::kTabu}) {
      SearchConfig c;
      c.mode = mode;
      const SearchResult r = RunSearch(in, m, *opt.schedule, c);
      EXPECT_EQ(r.moves_applied, 0u) << "seed " << seed;
      EXPECT_EQ(r.schedule, *opt.schedule);
    }
  }
}

// Replays every logged move and checks feasibility, monotonicity, the
// delta bookkeeping and the inverse property along the way.
TEST(Search, InvariantsAlongTheTrajectory) {
  int moves = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto o = testing::DenseOptions(8 + seed % 10, 3 + seed % 6);
    const Instance in = testing::RandomInstance(seed, o);
    const TravelTimeMatrix m = BuildMatrix(in);
    const ConstructOutcome start = Initialize(in, m);
    if (!start.ok()) continue;
    SearchConfig c;
    c.mode = seed % 2 ? SearchMode::kTabu : SearchMode::kNeighbourhood;
    c.permute_scan_order = seed % 3 == 0;
    c.rng_seed = seed;
    c.tabu_tenure = 1 + seed % 5;
    const SearchResult r = RunSearch(in, m, *start.schedule, c);
    Schedule s = *start.schedule;
    double objective = Evaluate(in, m, s).objective_hours;
    for (const Move& move : r.moves) {
      const Schedule next = ApplyMove(s, move);
      const EvalReport report = Evaluate(in, m, next);
      ASSERT_TRUE(report.feasible) << "seed " << seed;
      EXPECT_LT(move.delta_hours, -kImprovementThreshold);
      EXPECT_NEAR(report.objective_hours, objective + move.delta_hours, 1e-9);
      EXPECT_LE(report.objective_hours, objective);
      EXPECT_EQ(ApplyMove(next, InverseMove(move)), s);
      s = next;
      objective = report.objective_hours;
      ++moves;
    }
    EXPECT_EQ(s, r.schedule);
    EXPECT_EQ(r.moves.size(), r.moves_applied);
  }
  EXPECT_GT(moves, 50);
}

TEST(Search, ParallelEvaluationIsIdentical) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto o = testing::DenseOptions(10 + seed % 15, 4 + seed % 9);
    const Instance in = testing::RandomInstance(seed, o);
    const TravelTimeMatrix m = BuildMatrix(in);
    const ConstructOutcome start = Initialize(in, m);
    if (!start.ok()) continue;
    SearchConfig c;
    c.mode = seed % 2 ? SearchMode::kTabu : SearchMode::kNeighbourhood;
    c.permute_scan_order = seed % 3 == 0;
    c.rng_seed = seed * 7;
    const SearchResult a = RunSearch(in, m, *start.schedule, c);
    c.parallel_eval = true;
    const SearchResult b = RunSearch(in, m, *start.schedule, c);
    EXPECT_EQ(a.moves, b.moves) << "seed " << seed;
    EXPECT_EQ(a.schedule, b.schedule);
  }
}

TEST(Search, PermutedScanOrderIsReproducible) {
  const auto o = testing::DenseOptions(20, 8);
  const Instance in = testing::RandomInstance(5, o);
  const TravelTimeMatrix m = BuildMatrix(in);
  const ConstructOutcome start = Initialize(in, m);
  ASSERT_TRUE(start.ok());
  SearchConfig c;
  c.permute_scan_order = true;
  c.rng_seed = 99;
  const SearchResult a = RunSearch(in, m, *start.schedule, c);
  const SearchResult b = RunSearch(in, m, *start.schedule, c);
  EXPECT_EQ(a.moves, b.moves);
}

TEST(Search, MaxSweepsStopsEarly) {
  const auto o = testing::DenseOptions(20, 8);
  const Instance in = testing::RandomInstance(5, o);
  const TravelTimeMatrix m = BuildMatrix(in);
  const ConstructOutcome start = Initialize(in, m);
  ASSERT_TRUE(start.ok());
  SearchConfig c;
  ASSERT_GT(RunSearch(in, m, *start.schedule, c).sweeps, 1u);
  c.max_sweeps = 1;
  EXPECT_EQ(RunSearch(in, m, *start.schedule, c).sweeps, 1u);
}

TEST(Search, HugeTenureStillTerminatesFeasibly) {
  const auto o = testing::DenseOptions(15, 6);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance in = testing::RandomInstance(seed, o);
    const TravelTimeMatrix m = BuildMatrix(in);
    const ConstructOutcome start = Initialize(in, m);
    if (!start.ok()) continue;
    SearchConfig c;
    c.mode = SearchMode::kTabu;
    c.tabu_tenure = 1000;
    const SearchResult r = TabuSearch(in, m, *start.schedule, c);
    EXPECT_TRUE(Evaluate(in, m, r.schedule).feasible);
  }
}

}  // namespace
}  // namespace airfleet
