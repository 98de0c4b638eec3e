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

// Ground truth for small instances: a depth-first branch-and-bound solver
// and an MPS writer for the integer program, for use with external MILP
// solvers.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "geo.hpp"
#include "model.hpp"

namespace airfleet {

enum class ExactStatus { kOptimal, kInfeasible, kNodeLimit };

std::string_view StatusName(ExactStatus status);

struct ExactLimits {
  // Unlimited when unset.
  std::optional<std::uint64_t> node_budget;
  // Seconds; unlimited when unset.
  std::optional<double> time_budget_s = 60.0;
  // Instances above this size are rejected with kInvalidArgument.
  std::size_t max_missions = 64;
  // Seed the incumbent with construction + tabu search.
  bool warm_start = true;
};

struct ExactResult {
  ExactStatus status = ExactStatus::kInfeasible;
  // Best schedule found; present when optimal and possibly at node_limit.
  std::optional<Schedule> schedule;
  // +infinity without an incumbent.
  double objective_hours = 0.0;
  std::uint64_t nodes_explored = 0;
  // Proven lower bound on the optimum; equals objective_hours when optimal.
  double best_bound = 0.0;
  double elapsed_s = 0.0;
};

// Missions are branched in (deadline, id) order; each node tries every
// feasible (base, position) insertion. The bound adds, for each unplaced
// mission, the cheapest insertion between two nodes that can still become
// adjacent. Valid because the travel matrix obeys the triangle inequality,
// so insertions never shorten a route.
ExactResult SolveExact(const Instance& instance, const TravelTimeMatrix& matrix,
                       const ExactLimits& limits = {});

// (objective(schedule) - optimum) / optimum. Throws kUnavailable unless the
// oracle status is optimal, kInvalidArgument when the schedule is infeasible.
double VerifyAgainstOracle(const Instance& instance, const TravelTimeMatrix& matrix,
                           const Schedule& schedule, const ExactResult& oracle);

struct MpsOptions {
  // Free format is also used automatically when a name exceeds 8 characters.
  bool free_format = false;
  std::string model_name = "AIRFLEET";
};

// Naming: missions are nodes 1..n, bases n+1..n+k, vehicles 1..k.
// Columns x_i_j_k (binary), u_i (integer, 1..n). Rows: OBJ; Ij / Oj
// (mission entered / left once); Fn_k (flow); Ej_k / Lj_k (enter / leave at
// most once per vehicle); Pk (flight limit); Ti_j_k (time window); Mi_j_k
// (MTZ). Pruned arcs are fixed to 0 in BOUNDS.
void WriteMps(const Instance& instance, const TravelTimeMatrix& matrix, std::ostream& out,
              const MpsOptions& options = {});
// Throws kIo when the path is not writable.
void ExportMps(const Instance& instance, const TravelTimeMatrix& matrix,
               const std::string& path, const MpsOptions& options = {});

}  // namespace airfleet
