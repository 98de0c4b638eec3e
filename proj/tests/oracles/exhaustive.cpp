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

#include "exhaustive.hpp"

#include <map>
#include <tuple>

namespace airfleet::oracle {
namespace {

constexpr double kEps = 1e-9;

std::size_t Layer(const Instance& in, std::size_t base) {
  return in.bases[base].vehicle == VehicleClass::kHelicopter ? 0 : 1;
}

class Enumerator {
 public:
  Enumerator(const Instance& in, const TravelTimeMatrix& matrix)
      : in_(in), matrix_(matrix), routes_(in.base_count()) {}

  std::optional<Optimum> Run() {
    Place(0);
    return best_;
  }

 private:
  void Place(std::size_t m) {
    if (m == in_.mission_count()) {
      Score();
      return;
    }
    for (std::size_t b = 0; b < routes_.size(); ++b) {
      for (std::size_t pos = 0; pos <= routes_[b].size(); ++pos) {
        routes_[b].insert(routes_[b].begin() + static_cast<std::ptrdiff_t>(pos), m);
        Place(m + 1);
        routes_[b].erase(routes_[b].begin() + static_cast<std::ptrdiff_t>(pos));
      }
    }
  }

  void Score() {
    ++arrangements_;
    double total = 0.0;
    for (std::size_t b = 0; b < routes_.size(); ++b) {
      if (!RouteFeasible(in_, matrix_, b, routes_[b])) return;
      total += RouteHours(in_, matrix_, b, routes_[b]);
    }
    if (!best_ || total < best_->objective_hours) {
      best_ = Optimum{total, Schedule{routes_}, 0};
    }
    best_->arrangements = arrangements_;
  }

  const Instance& in_;
  const TravelTimeMatrix& matrix_;
  std::vector<std::vector<std::size_t>> routes_;
  std::optional<Optimum> best_;
  std::uint64_t arrangements_ = 0;
};

}  // namespace

double RouteHours(const Instance& in, const TravelTimeMatrix& matrix, std::size_t base,
                  const std::vector<std::size_t>& route) {
  if (route.empty()) return 0.0;
  const std::size_t layer = Layer(in, base);
  const std::size_t home = in.mission_count() + base;
  double hours = 0.0;
  std::size_t at = home;
  for (std::size_t m : route) {
    hours += matrix.at(at, m, layer);
    at = m;
  }
  return hours + matrix.at(at, home, layer);
}

bool RouteFeasible(const Instance& in, const TravelTimeMatrix& matrix, std::size_t base,
                   const std::vector<std::size_t>& route) {
  if (route.empty()) return true;
  const std::size_t layer = Layer(in, base);
  const std::size_t home = in.mission_count() + base;
  const bool plane = in.bases[base].vehicle == VehicleClass::kPlane;
  double clock = 0.0;
  std::size_t at = home;
  for (std::size_t m : route) {
    if (m >= in.mission_count()) return false;
    const Mission& mission = in.missions[m];
    if (plane && mission.heli_only) return false;
    clock += matrix.at(at, m, layer);
    if (clock > mission.deadline_h + kEps) return false;
    clock = mission.deadline_h;
    at = m;
  }
  clock += matrix.at(at, home, layer);
  if (clock > in.day_length_h + kEps) return false;
  return RouteHours(in, matrix, base, route) <= in.flight_limit_h + kEps;
}

std::optional<Optimum> ExhaustiveOptimum(const Instance& in, const TravelTimeMatrix& matrix) {
  return Enumerator(in, matrix).Run();
}

bool IlpFeasible(const Instance& in, const TravelTimeMatrix& matrix, const Schedule& s) {
  const std::size_t n = in.mission_count();
  const std::size_t k = in.base_count();
  const std::size_t nodes = n + k;
  if (s.routes.size() != k) return false;

  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, int> x;
  std::vector<int> u(n, 0);
  for (std::size_t v = 0; v < k; ++v) {
    const auto& route = s.routes[v];
    if (route.empty()) continue;
    std::size_t prev = n + v;
    int order = 0;
    for (std::size_t node : route) {
      if (node >= nodes) return false;
      ++x[{prev, node, v}];
      if (node < n) u[node] = ++order;
      prev = node;
    }
    ++x[{prev, n + v, v}];
  }

  auto is_base = [&](std::size_t node) { return node >= n; };
  auto depart = [&](std::size_t node) { return is_base(node) ? 0.0 : in.missions[node].deadline_h; };
  auto due = [&](std::size_t node) { return is_base(node) ? in.day_length_h : in.missions[node].deadline_h; };

  std::vector<int> entered(n, 0), left(n, 0);
  std::vector<std::vector<int>> in_deg(k, std::vector<int>(nodes, 0));
  std::vector<std::vector<int>> out_deg(k, std::vector<int>(nodes, 0));
  std::vector<double> flight(k, 0.0);
  for (const auto& [arc, value] : x) {
    const auto [i, j, v] = arc;
    if (value > 1) return false;                        // binary
    if (i == j) return false;                           // no self loops
    if (is_base(i) && is_base(j)) return false;         // no base to base
    if ((is_base(i) && i != n + v) || (is_base(j) && j != n + v)) return false;  // own base
    const bool plane = in.bases[v].vehicle == VehicleClass::kPlane;
    if (plane && ((!is_base(i) && in.missions[i].heli_only) ||
                  (!is_base(j) && in.missions[j].heli_only))) {
      return false;                                     // vehicle compatibility
    }
    const double d = matrix.at(i, j, Layer(in, v));
    if (depart(i) + d > due(j) + kEps) return false;    // time windows
    flight[v] += d;
    if (!is_base(j)) ++entered[j];
    if (!is_base(i)) ++left[i];
    ++in_deg[v][j];
    ++out_deg[v][i];
  }
  for (std::size_t m = 0; m < n; ++m) {
    if (entered[m] != 1 || left[m] != 1) return false;  // assignment
  }
  for (std::size_t v = 0; v < k; ++v) {
    if (flight[v] > in.flight_limit_h + kEps) return false;
    for (std::size_t node = 0; node < nodes; ++node) {
      if (in_deg[v][node] != out_deg[v][node]) return false;             // flow
      if (in_deg[v][node] > 1 || out_deg[v][node] > 1) return false;    // at most once
    }
  }
  const int big = static_cast<int>(n);
  for (const auto& [arc, value] : x) {
    const auto [i, j, v] = arc;
    if (is_base(i) || is_base(j)) continue;
    if (u[i] < 1 || u[i] > big || u[j] < 1 || u[j] > big) return false;
    if (u[i] - u[j] + big * value > big - 1) return false;  // MTZ
  }
  return true;
}

}  // namespace airfleet::oracle
