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

#include "exact.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "construct.hpp"
#include "error.hpp"
#include "feasibility.hpp"
#include "search.hpp"

namespace airfleet {

std::string_view StatusName(ExactStatus status) {
  switch (status) {
    case ExactStatus::kOptimal: return "optimal";
    case ExactStatus::kInfeasible: return "infeasible";
    case ExactStatus::kNodeLimit: return "node_limit";
  }
  return "?";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// A subtree is pruned unless its bound beats the incumbent by this much.
constexpr double kPruneTolerance = 1e-10;

// Cheapest way mission m can sit between p and q in some final route.
struct PairEntry {
  double delta;
  std::uint32_t p;
  std::uint32_t q;
  std::uint8_t layer;
};

class BranchAndBound {
 public:
  BranchAndBound(const Instance& instance, const TravelTimeMatrix& matrix,
                 const ExactLimits& limits)
      : instance_(instance),
        matrix_(matrix),
        limits_(limits),
        n_(instance.mission_count()),
        k_(instance.base_count()),
        schedule_(Schedule::Empty(k_)),
        hours_(k_, 0.0),
        route_of_(n_, kUnassigned),
        pred_(n_ + k_),
        succ_(n_ + k_) {
    for (std::size_t b = 0; b < k_; ++b) {
      pred_[n_ + b] = succ_[n_ + b] = static_cast<std::uint32_t>(n_ + b);
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      const Mission& ma = instance.missions[a];
      const Mission& mb = instance.missions[b];
      return ma.deadline_h != mb.deadline_h ? ma.deadline_h < mb.deadline_h : ma.id < mb.id;
    });
    BuildPairTables();
  }

  ExactResult Run() {
    start_ = std::chrono::steady_clock::now();
    ExactResult result;
    if (limits_.warm_start && n_ > 0) WarmStart();

    double root_bound = 0.0;
    const bool root_ok = RemainingBound(0, root_bound);
    if (root_ok) Dfs(0, 0.0);

    result.nodes_explored = nodes_;
    result.elapsed_s = Elapsed();
    if (incumbent_) {
      result.schedule = incumbent_;
      result.objective_hours = incumbent_cost_;
    } else {
      result.objective_hours = kInf;
    }
    if (stopped_) {
      result.status = ExactStatus::kNodeLimit;
      result.best_bound = std::min(root_bound, result.objective_hours);
    } else if (incumbent_) {
      result.status = ExactStatus::kOptimal;
      result.best_bound = incumbent_cost_;
    } else {
      result.status = ExactStatus::kInfeasible;
      result.best_bound = kInf;
    }
    return result;
  }

 private:
  static constexpr int kUnassigned = -1;

  bool IsBase(std::size_t node) const { return node >= n_; }
  double Start(std::size_t node) const { return IsBase(node) ? 0.0 : instance_.NodeDeadline(node); }

  void BuildPairTables() {
    const double eps = kTimeTolerance;
    entries_.assign(n_, {});
    for (std::size_t m = 0; m < n_; ++m) {
      const Mission& mission = instance_.missions[m];
      auto add = [&](std::size_t p, std::size_t q, std::size_t layer) {
        const double in = matrix_.at(p, m, layer);
        const double out = matrix_.at(m, q, layer);
        if (Start(p) + in > mission.deadline_h + eps) return;
        if (mission.deadline_h + out > instance_.NodeDeadline(q) + eps) return;
        const double bridge = p == q ? 0.0 : matrix_.at(p, q, layer);
        const double delta = std::max(0.0, in + out - bridge);
        if (delta > instance_.flight_limit_h + eps) return;
        entries_[m].push_back({delta, static_cast<std::uint32_t>(p),
                               static_cast<std::uint32_t>(q), static_cast<std::uint8_t>(layer)});
      };
      for (std::size_t b = 0; b < k_; ++b) {
        if (!instance_.Compatible(b, m)) continue;
        const std::size_t base = n_ + b;
        const std::size_t layer = LayerOf(instance_.bases[b].vehicle);
        add(base, base, layer);
        for (std::size_t o = 0; o < n_; ++o) {
          if (o == m || (instance_.missions[o].heli_only && layer != 0)) continue;
          add(base, o, layer);
          add(o, base, layer);
        }
      }
      for (std::size_t p = 0; p < n_; ++p) {
        for (std::size_t q = 0; q < n_; ++q) {
          if (p == m || q == m || p == q) continue;
          const bool heli = mission.heli_only || instance_.missions[p].heli_only ||
                            instance_.missions[q].heli_only;
          for (std::size_t layer = 0; layer < (heli ? 1u : 2u); ++layer) {
            if (!LayerPresent(layer)) continue;
            add(p, q, layer);
          }
        }
      }
      std::sort(entries_[m].begin(), entries_[m].end(),
                [](const PairEntry& a, const PairEntry& b) { return a.delta < b.delta; });
    }
  }

  bool LayerPresent(std::size_t layer) const {
    for (const Base& b : instance_.bases) {
      if (LayerOf(b.vehicle) == layer) return true;
    }
    return false;
  }

  bool HoursFit(std::size_t base, double delta) const {
    return hours_[base] + delta <= instance_.flight_limit_h + kTimeTolerance;
  }

  // Whether p -> m -> q can still appear in a completion of the current
  // partial schedule.
  bool Usable(const PairEntry& e) const {
    const std::size_t p = e.p;
    const std::size_t q = e.q;
    if (IsBase(p) && IsBase(q)) {
      const std::size_t b = p - n_;
      return schedule_.routes[b].empty() && HoursFit(b, e.delta);
    }
    if (IsBase(p) || IsBase(q)) {
      const std::size_t b = (IsBase(p) ? p : q) - n_;
      const std::size_t other = IsBase(p) ? q : p;
      if (route_of_[other] != kUnassigned) {
        if (static_cast<std::size_t>(route_of_[other]) != b) return false;
        if (IsBase(p) ? pred_[other] != p : succ_[other] != q) return false;
      }
      return HoursFit(b, e.delta);
    }
    const bool ap = route_of_[p] != kUnassigned;
    const bool aq = route_of_[q] != kUnassigned;
    if (!ap && !aq) return true;
    if (ap && aq && succ_[p] != q) return false;
    const auto r = static_cast<std::size_t>(ap ? route_of_[p] : route_of_[q]);
    return LayerOf(instance_.bases[r].vehicle) == e.layer && HoursFit(r, e.delta);
  }

  // Sum of cheapest usable insertions over missions order_[depth..]. False
  // when some mission has none left.
  bool RemainingBound(std::size_t depth, double& bound) const {
    bound = 0.0;
    for (std::size_t t = depth; t < n_; ++t) {
      const auto& list = entries_[order_[t]];
      auto it = std::find_if(list.begin(), list.end(), [&](const PairEntry& e) { return Usable(e); });
      if (it == list.end()) return false;
      bound += it->delta;
    }
    return true;
  }

  double Elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  bool OutOfBudget() {
    if (stopped_) return true;
    if (limits_.node_budget && nodes_ >= *limits_.node_budget) stopped_ = true;
    if (limits_.time_budget_s && (nodes_ & 1023) == 0 && Elapsed() > *limits_.time_budget_s) {
      stopped_ = true;
    }
    return stopped_;
  }

  void Offer(const Schedule& schedule, double cost) {
    if (!incumbent_ || cost < incumbent_cost_) {
      incumbent_ = schedule;
      incumbent_cost_ = cost;
    }
  }

  void WarmStart() {
    const ConstructOutcome start = Initialize(instance_, matrix_);
    if (!start.ok()) return;
    SearchConfig config;
    config.mode = SearchMode::kTabu;
    const SearchResult improved = TabuSearch(instance_, matrix_, *start.schedule, config);
    Offer(improved.schedule, Evaluate(instance_, matrix_, improved.schedule).objective_hours);
  }

  struct Child {
    double delta;
    std::size_t base;
    std::size_t position;
  };

  void Dfs(std::size_t depth, double cost) {
    ++nodes_;
    if (OutOfBudget()) return;
    if (depth == n_) {
      double total = 0.0;
      for (double h : hours_) total += h;
      Offer(schedule_, total);
      return;
    }
    const std::size_t m = order_[depth];

    std::vector<Child> children;
    for (std::size_t b = 0; b < k_; ++b) {
      if (!instance_.Compatible(b, m)) continue;
      const auto& route = schedule_.routes[b];
      for (std::size_t pos = 0; pos <= route.size(); ++pos) {
        const InsertionVerdict v =
            CheckInsertion(instance_, matrix_, b, route, hours_[b], m, pos);
        if (v.feasible) children.push_back({v.delta_hours, b, pos});
      }
    }
    std::sort(children.begin(), children.end(), [&](const Child& a, const Child& b) {
      if (a.delta != b.delta) return a.delta < b.delta;
      if (a.base != b.base) return instance_.bases[a.base].id < instance_.bases[b.base].id;
      return a.position < b.position;
    });

    for (const Child& c : children) {
      if (incumbent_ && cost + c.delta >= incumbent_cost_ - kPruneTolerance) break;
      Insert(m, c.base, c.position);
      double rest = 0.0;
      const bool ok = RemainingBound(depth + 1, rest);
      const double child_cost = cost + c.delta;
      if (ok && (!incumbent_ || child_cost + rest < incumbent_cost_ - kPruneTolerance)) {
        Dfs(depth + 1, child_cost);
      }
      Remove(m, c.base, c.position);
      if (stopped_) return;
    }
  }

  void Insert(std::size_t m, std::size_t b, std::size_t pos) {
    auto& route = schedule_.routes[b];
    const std::size_t home = n_ + b;
    const std::size_t prev = pos == 0 ? home : route[pos - 1];
    const std::size_t next = pos == route.size() ? home : route[pos];
    route.insert(route.begin() + static_cast<std::ptrdiff_t>(pos), m);
    succ_[prev] = static_cast<std::uint32_t>(m);
    pred_[next] = static_cast<std::uint32_t>(m);
    pred_[m] = static_cast<std::uint32_t>(prev);
    succ_[m] = static_cast<std::uint32_t>(next);
    route_of_[m] = static_cast<int>(b);
    saved_hours_.push_back(hours_[b]);
    hours_[b] = RouteFlightHours(instance_, matrix_, b, route);
  }

  void Remove(std::size_t m, std::size_t b, std::size_t pos) {
    auto& route = schedule_.routes[b];
    route.erase(route.begin() + static_cast<std::ptrdiff_t>(pos));
    const std::size_t prev = pred_[m];
    const std::size_t next = succ_[m];
    succ_[prev] = static_cast<std::uint32_t>(next);
    pred_[next] = static_cast<std::uint32_t>(prev);
    route_of_[m] = kUnassigned;
    hours_[b] = saved_hours_.back();
    saved_hours_.pop_back();
  }

  const Instance& instance_;
  const TravelTimeMatrix& matrix_;
  ExactLimits limits_;
  std::size_t n_;
  std::size_t k_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<PairEntry>> entries_;

  Schedule schedule_;
  std::vector<double> hours_;
  std::vector<double> saved_hours_;
  std::vector<int> route_of_;
  std::vector<std::uint32_t> pred_;
  std::vector<std::uint32_t> succ_;

  std::optional<Schedule> incumbent_;
  double incumbent_cost_ = kInf;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

ExactResult SolveExact(const Instance& instance, const TravelTimeMatrix& matrix,
                       const ExactLimits& limits) {
  if (instance.mission_count() > limits.max_missions) {
    Fail(ErrorCode::kInvalidArgument,
         "exact solver is capped at " + std::to_string(limits.max_missions) + " missions");
  }
  return BranchAndBound(instance, matrix, limits).Run();
}

double VerifyAgainstOracle(const Instance& instance, const TravelTimeMatrix& matrix,
                           const Schedule& schedule, const ExactResult& oracle) {
  if (oracle.status != ExactStatus::kOptimal) {
    Fail(ErrorCode::kUnavailable,
         "oracle did not prove optimality (status " + std::string(StatusName(oracle.status)) + ")");
  }
  const EvalReport report = Evaluate(instance, matrix, schedule);
  if (!report.feasible) Fail(ErrorCode::kInvalidArgument, "schedule is infeasible");
  if (oracle.objective_hours <= 0.0) {
    return report.objective_hours <= kTimeTolerance ? 0.0 : kInf;
  }
  return (report.objective_hours - oracle.objective_hours) / oracle.objective_hours;
}

}  // namespace airfleet
