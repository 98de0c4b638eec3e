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

// MPS export of the scheduling integer program.
//
// x_i_j_k = 1 when vehicle k flies node i -> node j. Arcs that can never be
// used (self loops, base to base, arcs touching another vehicle's base,
// helicopter-only missions on planes) stay in the column catalog but are
// fixed to zero. Time windows need no big-M: under the waiting model the
// departure time from i is a constant, so each arc gets a one-term row
// (start_i + d_ij - limit_j) * x_ijk <= eps.

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "exact.hpp"
#include "feasibility.hpp"

namespace airfleet {
namespace {

struct Row {
  char type;  // 'N', 'E', 'L'
  std::string name;
  double rhs = 0.0;
};

struct Column {
  std::string name;
  bool integer = true;
  std::vector<std::pair<std::size_t, double>> entries;  // (row, coefficient)
  // Bounds: binary unless fixed; u columns carry [lo, hi].
  bool fixed_zero = false;
  bool binary = true;
  double lo = 0.0;
  double hi = 1.0;
};

std::string Num(double v, int max_width) {
  char buf[64];
  for (int precision = 17; precision >= 1; --precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    if (max_width <= 0 || static_cast<int>(std::string(buf).size()) <= max_width) break;
  }
  return buf;
}

class MpsModel {
 public:
  MpsModel(const Instance& instance, const TravelTimeMatrix& matrix)
      : instance_(instance), matrix_(matrix), n_(instance.mission_count()), k_(instance.base_count()) {
    Build();
  }

  void Write(std::ostream& out, const MpsOptions& options) const {
    bool free_format = options.free_format;
    for (const Row& r : rows_) free_format |= r.name.size() > 8;
    for (const Column& c : columns_) free_format |= c.name.size() > 8;
    free_format |= options.model_name.size() > 8;

    auto line = [&](const std::string& f1, const std::string& f2, const std::string& f3,
                    const std::string& f4, const std::string& f5 = "",
                    const std::string& f6 = "") {
      std::string s;
      if (free_format) {
        for (const std::string* f : {&f1, &f2, &f3, &f4, &f5, &f6}) {
          if (f->empty()) continue;
          s += ' ';
          s += *f;
        }
      } else {
        s.assign(61, ' ');
        auto put = [&](std::size_t col, const std::string& text) { s.replace(col, text.size(), text); };
        put(1, f1);
        put(4, f2);
        put(14, f3);
        put(24, f4);
        put(39, f5);
        put(49, f6);
        while (!s.empty() && s.back() == ' ') s.pop_back();
      }
      out << s << '\n';
    };
    const int width = free_format ? 0 : 12;

    out << "NAME          " << options.model_name << '\n';
    out << "ROWS\n";
    for (const Row& r : rows_) line(std::string(1, r.type), r.name, "", "");
    out << "COLUMNS\n";
    bool in_integer = false;
    for (const Column& c : columns_) {
      if (c.integer != in_integer) {
        line("", "MARKER", "'MARKER'", "", c.integer ? "'INTORG'" : "'INTEND'");
        in_integer = c.integer;
      }
      for (const auto& [row, coef] : c.entries) {
        line("", c.name, rows_[row].name, Num(coef, width));
      }
    }
    if (in_integer) line("", "MARKER", "'MARKER'", "", "'INTEND'");
    out << "RHS\n";
    for (const Row& r : rows_) {
      if (r.type == 'N' || r.rhs == 0.0) continue;
      line("", "RHS", r.name, Num(r.rhs, width));
    }
    out << "BOUNDS\n";
    for (const Column& c : columns_) {
      if (c.fixed_zero) {
        line("FX", "BND", c.name, "0");
      } else if (c.binary) {
        line("BV", "BND", c.name, "");
      } else {
        line("LI", "BND", c.name, Num(c.lo, width));
        line("UI", "BND", c.name, Num(c.hi, width));
      }
    }
    out << "ENDATA\n";
  }

 private:
  std::size_t XIndex(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * (n_ + k_) + j) * k_ + k;
  }
  // 1-based external numbering.
  static std::string Id(std::size_t v) { return std::to_string(v + 1); }

  std::size_t AddRow(char type, std::string name, double rhs = 0.0) {
    rows_.push_back({type, std::move(name), rhs});
    return rows_.size() - 1;
  }

  bool Pruned(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t own = n_ + k;
    if (i == j) return true;
    if (i >= n_ && j >= n_) return true;
    if ((i >= n_ && i != own) || (j >= n_ && j != own)) return true;
    if (instance_.bases[k].vehicle == VehicleClass::kPlane) {
      if ((i < n_ && instance_.missions[i].heli_only) ||
          (j < n_ && instance_.missions[j].heli_only)) {
        return true;
      }
    }
    return false;
  }

  void Build() {
    const std::size_t nodes = n_ + k_;
    const std::size_t obj = AddRow('N', "OBJ");

    columns_.resize(nodes * nodes * k_);
    for (std::size_t i = 0; i < nodes; ++i) {
      for (std::size_t j = 0; j < nodes; ++j) {
        for (std::size_t k = 0; k < k_; ++k) {
          Column& c = columns_[XIndex(i, j, k)];
          c.name = "x_" + Id(i) + "_" + Id(j) + "_" + Id(k);
          c.fixed_zero = Pruned(i, j, k);
          const double d = matrix_.at(i, j, LayerOf(instance_.bases[k].vehicle));
          c.entries.emplace_back(obj, d);
        }
      }
    }
    auto live = [&](std::size_t i, std::size_t j, std::size_t k) { return !Pruned(i, j, k); };
    auto add = [&](std::size_t row, std::size_t i, std::size_t j, std::size_t k, double coef) {
      columns_[XIndex(i, j, k)].entries.emplace_back(row, coef);
    };

    // Every mission is entered once and left once, over all vehicles.
    for (std::size_t j = 0; j < n_; ++j) {
      const std::size_t row = AddRow('E', "I" + Id(j), 1.0);
      for (std::size_t i = 0; i < nodes; ++i)
        for (std::size_t k = 0; k < k_; ++k)
          if (live(i, j, k)) add(row, i, j, k, 1.0);
    }
    for (std::size_t i = 0; i < n_; ++i) {
      const std::size_t row = AddRow('E', "O" + Id(i), 1.0);
      for (std::size_t j = 0; j < nodes; ++j)
        for (std::size_t k = 0; k < k_; ++k)
          if (live(i, j, k)) add(row, i, j, k, 1.0);
    }
    // Flow conservation per vehicle at each node it may visit.
    for (std::size_t k = 0; k < k_; ++k) {
      for (std::size_t v = 0; v < nodes; ++v) {
        bool any = false;
        for (std::size_t o = 0; o < nodes && !any; ++o) any = live(o, v, k) || live(v, o, k);
        if (!any) continue;
        const std::size_t row = AddRow('E', "F" + Id(v) + "_" + Id(k));
        for (std::size_t i = 0; i < nodes; ++i)
          if (live(i, v, k)) add(row, i, v, k, 1.0);
        for (std::size_t j = 0; j < nodes; ++j)
          if (live(v, j, k)) add(row, v, j, k, -1.0);
      }
    }
    // Each node entered / left at most once per vehicle.
    for (std::size_t k = 0; k < k_; ++k) {
      for (std::size_t v = 0; v < nodes; ++v) {
        bool in = false, out = false;
        for (std::size_t o = 0; o < nodes; ++o) {
          in |= live(o, v, k);
          out |= live(v, o, k);
        }
        if (in) {
          const std::size_t row = AddRow('L', "E" + Id(v) + "_" + Id(k), 1.0);
          for (std::size_t i = 0; i < nodes; ++i)
            if (live(i, v, k)) add(row, i, v, k, 1.0);
        }
        if (out) {
          const std::size_t row = AddRow('L', "L" + Id(v) + "_" + Id(k), 1.0);
          for (std::size_t j = 0; j < nodes; ++j)
            if (live(v, j, k)) add(row, v, j, k, 1.0);
        }
      }
    }
    // Daily flight limit per vehicle.
    for (std::size_t k = 0; k < k_; ++k) {
      const std::size_t layer = LayerOf(instance_.bases[k].vehicle);
      bool any = false;
      for (std::size_t i = 0; i < nodes && !any; ++i)
        for (std::size_t j = 0; j < nodes && !any; ++j) any = live(i, j, k);
      if (!any) continue;
      const std::size_t row = AddRow('L', "P" + Id(k), instance_.flight_limit_h);
      for (std::size_t i = 0; i < nodes; ++i)
        for (std::size_t j = 0; j < nodes; ++j)
          if (live(i, j, k)) add(row, i, j, k, matrix_.at(i, j, layer));
    }
    // Time windows, constants folded into the arc coefficient.
    for (std::size_t i = 0; i < nodes; ++i) {
      for (std::size_t j = 0; j < nodes; ++j) {
        for (std::size_t k = 0; k < k_; ++k) {
          if (!live(i, j, k)) continue;
          const double start = i < n_ ? instance_.missions[i].deadline_h : 0.0;
          const double limit = instance_.NodeDeadline(j);
          const double d = matrix_.at(i, j, LayerOf(instance_.bases[k].vehicle));
          const std::size_t row =
              AddRow('L', "T" + Id(i) + "_" + Id(j) + "_" + Id(k), kTimeTolerance);
          add(row, i, j, k, start + d - limit);
        }
      }
    }
    // Miller-Tucker-Zemlin ordering between missions.
    const std::size_t u0 = columns_.size();
    for (std::size_t i = 0; i < n_; ++i) {
      Column u;
      u.name = "u_" + Id(i);
      u.binary = false;
      u.lo = 1.0;
      u.hi = static_cast<double>(n_);
      u.entries.emplace_back(obj, 0.0);
      columns_.push_back(std::move(u));
    }
    const double big = static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        for (std::size_t k = 0; k < k_; ++k) {
          if (!live(i, j, k)) continue;
          const std::size_t row =
              AddRow('L', "M" + Id(i) + "_" + Id(j) + "_" + Id(k), big - 1.0);
          columns_[u0 + i].entries.emplace_back(row, 1.0);
          columns_[u0 + j].entries.emplace_back(row, -1.0);
          add(row, i, j, k, big);
        }
      }
    }
  }

  const Instance& instance_;
  const TravelTimeMatrix& matrix_;
  std::size_t n_;
  std::size_t k_;
  std::vector<Row> rows_;
  std::vector<Column> columns_;
};

}  // namespace

void WriteMps(const Instance& instance, const TravelTimeMatrix& matrix, std::ostream& out,
              const MpsOptions& options) {
  MpsModel(instance, matrix).Write(out, options);
}

void ExportMps(const Instance& instance, const TravelTimeMatrix& matrix,
               const std::string& path, const MpsOptions& options) {
  std::ofstream out(path);
  if (!out) Fail(ErrorCode::kIo, "cannot write '" + path + "'");
  WriteMps(instance, matrix, out, options);
  out.flush();
  if (!out) Fail(ErrorCode::kIo, "write failed for '" + path + "'");
}

}  // namespace airfleet
