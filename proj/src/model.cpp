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

#include "model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "error.hpp"
#include "json.hpp"
#include "rng.hpp"

namespace airfleet {

using json = nlohmann::json;

double DefaultSpeed(VehicleClass v) {
  return v == VehicleClass::kHelicopter ? kHelicopterSpeedKmh : kPlaneSpeedKmh;
}

std::string_view VehicleName(VehicleClass v) {
  return v == VehicleClass::kHelicopter ? "helicopter" : "plane";
}

VehicleClass ParseVehicle(std::string_view text) {
  if (text == "helicopter" || text == "heli" || text == "0") {
    return VehicleClass::kHelicopter;
  }
  if (text == "plane" || text == "1") return VehicleClass::kPlane;
  Fail(ErrorCode::kParse, "unknown vehicle class '" + std::string(text) + "'");
}

double Instance::ClassSpeed(VehicleClass v) const {
  for (const Base& b : bases) {
    if (b.vehicle == v) return b.speed_kmh;
  }
  return DefaultSpeed(v);
}

std::vector<std::string> ValidateInstance(const Instance& instance) {
  auto invalid = [](const std::string& what) {
    Fail(ErrorCode::kValidation, "invalid instance: " + what);
  };
  if (instance.bases.empty()) invalid("at least one base is required");
  if (!(instance.flight_limit_h > 0.0)) invalid("flight_limit_h must be > 0");
  if (!(instance.day_length_h >= instance.flight_limit_h)) {
    invalid("day_length_h must be >= flight_limit_h");
  }

  std::set<std::int64_t> ids;
  double class_speed[2] = {0.0, 0.0};
  bool has_heli = false;
  for (const Base& b : instance.bases) {
    const std::string tag = "base " + std::to_string(b.id);
    if (!ids.insert(b.id).second) invalid("duplicate base id " + std::to_string(b.id));
    if (!IsValidPoint(b.location)) invalid(tag + " has out-of-range coordinates");
    if (!(b.speed_kmh > 0.0) || !std::isfinite(b.speed_kmh)) {
      invalid(tag + " speed must be positive");
    }
    double& shared = class_speed[LayerOf(b.vehicle)];
    if (shared == 0.0) {
      shared = b.speed_kmh;
    } else if (shared != b.speed_kmh) {
      invalid(tag + " speed differs from other " +
              std::string(VehicleName(b.vehicle)) + " bases");
    }
    has_heli |= b.vehicle == VehicleClass::kHelicopter;
  }

  ids.clear();
  std::vector<std::string> warnings;
  for (const Mission& m : instance.missions) {
    const std::string tag = "mission " + std::to_string(m.id);
    if (!ids.insert(m.id).second) invalid("duplicate mission id " + std::to_string(m.id));
    if (!IsValidPoint(m.pickup) || !IsValidPoint(m.delivery)) {
      invalid(tag + " has out-of-range coordinates");
    }
    if (!(m.deadline_h > 0.0) || !(m.deadline_h <= instance.day_length_h)) {
      invalid(tag + " deadline must lie in (0, day_length_h]");
    }
    if (m.heli_only && !has_heli) {
      warnings.push_back(tag + " is helicopter-only but no helicopter base exists");
    }
  }
  return warnings;
}

bool ValidateScheduleShape(const Instance& instance, const Schedule& schedule) {
  if (schedule.routes.size() != instance.base_count()) return false;
  std::vector<int> seen(instance.mission_count(), 0);
  for (const auto& route : schedule.routes) {
    for (std::size_t node : route) {
      if (node >= instance.mission_count()) return false;
      if (++seen[node] > 1) return false;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

// --- JSON --------------------------------------------------------------------

namespace {

template <typename T>
T Field(const json& obj, const char* key, const std::string& context) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    Fail(ErrorCode::kParse, context + ": missing field '" + key + "'");
  }
  try {
    return it->get<T>();
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, context + ": field '" + key + "': " + e.what());
  }
}

}  // namespace

Instance InstanceFromJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    Fail(ErrorCode::kParse, std::string("instance JSON: ") + e.what());
  }
  if (!doc.is_object()) Fail(ErrorCode::kParse, "instance JSON: top level must be an object");

  Instance instance;
  if (doc.contains("flight_limit_h")) {
    instance.flight_limit_h = Field<double>(doc, "flight_limit_h", "instance");
  }
  if (doc.contains("day_length_h")) {
    instance.day_length_h = Field<double>(doc, "day_length_h", "instance");
  }
  const json bases = doc.value("bases", json::array());
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const std::string ctx = "bases[" + std::to_string(i) + "]";
    const json& b = bases[i];
    Base base;
    base.id = Field<std::int64_t>(b, "id", ctx);
    base.vehicle = ParseVehicle(Field<std::string>(b, "vehicle", ctx));
    base.speed_kmh = b.contains("speed_kmh") ? Field<double>(b, "speed_kmh", ctx)
                                             : DefaultSpeed(base.vehicle);
    base.location = {Field<double>(b, "lat", ctx), Field<double>(b, "lon", ctx)};
    instance.bases.push_back(base);
  }
  const json missions = doc.value("missions", json::array());
  for (std::size_t i = 0; i < missions.size(); ++i) {
    const std::string ctx = "missions[" + std::to_string(i) + "]";
    const json& m = missions[i];
    Mission mission;
    mission.id = Field<std::int64_t>(m, "id", ctx);
    mission.pickup = {Field<double>(m, "pickup_lat", ctx), Field<double>(m, "pickup_lon", ctx)};
    mission.delivery = {Field<double>(m, "delivery_lat", ctx),
                        Field<double>(m, "delivery_lon", ctx)};
    mission.heli_only = Field<bool>(m, "heli_only", ctx);
    mission.deadline_h = Field<double>(m, "deadline_h", ctx);
    instance.missions.push_back(mission);
  }
  ValidateInstance(instance);
  return instance;
}

std::string InstanceToJson(const Instance& instance) {
  json doc;
  doc["flight_limit_h"] = instance.flight_limit_h;
  doc["day_length_h"] = instance.day_length_h;
  doc["bases"] = json::array();
  for (const Base& b : instance.bases) {
    doc["bases"].push_back({{"id", b.id},
                            {"vehicle", VehicleName(b.vehicle)},
                            {"speed_kmh", b.speed_kmh},
                            {"lat", b.location.lat},
                            {"lon", b.location.lon}});
  }
  doc["missions"] = json::array();
  for (const Mission& m : instance.missions) {
    doc["missions"].push_back({{"id", m.id},
                               {"pickup_lat", m.pickup.lat},
                               {"pickup_lon", m.pickup.lon},
                               {"delivery_lat", m.delivery.lat},
                               {"delivery_lon", m.delivery.lon},
                               {"heli_only", m.heli_only},
                               {"deadline_h", m.deadline_h}});
  }
  return doc.dump(2) + "\n";
}

namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Instance LoadInstanceJson(const std::string& path) {
  return InstanceFromJson(ReadFile(path));
}

void SaveInstanceJson(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorCode::kIo, "cannot write '" + path + "'");
  out << InstanceToJson(instance);
  if (!out) Fail(ErrorCode::kIo, "write failed for '" + path + "'");
}

// --- CSV ---------------------------------------------------------------------

namespace {

std::string Trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(Trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

// Rows keyed by header name; `file` and line numbers go into errors.
class CsvTable {
 public:
  CsvTable(std::istream& in, std::string file) : file_(std::move(file)) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (Trim(line).empty()) continue;
      auto cells = SplitCsvLine(line);
      if (header_.empty()) {
        for (std::size_t i = 0; i < cells.size(); ++i) header_[cells[i]] = i;
        continue;
      }
      rows_.push_back({line_no, std::move(cells)});
    }
    if (header_.empty()) Fail(ErrorCode::kParse, file_ + ": missing header row");
  }

  std::size_t size() const { return rows_.size(); }

  const std::string& Cell(std::size_t row, const std::string& column) const {
    auto it = header_.find(column);
    if (it == header_.end()) {
      Fail(ErrorCode::kParse, file_ + ": missing column '" + column + "'");
    }
    const auto& r = rows_[row];
    if (it->second >= r.cells.size()) {
      Fail(ErrorCode::kParse, Where(row, column) + ": missing value");
    }
    return r.cells[it->second];
  }

  double Number(std::size_t row, const std::string& column) const {
    const std::string& text = Cell(row, column);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) {
      Fail(ErrorCode::kParse, Where(row, column) + ": not a number: '" + text + "'");
    }
    return value;
  }

  std::int64_t Integer(std::size_t row, const std::string& column) const {
    const std::string& text = Cell(row, column);
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) {
      Fail(ErrorCode::kParse, Where(row, column) + ": not an integer: '" + text + "'");
    }
    return value;
  }

  bool Flag(std::size_t row, const std::string& column) const {
    const std::string& text = Cell(row, column);
    if (text == "1" || text == "true" || text == "True") return true;
    if (text == "0" || text == "false" || text == "False") return false;
    Fail(ErrorCode::kParse, Where(row, column) + ": not a boolean: '" + text + "'");
  }

  bool HasColumn(const std::string& column) const { return header_.count(column) > 0; }

  std::string Where(std::size_t row, const std::string& column) const {
    return file_ + ":" + std::to_string(rows_[row].line) + " field '" + column + "'";
  }

 private:
  struct Row {
    int line;
    std::vector<std::string> cells;
  };
  std::string file_;
  std::unordered_map<std::string, std::size_t> header_;
  std::vector<Row> rows_;
};

}  // namespace

Instance InstanceFromCsv(std::istream& bases_in, std::istream& missions_in) {
  const CsvTable bases(bases_in, "bases.csv");
  const CsvTable missions(missions_in, "missions.csv");
  Instance instance;
  for (std::size_t r = 0; r < bases.size(); ++r) {
    Base b;
    b.id = bases.Integer(r, "id");
    try {
      b.vehicle = ParseVehicle(bases.Cell(r, "vehicle"));
    } catch (const Error& e) {
      Fail(ErrorCode::kParse, bases.Where(r, "vehicle") + ": " + e.what());
    }
    b.speed_kmh = bases.HasColumn("speed_kmh") ? bases.Number(r, "speed_kmh")
                                               : DefaultSpeed(b.vehicle);
    b.location = {bases.Number(r, "lat"), bases.Number(r, "lon")};
    instance.bases.push_back(b);
  }
  for (std::size_t r = 0; r < missions.size(); ++r) {
    Mission m;
    m.id = missions.Integer(r, "id");
    m.pickup = {missions.Number(r, "pickup_lat"), missions.Number(r, "pickup_lon")};
    m.delivery = {missions.Number(r, "delivery_lat"), missions.Number(r, "delivery_lon")};
    m.heli_only = missions.Flag(r, "heli_only");
    m.deadline_h = missions.Number(r, "deadline_h");
    instance.missions.push_back(m);
  }
  ValidateInstance(instance);
  return instance;
}

Instance LoadInstanceCsv(const std::string& bases_path, const std::string& missions_path) {
  std::ifstream bases(bases_path);
  if (!bases) Fail(ErrorCode::kIo, "cannot open '" + bases_path + "'");
  std::ifstream missions(missions_path);
  if (!missions) Fail(ErrorCode::kIo, "cannot open '" + missions_path + "'");
  return InstanceFromCsv(bases, missions);
}

Instance LoadInstance(const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma != std::string::npos) {
    return LoadInstanceCsv(spec.substr(0, comma), spec.substr(comma + 1));
  }
  return LoadInstanceJson(spec);
}

std::string ScheduleToJson(const Instance& instance, const Schedule& schedule) {
  json doc;
  doc["routes"] = json::array();
  for (std::size_t b = 0; b < schedule.routes.size(); ++b) {
    json ids = json::array();
    for (std::size_t node : schedule.routes[b]) {
      if (node < instance.mission_count()) {
        ids.push_back(instance.missions[node].id);
      } else if (node < instance.node_count()) {
        ids.push_back({{"base", instance.bases[node - instance.mission_count()].id}});
      } else {
        Fail(ErrorCode::kInvalidArgument, "schedule references unknown node");
      }
    }
    const std::int64_t base_id = b < instance.base_count() ? instance.bases[b].id : -1;
    doc["routes"].push_back({{"base", base_id}, {"missions", ids}});
  }
  return doc.dump(2) + "\n";
}

Schedule ScheduleFromJson(const Instance& instance, std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    Fail(ErrorCode::kParse, std::string("schedule JSON: ") + e.what());
  }
  std::unordered_map<std::int64_t, std::size_t> mission_index, base_index;
  for (std::size_t i = 0; i < instance.mission_count(); ++i) {
    mission_index[instance.missions[i].id] = i;
  }
  for (std::size_t b = 0; b < instance.base_count(); ++b) base_index[instance.bases[b].id] = b;

  Schedule schedule = Schedule::Empty(instance.base_count());
  const json routes = doc.value("routes", json::array());
  for (std::size_t r = 0; r < routes.size(); ++r) {
    const std::string ctx = "routes[" + std::to_string(r) + "]";
    const auto base_id = Field<std::int64_t>(routes[r], "base", ctx);
    auto bit = base_index.find(base_id);
    if (bit == base_index.end()) {
      Fail(ErrorCode::kParse, ctx + ": unknown base id " + std::to_string(base_id));
    }
    for (const json& entry : Field<json>(routes[r], "missions", ctx)) {
      if (entry.is_object()) {
        const auto other = Field<std::int64_t>(entry, "base", ctx);
        auto oit = base_index.find(other);
        if (oit == base_index.end()) {
          Fail(ErrorCode::kParse, ctx + ": unknown base id " + std::to_string(other));
        }
        schedule.routes[bit->second].push_back(instance.BaseNode(oit->second));
        continue;
      }
      const auto id = entry.get<std::int64_t>();
      auto mit = mission_index.find(id);
      if (mit == mission_index.end()) {
        Fail(ErrorCode::kParse, ctx + ": unknown mission id " + std::to_string(id));
      }
      schedule.routes[bit->second].push_back(mit->second);
    }
  }
  return schedule;
}

// --- generation --------------------------------------------------------------

std::vector<Mission> GenerateMissions(const std::vector<Base>& bases,
                                      const std::vector<GeoPoint>& facility_pool,
                                      int count, std::uint64_t seed,
                                      const GenerationOptions& options,
                                      const MissionSetCheck& accept) {
  if (count < 0) Fail(ErrorCode::kInvalidArgument, "mission count must be >= 0");
  if (count == 0) return {};
  if (facility_pool.empty()) Fail(ErrorCode::kInvalidArgument, "facility pool is empty");
  if (!(options.deadline_min_h > 0.0) || options.deadline_max_h < options.deadline_min_h) {
    Fail(ErrorCode::kInvalidArgument, "deadline window must satisfy 0 < min <= max");
  }
  const bool any_heli = std::any_of(bases.begin(), bases.end(), [](const Base& b) {
    return b.vehicle == VehicleClass::kHelicopter;
  });

  Rng layout_rng(DeriveSeed(seed, {0}));
  std::vector<Mission> missions(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Mission& m = missions[static_cast<std::size_t>(i)];
    m.id = i + 1;
    const std::size_t p = layout_rng.Index(facility_pool.size());
    std::size_t d = p;
    if (facility_pool.size() > 1) {
      d = layout_rng.Index(facility_pool.size() - 1);
      if (d >= p) ++d;
    }
    m.pickup = facility_pool[p];
    m.delivery = facility_pool[d];
    m.heli_only = any_heli && layout_rng.Unit() < options.heli_only_fraction;
  }

  const int attempts = accept ? std::max(1, options.max_attempts) : 1;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Rng deadline_rng(DeriveSeed(seed, {1, static_cast<std::uint64_t>(attempt)}));
    for (Mission& m : missions) {
      m.deadline_h = deadline_rng.Uniform(options.deadline_min_h, options.deadline_max_h);
      // Uniform() is half-open; keep the strict lower bound of (0, max].
      if (m.deadline_h <= 0.0) m.deadline_h = options.deadline_max_h;
    }
    if (!accept || accept(missions)) return missions;
  }
  Fail(ErrorCode::kGeneration, "no acceptable mission set for " + std::to_string(count) +
                                   " missions after " + std::to_string(attempts) +
                                   " deadline draws");
}

}  // namespace airfleet
