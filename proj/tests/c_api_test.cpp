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

#include "airfleet/airfleet.h"

#include <gtest/gtest.h>

#include <cmath>
#include <string>

namespace {

const std::string kData = AIRFLEET_DATA_DIR;

std::string Take(char* s) {
  std::string out = s == nullptr ? "" : s;
  af_string_free(s);
  return out;
}

TEST(CApi, LoadSolveAndEvaluate) {
  af_instance* in = nullptr;
  ASSERT_EQ(af_instance_load((kData + "/sample_4.json").c_str(), &in), AF_OK);
  EXPECT_EQ(af_instance_mission_count(in), 4u);
  EXPECT_EQ(af_instance_base_count(in), 3u);

  af_schedule* start = nullptr;
  ASSERT_EQ(af_construct(in, 0, &start), AF_OK);
  af_search_config config;
  af_search_config_default(&config);
  EXPECT_EQ(config.mode, AF_SEARCH_TABU);
  EXPECT_EQ(config.tabu_tenure, 7u);
  af_schedule* improved = nullptr;
  af_search_stats stats{};
  ASSERT_EQ(af_search(in, start, &config, &improved, &stats), AF_OK);

  af_exact_limits limits;
  af_exact_limits_default(&limits);
  EXPECT_EQ(limits.time_budget_s, 60.0);
  af_schedule* best = nullptr;
  af_exact_report report{};
  ASSERT_EQ(af_solve_exact(in, &limits, &best, &report), AF_OK);
  EXPECT_EQ(report.status, AF_EXACT_OPTIMAL);
  ASSERT_NE(best, nullptr);
  EXPECT_GE(stats.objective_hours, report.objective_hours - 1e-9);

  af_evaluation eval{};
  char* json = nullptr;
  ASSERT_EQ(af_evaluate(in, best, &eval, &json), AF_OK);
  EXPECT_EQ(eval.feasible, 1);
  EXPECT_EQ(eval.violation_count, 0u);
  EXPECT_DOUBLE_EQ(eval.objective_hours, report.objective_hours);
  EXPECT_NE(Take(json).find("\"violations\": []"), std::string::npos);

  char* text = nullptr;
  ASSERT_EQ(af_schedule_to_json(in, best, &text), AF_OK);
  af_schedule* back = nullptr;
  ASSERT_EQ(af_schedule_from_json(in, text, &back), AF_OK);
  af_string_free(text);
  ASSERT_EQ(af_evaluate(in, back, &eval, nullptr), AF_OK);
  EXPECT_DOUBLE_EQ(eval.objective_hours, report.objective_hours);

  char* mps = nullptr;
  ASSERT_EQ(af_write_mps(in, 0, &mps), AF_OK);
  EXPECT_EQ(Take(mps).rfind("NAME", 0), 0u);

  af_schedule_free(back);
  af_schedule_free(best);
  af_schedule_free(improved);
  af_schedule_free(start);
  af_instance_free(in);
}

TEST(CApi, ErrorsCarryStatusAndMessage) {
  af_instance* in = nullptr;
  EXPECT_EQ(af_instance_load("/does/not/exist.json", &in), AF_ERR_IO);
  EXPECT_NE(std::string(af_last_error()).find("exist.json"), std::string::npos);
  EXPECT_EQ(af_instance_from_json("{", &in), AF_ERR_PARSE);
  EXPECT_EQ(af_instance_from_json(R"({"bases":[],"missions":[]})", &in), AF_ERR_VALIDATION);
  EXPECT_EQ(af_instance_load(nullptr, &in), AF_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(in, nullptr);
  EXPECT_STREQ(af_status_name(AF_ERR_CONSTRUCTION), "construction_failure");

  ASSERT_EQ(af_instance_from_json(
                R"({"bases":[{"id":1,"vehicle":"plane","lat":45,"lon":-80}],
                    "missions":[{"id":1,"pickup_lat":45,"pickup_lon":-80,"delivery_lat":46,
                                 "delivery_lon":-80,"heli_only":true,"deadline_h":5}]})",
                &in),
            AF_OK);
  char* warnings = nullptr;
  ASSERT_EQ(af_instance_validate(in, &warnings), AF_OK);
  EXPECT_NE(Take(warnings).find("helicopter-only"), std::string::npos);
  af_schedule* s = nullptr;
  EXPECT_EQ(af_construct(in, 0, &s), AF_ERR_CONSTRUCTION);
  af_exact_report report{};
  ASSERT_EQ(af_solve_exact(in, nullptr, &s, &report), AF_OK);
  EXPECT_EQ(report.status, AF_EXACT_INFEASIBLE);
  EXPECT_EQ(s, nullptr);
  EXPECT_TRUE(std::isinf(report.objective_hours));
  EXPECT_EQ(af_schedule_from_json(in, R"({"routes":[{"base":1,"missions":[9]}]})", &s),
            AF_ERR_PARSE);
  EXPECT_EQ(af_export_mps(in, "/nonexistent-dir/m.mps", 0), AF_ERR_IO);
  af_instance_free(in);
}

TEST(CApi, GenerateBenchAndReport) {
  af_generate_options g;
  af_generate_options_default(&g);
  g.mission_count = 8;
  g.seed = 5;
  af_instance* in = nullptr;
  ASSERT_EQ(af_instance_generate(&g, &in), AF_OK) << af_last_error();
  EXPECT_EQ(af_instance_mission_count(in), 8u);
  EXPECT_EQ(af_instance_base_count(in), 12u);
  af_schedule* s = nullptr;
  ASSERT_EQ(af_construct(in, 1, &s), AF_OK);
  af_schedule_free(s);
  af_instance_free(in);

  char* records = nullptr;
  ASSERT_EQ(af_bench_run(R"({"mission_counts":[6],"runs":2,"algorithms":"exact,ns,tabu"})",
                         nullptr, &records),
            AF_OK)
      << af_last_error();
  const std::string text = Take(records);
  char* report = nullptr;
  char* notices = nullptr;
  ASSERT_EQ(af_report(text.c_str(), "markdown", &report, &notices), AF_OK);
  EXPECT_NE(Take(report).find("| 6 |"), std::string::npos);
  EXPECT_EQ(Take(notices), "[]");
  EXPECT_EQ(af_report(text.c_str(), "xml", &report, nullptr), AF_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(af_bench_run(R"({"algorithms":"gurobi"})", nullptr, &records),
            AF_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(af_bench_run(R"({"tabu_tenure":0})", nullptr, &records), AF_ERR_INVALID_ARGUMENT);
}

}  // namespace
