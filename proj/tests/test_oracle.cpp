// Copyright 2026 The SDSP-BRM Authors
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

#include <string>
#include <vector>

#include <doctest.h>

#include "sdsp/generator.hpp"
#include "sdsp/model.hpp"
#include "sdsp/oracle.hpp"
#include "sdsp/rng.hpp"

#include "fixtures.hpp"
#include "flow_check.hpp"

using namespace sdsp;

namespace {
constexpr Usec kSec = kUsecPerSec;
}

TEST_SUITE_BEGIN("oracle");

TEST_CASE("Instance A: optimum 6 split across two windows, 0 without splitting") {
  const Scenario scenario = fixtures::instance_a();
  const OracleResult sg = exact_solve(scenario, OracleLimits{}, Mode::Sg);
  CHECK(sg.proved);
  CHECK(sg.solution.objective == 6);
  CHECK(sg.solution.x[0] == 1);
  CHECK(sg.solution.x[1] == 0);
  CHECK(validate_solution(scenario, sg.solution, Mode::Sg).empty());

  const OracleResult nonsg = exact_solve(scenario, OracleLimits{}, Mode::NonSg);
  CHECK(nonsg.proved);
  CHECK(nonsg.solution.objective == 0);
  CHECK(validate_solution(scenario, nonsg.solution, Mode::NonSg).empty());
}

TEST_CASE("staggered service: only the early data fits, worth 5 either mode") {
  const Scenario scenario = fixtures::staggered();
  const OracleResult sg = exact_solve(scenario, OracleLimits{}, Mode::Sg);
  CHECK(sg.proved);
  CHECK(sg.solution.objective == 5);
  CHECK(validate_solution(scenario, sg.solution, Mode::Sg).empty());
  const OracleResult nonsg = exact_solve(scenario, OracleLimits{}, Mode::NonSg);
  CHECK(nonsg.proved);
  CHECK(nonsg.solution.objective == 5);
}

TEST_CASE("an empty scenario proves objective zero") {
  Scenario scenario;
  scenario.ld = 10 * kSec;
  const OracleResult result = exact_solve(scenario, OracleLimits{}, Mode::Sg);
  CHECK(result.proved);
  CHECK(result.solution.objective == 0);
}

TEST_CASE("witnesses validate and SG dominates NonSG on random instances") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    GenParams params;
    params.m = 4;
    params.exact_n = 7;
    params.seed = seed;
    const Scenario scenario = generate_scenario(params);
    const OracleResult sg = exact_solve(scenario, OracleLimits{}, Mode::Sg);
    const OracleResult nonsg = exact_solve(scenario, OracleLimits{}, Mode::NonSg);
    REQUIRE(sg.proved);
    REQUIRE(nonsg.proved);
    CHECK(validate_solution(scenario, sg.solution, Mode::Sg).empty());
    CHECK(validate_solution(scenario, nonsg.solution, Mode::NonSg).empty());
    CHECK(sg.solution.objective >= nonsg.solution.objective);
  }
}

TEST_CASE("permuting window capacities leaves the optimum unchanged") {
  Scenario a = fixtures::instance_a();
  Scenario b = a;
  // Same capacity multiset on the same serviceable timeline, different order.
  b.windows[0] = fixtures::window(1, 200, 240);  // 40
  b.windows[1] = fixtures::window(2, 300, 350);  // 50
  REQUIRE(scenario_problems(b).empty());
  const long long opt_a = exact_solve(a, OracleLimits{}, Mode::Sg).solution.objective;
  const long long opt_b = exact_solve(b, OracleLimits{}, Mode::Sg).solution.objective;
  CHECK(opt_a == opt_b);
}

TEST_CASE("limits refuse with the limit named") {
  GenParams params;
  params.m = 3;
  params.exact_n = 30;
  const Scenario wide = generate_scenario(params);
  CHECK_THROWS_WITH_AS(exact_solve(wide, OracleLimits{}, Mode::Sg), doctest::Contains("limit"),
                       OracleRefused);

  params.exact_n = 3;
  params.m = 9;
  const Scenario tall = generate_scenario(params);
  CHECK_THROWS_WITH_AS(exact_solve(tall, OracleLimits{}, Mode::Sg),
                       doctest::Contains("windows"), OracleRefused);
}

TEST_CASE("an exhausted node budget returns unproved") {
  const Scenario scenario = fixtures::instance_a();
  OracleLimits limits;
  limits.node_budget = 1;
  const OracleResult result = exact_solve(scenario, limits, Mode::Sg);
  CHECK(!result.proved);
  CHECK(result.solution.objective == 0);
  CHECK(result.nodes >= 1);
}

TEST_CASE("flow_feasible hand-checked cases") {
  const Usec ld = 10 * kSec;
  std::vector<Usec> demands{90 * kSec};
  std::vector<std::vector<int>> pattern{{0, 1}};
  std::vector<Usec> caps{50 * kSec, 50 * kSec};
  CHECK(flow_feasible(demands, pattern, caps, ld));

  caps = {50 * kSec, 35 * kSec};
  CHECK(!flow_feasible(demands, pattern, caps, ld));

  // Two data pinned to one window: the ld floor eats the capacity.
  demands = {20 * kSec, 20 * kSec};
  pattern = {{0}, {0}};
  caps = {25 * kSec};
  CHECK(!flow_feasible(demands, pattern, caps, ld));
  caps = {40 * kSec};
  CHECK(flow_feasible(demands, pattern, caps, ld));

  // Feasible only because the floors leave just enough slack.
  demands = {25 * kSec};
  pattern = {{0, 1}};
  caps = {13 * kSec, 13 * kSec};
  CHECK(flow_feasible(demands, pattern, caps, ld));
  caps = {13 * kSec, 11 * kSec};
  CHECK(!flow_feasible(demands, pattern, caps, ld));
}

TEST_CASE("flow_feasible rejects malformed patterns") {
  const Usec ld = 10 * kSec;
  std::vector<Usec> demands{30 * kSec};
  std::vector<Usec> caps{50 * kSec};
  CHECK_THROWS_AS(flow_feasible(demands, {{}}, caps, ld), std::invalid_argument);
  CHECK_THROWS_AS(flow_feasible(demands, {{0, 0}}, caps, ld), std::invalid_argument);
  CHECK_THROWS_AS(flow_feasible(demands, {{1}}, caps, ld), std::invalid_argument);
  CHECK_THROWS_AS(flow_feasible(demands, {{0}, {0}}, caps, ld), std::invalid_argument);
  std::vector<Usec> small{15 * kSec};
  CHECK_THROWS_AS(flow_feasible(small, {{0}}, caps, 20 * kSec), std::invalid_argument);
}

TEST_CASE("flow_feasible matches grid brute force on random micro instances") {
  Rng rng(314159);
  int feasible_seen = 0, infeasible_seen = 0;
  for (int k = 0; k < 60; ++k) {
    const auto inst = flow_check::random_micro(rng, 3, 3);
    const bool flow = flow_feasible(inst.demands, inst.pattern, inst.capacities, inst.ld);
    const bool brute = flow_check::discretized_feasible(inst.demands, inst.pattern,
                                                        inst.capacities, inst.ld, inst.step);
    CHECK(flow == brute);
    (flow ? feasible_seen : infeasible_seen) += 1;
  }
  // The sample must exercise both outcomes to mean anything.
  CHECK(feasible_seen > 5);
  CHECK(infeasible_seen > 5);
}

TEST_CASE("LP export writes the model rows for Instance A") {
  const Scenario scenario = fixtures::instance_a();
  const std::string lp = export_lp(scenario, Mode::Sg);
  CHECK(lp.find(" obj: 6 x_1 + 4 x_2\n") != std::string::npos);
  CHECK(lp.find(" c6lo_1_1: 10 g_1_1 - y_1_1 <= 0\n") != std::string::npos);
  CHECK(lp.find(" c6hi_1_1: y_1_1 - 90 g_1_1 <= 0\n") != std::string::npos);
  CHECK(lp.find(" c7_1: y_1_1 + y_1_2 + y_1_3 - 90 x_1 = 0\n") != std::string::npos);
  CHECK(lp.find(" c8_1: y_1_1 + y_2_1 <= 50\n") != std::string::npos);
  CHECK(lp.find(" c10_2_3: g_2_3 - x_2 <= 0\n") != std::string::npos);
  CHECK(lp.find("Bounds\n 0 <= y_1_1\n") != std::string::npos);
  CHECK(lp.find("Binary\n x_1\n x_2\n g_1_1\n") != std::string::npos);
  CHECK(lp.find("End\n") != std::string::npos);
  CHECK(lp.find("nonsg") == std::string::npos);
  CHECK(export_lp(scenario, Mode::Sg) == lp);  // byte-stable

  const std::string nonsg = export_lp(scenario, Mode::NonSg);
  CHECK(nonsg.find(" nonsg_1: g_1_1 + g_1_2 + g_1_3 <= 1\n") != std::string::npos);
  CHECK(nonsg.find(" nonsg_2: g_2_1 + g_2_2 + g_2_3 <= 1\n") != std::string::npos);
}

TEST_CASE("LP export omits variables the service matrix forbids") {
  const std::string lp = export_lp(fixtures::staggered(), Mode::Sg);
  CHECK(lp.find("y_3_") == std::string::npos);
  CHECK(lp.find("g_3_") == std::string::npos);
  CHECK(lp.find("y_2_1") == std::string::npos);
  CHECK(lp.find("y_2_2") != std::string::npos);
  // The unserviceable data still has its transmission variable, forced to 0.
  CHECK(lp.find(" c7_3: - 90 x_3 = 0\n") != std::string::npos);
  CHECK(lp.find(" x_3\n") != std::string::npos);
}

TEST_SUITE_END();
