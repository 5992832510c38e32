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

#include <array>
#include <cmath>

#include <doctest.h>

#include "sdsp/generator.hpp"
#include "sdsp/json_io.hpp"
#include "sdsp/model.hpp"

using namespace sdsp;

TEST_SUITE_BEGIN("generator");

TEST_CASE("identical parameters produce identical scenarios") {
  GenParams params;
  params.m = 12;
  params.seed = 404;
  const Scenario a = generate_scenario(params);
  const Scenario b = generate_scenario(params);
  CHECK(scenario_to_json(a) == scenario_to_json(b));

  params.seed = 405;
  const Scenario c = generate_scenario(params);
  CHECK(scenario_to_json(a) != scenario_to_json(c));
}

TEST_CASE("every draw is a well-formed scenario") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    GenParams params;
    params.m = 10;
    params.seed = seed;
    const Scenario scenario = generate_scenario(params);
    CHECK(scenario_problems(scenario).empty());
    CHECK(scenario.m() == 10);
    // N = round(a * M) with a in [1.5, 2.5).
    CHECK(scenario.n() >= 15);
    CHECK(scenario.n() <= 25);
  }
}

TEST_CASE("exact_n pins the data count") {
  GenParams params;
  params.m = 5;
  params.exact_n = 33;
  params.seed = 7;
  const Scenario scenario = generate_scenario(params);
  CHECK(scenario.n() == 33);
  CHECK(scenario.m() == 5);
  CHECK(scenario_problems(scenario).empty());
}

TEST_CASE("window timeline starts after the first quarter of the data") {
  GenParams params;
  params.m = 6;
  params.exact_n = 16;
  params.seed = 3;
  const Scenario scenario = generate_scenario(params);
  const ServiceMatrix r = compute_service_matrix(scenario);
  // Window 1 opens after data 4 ends, so the first four rows of column 1
  // are serviceable and the matrix is genuinely mixed.
  CHECK(scenario.windows[0].ds > scenario.data[3].oe);
  for (int i = 0; i < 4; ++i) CHECK(r(i, 0) == 1);
  CHECK(r.sum() > 0);
  CHECK(r.sum() < r.rows() * r.cols());
}

TEST_CASE("sampled values stay on their documented ranges and moments") {
  GenParams params;
  params.m = 2;
  params.exact_n = 10000;
  params.seed = 2026;
  const Scenario scenario = generate_scenario(params);
  const Usec ld = params.ld;

  std::array<int, 11> priority_count{};
  double d_sum = 0.0;
  double gap_sum = 0.0;
  for (int i = 0; i < scenario.n(); ++i) {
    const ImagingData& t = scenario.data[i];
    REQUIRE(t.p >= 1);
    REQUIRE(t.p <= 10);
    priority_count[t.p] += 1;
    REQUIRE(t.d >= 2 * ld);
    REQUIRE(t.d <= 10 * ld);
    d_sum += seconds(t.d);
    if (i > 0) gap_sum += seconds(t.os - scenario.data[i - 1].oe);
  }
  // p ~ U{1..10}: each bin near 1000 of 10000.
  for (int p = 1; p <= 10; ++p) {
    CHECK(priority_count[p] > 800);
    CHECK(priority_count[p] < 1200);
  }
  // d ~ U[2ld, 10ld]: mean near 6ld = 60 s.
  CHECK(d_sum / scenario.n() == doctest::Approx(60.0).epsilon(0.02));
  // gaps ~ max(0, N(100, 1)): mean near 100 s.
  CHECK(gap_sum / (scenario.n() - 1) == doctest::Approx(100.0).epsilon(0.01));

  for (int j = 0; j < scenario.m(); ++j) {
    REQUIRE(scenario.windows[j].l >= ld);
    REQUIRE(scenario.windows[j].l <= 5 * ld);
  }
}

TEST_CASE("benchmark presets are the eight published shapes") {
  const auto presets = scenario_presets();
  REQUIRE(presets.size() == 8);
  CHECK(std::string(presets[0].label) == "sn1");
  CHECK(presets[0].n == 20);
  CHECK(presets[0].m == 8);
  CHECK(presets[4].n == 200);
  CHECK(presets[4].m == 85);
  CHECK(std::string(presets[7].label) == "sn8");
  CHECK(presets[7].n == 1000);
  CHECK(presets[7].m == 530);
}

TEST_CASE("degenerate parameters are rejected") {
  GenParams params;
  params.m = 0;
  CHECK_THROWS_AS(generate_scenario(params), std::invalid_argument);
  params = GenParams{};
  params.ld = 0;
  CHECK_THROWS_AS(generate_scenario(params), std::invalid_argument);
  params = GenParams{};
  params.a_low = 3.0;
  params.a_high = 2.0;
  CHECK_THROWS_AS(generate_scenario(params), std::invalid_argument);
  params = GenParams{};
  params.exact_n = -1;
  CHECK_THROWS_AS(generate_scenario(params), std::invalid_argument);
}

TEST_SUITE_END();
