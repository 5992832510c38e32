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

#include <algorithm>
#include <string>
#include <vector>

#include <doctest.h>

#include "sdsp/model.hpp"
#include "sdsp/time.hpp"
#include "sdsp/types.hpp"

#include "fixtures.hpp"

using namespace sdsp;

namespace {

constexpr Usec kSec = kUsecPerSec;

// The split-across-two-windows optimum of Instance A.
Solution instance_a_optimum(const Scenario& scenario) {
  Solution s = make_empty_solution(scenario);
  s.x[0] = 1;
  s.y(0, 0) = 50 * kSec;
  s.y(0, 1) = 40 * kSec;
  s.g(0, 0) = 1;
  s.g(0, 1) = 1;
  s.q[0] = 1;
  s.q[1] = 1;
  s.objective = 6;
  return s;
}

bool has(const std::vector<Violation>& violations, const std::string& constraint, int i, int j) {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) {
    return v.constraint == constraint && v.i == i && v.j == j;
  });
}

}  // namespace

TEST_SUITE_BEGIN("model");

TEST_CASE("fixtures are well-formed scenarios") {
  CHECK(scenario_problems(fixtures::instance_a()).empty());
  CHECK(scenario_problems(fixtures::staggered()).empty());
}

TEST_CASE("scenario_problems catches structural defects") {
  Scenario broken = fixtures::instance_a();
  broken.data[0].d += 5 * kSec;  // breaks the 4.5x coupling
  CHECK(!scenario_problems(broken).empty());

  broken = fixtures::instance_a();
  std::swap(broken.windows[0], broken.windows[2]);  // out of order
  CHECK(!scenario_problems(broken).empty());

  broken = fixtures::instance_a();
  broken.ld = 0;
  CHECK(!scenario_problems(broken).empty());

  broken = fixtures::instance_a();
  broken.data[1].p = 0;  // priorities start at 1
  CHECK(!scenario_problems(broken).empty());
}

TEST_CASE("service requires the window to start strictly after observation") {
  const Scenario scenario = fixtures::staggered();
  const ServiceMatrix r = compute_service_matrix(scenario);
  REQUIRE(r.rows() == 3);
  REQUIRE(r.cols() == 2);
  CHECK(r(0, 0) == 1);
  CHECK(r(0, 1) == 1);
  CHECK(r(1, 0) == 0);
  CHECK(r(1, 1) == 1);
  CHECK(r(2, 0) == 0);
  CHECK(r(2, 1) == 0);

  // A window starting exactly at the observation end cannot serve it.
  Scenario touching;
  touching.ld = 10 * kSec;
  touching.data = {fixtures::data(1, 1, 0, 20)};
  touching.windows = {fixtures::window(1, 20, 120)};
  CHECK(compute_service_matrix(touching)(0, 0) == 0);
}

TEST_CASE("objective sums priorities of transmitted data") {
  const Scenario scenario = fixtures::instance_a();
  const Solution s = instance_a_optimum(scenario);
  CHECK(evaluate_objective(scenario, s) == 6);
  CHECK(evaluate_objective(scenario, make_empty_solution(scenario)) == 0);

  Solution wrong_shape = s;
  wrong_shape.x = BinaryVector::Zero(5);
  CHECK_THROWS_AS(evaluate_objective(scenario, wrong_shape), std::invalid_argument);
}

TEST_CASE("the Instance A optimum validates cleanly in SG mode") {
  const Scenario scenario = fixtures::instance_a();
  const Solution s = instance_a_optimum(scenario);
  CHECK(validate_solution(scenario, s, Mode::Sg).empty());
  // The same allocation splits data 1, so NonSG rejects it.
  const auto violations = validate_solution(scenario, s, Mode::NonSg);
  REQUIRE(!violations.empty());
  CHECK(has(violations, "nonsg", 1, 0));
}

TEST_CASE("each constraint flags with its own index") {
  const Scenario scenario = fixtures::instance_a();
  const Solution good = instance_a_optimum(scenario);

  SUBCASE("fragment below ld - c6") {
    Solution s = good;
    s.y(0, 1) = 4 * kSec;
    CHECK(has(validate_solution(scenario, s), "c6", 1, 2));
  }
  SUBCASE("fragment beyond the whole duration - c6") {
    Solution s = good;
    s.y(0, 0) = 95 * kSec;
    CHECK(has(validate_solution(scenario, s), "c6", 1, 1));
  }
  SUBCASE("transmitted data not fully shipped - c7") {
    Solution s = good;
    s.y(0, 1) = 30 * kSec;
    CHECK(has(validate_solution(scenario, s), "c7", 1, 0));
  }
  SUBCASE("untransmitted data shipping anyway - c7") {
    Solution s = good;
    s.x[0] = 0;
    const auto violations = validate_solution(scenario, s);
    CHECK(has(violations, "c7", 1, 0));
    CHECK(has(violations, "c10", 1, 1));
  }
  SUBCASE("window overfilled - c8") {
    Solution s = good;
    s.y(0, 0) = 55 * kSec;
    s.y(0, 1) = 35 * kSec;
    CHECK(has(validate_solution(scenario, s), "c8", 0, 1));
  }
  SUBCASE("carrying without service - c9") {
    const Scenario st = fixtures::staggered();
    Solution s = make_empty_solution(st);
    s.x[1] = 1;
    s.g(1, 0) = 1;  // window 1 cannot serve data 2
    s.y(1, 0) = st.data[1].d;
    s.q[0] = 1;
    s.objective = st.data[1].p;
    CHECK(has(validate_solution(st, s), "c9", 2, 1));
  }
  SUBCASE("carrier flag without transmission flag - c10") {
    Solution s = good;
    s.g(1, 2) = 1;
    s.y(1, 2) = 10 * kSec;
    CHECK(has(validate_solution(scenario, s), "c10", 2, 3));
  }
  SUBCASE("negative shipment - c11") {
    Solution s = good;
    s.y(1, 2) = -1;
    CHECK(has(validate_solution(scenario, s), "c11", 2, 3));
  }
  SUBCASE("non-binary carrier flag - c12") {
    Solution s = good;
    s.g(0, 0) = 2;
    CHECK(has(validate_solution(scenario, s), "c12", 1, 1));
  }
  SUBCASE("non-binary transmission flag - c13") {
    Solution s = good;
    s.x[1] = -1;
    CHECK(has(validate_solution(scenario, s), "c13", 2, 0));
  }
  SUBCASE("window-use flag out of sync - q") {
    Solution s = good;
    s.q[2] = 1;
    CHECK(has(validate_solution(scenario, s), "q", 0, 3));
  }
}

TEST_CASE("describe names the constraint and the indices") {
  Violation v;
  v.constraint = "c6";
  v.i = 1;
  v.j = 2;
  v.detail = "fragment shorter than ld";
  const std::string text = describe(v);
  CHECK(text.find("c6") != std::string::npos);
  CHECK(text.find("1") != std::string::npos);
  CHECK(text.find("2") != std::string::npos);
}

TEST_CASE("playback tasks lay fragments back to back in identity order") {
  const Scenario scenario = fixtures::instance_a();
  const auto tasks = emit_playback_tasks(scenario, instance_a_optimum(scenario));
  REQUIRE(tasks.size() == 2);

  CHECK(tasks[0].m == 1);
  CHECK(tasks[0].ts == 200 * kSec);
  CHECK(tasks[0].te == 250 * kSec);
  REQUIRE(tasks[0].set.size() == 1);
  CHECK(tasks[0].set[0].n == 1);
  CHECK(tasks[0].set[0].dur == 50 * kSec);

  CHECK(tasks[1].m == 2);
  CHECK(tasks[1].ts == 300 * kSec);
  CHECK(tasks[1].te == 340 * kSec);
  REQUIRE(tasks[1].set.size() == 1);
  CHECK(tasks[1].set[0].n == 1);
  CHECK(tasks[1].set[0].dur == 40 * kSec);
}

TEST_CASE("playback tasks sort fragments of one window by data identity") {
  Scenario scenario;
  scenario.ld = 10 * kSec;
  // Reverse identity order on purpose: storage order must not leak through.
  scenario.data = {fixtures::data(2, 3, 0, 4), fixtures::data(1, 5, 10, 18)};
  scenario.data[0].n = 2;
  scenario.data[1].n = 1;
  scenario.windows = {fixtures::window(1, 100, 160)};
  REQUIRE(scenario_problems(scenario).empty());

  Solution s = make_empty_solution(scenario);
  s.x[0] = s.x[1] = 1;
  s.y(0, 0) = scenario.data[0].d;  // 18 s, identity 2
  s.y(1, 0) = scenario.data[1].d;  // 36 s, identity 1
  s.g(0, 0) = s.g(1, 0) = 1;
  s.q[0] = 1;
  s.objective = 8;

  const auto tasks = emit_playback_tasks(scenario, s);
  REQUIRE(tasks.size() == 1);
  REQUIRE(tasks[0].set.size() == 2);
  CHECK(tasks[0].set[0].n == 1);
  CHECK(tasks[0].set[0].dur == 36 * kSec);
  CHECK(tasks[0].set[1].n == 2);
  CHECK(tasks[0].set[1].dur == 18 * kSec);
  CHECK(tasks[0].te == tasks[0].ts + 54 * kSec);
}

TEST_CASE("emit_playback_tasks refuses invalid solutions") {
  const Scenario scenario = fixtures::instance_a();
  Solution bad = instance_a_optimum(scenario);
  bad.y(0, 1) = 4 * kSec;
  CHECK_THROWS_AS(emit_playback_tasks(scenario, bad), std::invalid_argument);
}

TEST_CASE("mode names round-trip") {
  CHECK(mode_from_string("sg") == Mode::Sg);
  CHECK(mode_from_string("nonsg") == Mode::NonSg);
  CHECK(to_string(Mode::Sg) == "sg");
  CHECK(to_string(Mode::NonSg) == "nonsg");
  CHECK_THROWS_AS(mode_from_string("other"), std::invalid_argument);
}

TEST_SUITE_END();
