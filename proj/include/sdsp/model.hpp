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

#pragma once

#include <string>
#include <vector>

#include "sdsp/types.hpp"

namespace sdsp {

// SG allows an imaging data to split across windows (fragments of at least
// ld each); NonSG additionally forces each transmitted data wholly into a
// single window.
enum class Mode { Sg, NonSg };

Mode mode_from_string(const std::string& s);  // "sg" | "nonsg"
std::string to_string(Mode mode);

// r(i, j) = 1 iff ds_j > oe_i (strict; equality yields 0).
ServiceMatrix compute_service_matrix(const Scenario& scenario);

// Sum of priorities over transmitted data. Throws std::invalid_argument on
// dimension mismatch.
long long evaluate_objective(const Scenario& scenario, const Solution& solution);

// One violated constraint instance. Indices are 1-based to match the LP
// variable naming; 0 marks "not applicable".
struct Violation {
  std::string constraint;  // c6..c13, q, nonsg
  int i = 0;
  int j = 0;
  std::string detail;
};

// Checks every constraint of the model independently and reports each
// violated instance:
//   c6   g(i,j)*ld <= y(i,j) <= g(i,j)*d_i
//   c7   sum_j y(i,j) = x_i * d_i        (all-or-nothing transmission)
//   c8   sum_i y(i,j) <= l_j             (window capacity)
//   c9   g(i,j) <= r(i,j)                (service)
//   c10  g(i,j) <= x_i
//   c11  y(i,j) >= 0
//   c12  g(i,j) in {0,1}
//   c13  x_i in {0,1}
//   q    q(j) = 1 iff some g(i,j) = 1
//   nonsg  sum_j g(i,j) <= 1 per data    (NonSG mode only)
// Continuous comparisons carry a 1e-6 s tolerance (one microsecond tick).
// Throws std::invalid_argument on dimension mismatch.
std::vector<Violation> validate_solution(const Scenario& scenario, const Solution& solution,
                                         Mode mode = Mode::Sg);

std::string describe(const Violation& violation);

// One task per used window, in window order; fragments back to back from
// the window start in ascending data identity. Refuses (throws
// std::invalid_argument) if the solution does not validate.
std::vector<PlaybackTask> emit_playback_tasks(const Scenario& scenario, const Solution& solution);

}  // namespace sdsp
