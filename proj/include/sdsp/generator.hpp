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

#include <cstdint>
#include <optional>
#include <span>

#include "sdsp/types.hpp"

namespace sdsp {

// Sampling plan for random scenarios:
//   p_i  ~ U{1..10}
//   d_i  ~ U[2ld, 10ld]            (microsecond grid, oe_i - os_i = d_i/4.5)
//   l_j  ~ U[ld, 5ld]
//   consecutive intervals separated by max(0, N(gap_mean, gap_std)) gaps
//   N = round(a*M), a ~ U[a_low, a_high), unless exact_n pins N.
struct GenParams {
  int m = 8;
  Usec ld = 10 * kUsecPerSec;
  std::uint64_t seed = 1;
  double gap_mean = 100.0;  // seconds
  double gap_std = 1.0;     // seconds
  double a_low = 1.5;
  double a_high = 2.5;
  std::optional<int> exact_n;
};

// Deterministic in params (identical params -> identical scenario). Data
// intervals and windows are chained, so they come out sorted and disjoint.
// The window timeline starts after the first quarter of the data so that
// service coefficients are mixed rather than all-ones.
Scenario generate_scenario(const GenParams& params);

// Benchmark scenario shapes (N, M), smallest to largest.
struct ScenarioPreset {
  const char* label;
  int n;
  int m;
};

std::span<const ScenarioPreset> scenario_presets();

}  // namespace sdsp
