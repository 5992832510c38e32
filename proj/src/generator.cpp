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

#include "sdsp/generator.hpp"

#include <cmath>
#include <stdexcept>

#include "sdsp/rng.hpp"

namespace sdsp {
namespace {

constexpr ScenarioPreset kPresets[] = {
    {"sn1", 20, 8},    {"sn2", 30, 15},   {"sn3", 50, 24},   {"sn4", 100, 70},
    {"sn5", 200, 85},  {"sn6", 500, 220}, {"sn7", 800, 340}, {"sn8", 1000, 530},
};

Usec gap_sample(Rng& rng, const GenParams& params) {
  double g = rng.normal(params.gap_mean, params.gap_std);
  Usec us = usec_from_seconds(g);
  return us > 0 ? us : 0;
}

}  // namespace

std::span<const ScenarioPreset> scenario_presets() { return kPresets; }

Scenario generate_scenario(const GenParams& params) {
  if (params.m < 1) throw std::invalid_argument("generator: M must be at least 1");
  if (params.ld <= 0) throw std::invalid_argument("generator: ld must be positive");
  if (params.a_low > params.a_high) throw std::invalid_argument("generator: a_low > a_high");
  if (params.exact_n && *params.exact_n < 0)
    throw std::invalid_argument("generator: exact_n must be non-negative");

  Rng rng(params.seed);
  int n;
  if (params.exact_n) {
    n = *params.exact_n;
  } else {
    double a = rng.uniform(params.a_low, params.a_high);
    n = static_cast<int>(std::llround(a * params.m));
  }

  Scenario scenario;
  scenario.ld = params.ld;
  scenario.data.reserve(n);
  scenario.windows.reserve(params.m);

  // d lives on a 9-microsecond grid so that the observation interval
  // d / 4.5 is a whole number of microseconds and the 4.5x coupling
  // survives six-decimal serialization exactly.
  const Usec k_lo = (2 * params.ld + 8) / 9;
  const Usec k_hi = (10 * params.ld) / 9;
  if (k_lo > k_hi) throw std::invalid_argument("generator: ld too small for the duration grid");

  Usec cursor = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0) cursor += gap_sample(rng, params);
    ImagingData t;
    t.n = i + 1;
    t.p = static_cast<int>(rng.uniform_int(1, 10));
    const Usec k = rng.uniform_int(k_lo, k_hi);
    t.d = 9 * k;
    t.os = cursor;
    t.oe = cursor + 2 * k;  // d / 4.5
    cursor = t.oe;
    scenario.data.push_back(t);
  }

  // Windows start after the first quarter of the data, so early windows
  // interleave with later observations and the service matrix is mixed.
  Usec window_cursor = 0;
  if (n > 0) window_cursor = scenario.data[(n + 3) / 4 - 1].oe;
  for (int j = 0; j < params.m; ++j) {
    window_cursor += gap_sample(rng, params);
    PlaybackWindow w;
    w.m = j + 1;
    w.l = rng.uniform_int(params.ld, 5 * params.ld);
    w.ds = window_cursor;
    w.de = w.ds + w.l;
    window_cursor = w.de;
    scenario.windows.push_back(w);
  }
  return scenario;
}

}  // namespace sdsp
