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

#include "sdsp/time.hpp"
#include "sdsp/types.hpp"

namespace fixtures {

inline sdsp::ImagingData data(int n, int p, double os_s, double oe_s) {
  sdsp::ImagingData t;
  t.n = n;
  t.p = p;
  t.os = sdsp::usec_from_seconds(os_s);
  t.oe = sdsp::usec_from_seconds(oe_s);
  t.d = (t.oe - t.os) * 9 / 2;  // the 4.5x playback-to-observation rate
  return t;
}

inline sdsp::PlaybackWindow window(int m, double ds_s, double de_s) {
  sdsp::PlaybackWindow w;
  w.m = m;
  w.ds = sdsp::usec_from_seconds(ds_s);
  w.de = sdsp::usec_from_seconds(de_s);
  w.l = w.de - w.ds;
  return w;
}

// Two competing imaging data (90 s each) against 130 s of window capacity:
// only one fits, so the optimum takes the higher priority, split 50 + 40.
// Forcing whole-window placement fits nothing.
inline sdsp::Scenario instance_a() {
  sdsp::Scenario scenario;
  scenario.ld = 10 * sdsp::kUsecPerSec;
  scenario.data = {data(1, 6, 0, 20), data(2, 4, 120, 140)};
  scenario.windows = {window(1, 200, 250), window(2, 300, 350), window(3, 400, 430)};
  return scenario;
}

// Staggered observation ends against two windows: the earliest data is
// serviceable by both windows, the middle one only by the second, the last
// by none.
inline sdsp::Scenario staggered() {
  sdsp::Scenario scenario;
  scenario.ld = 10 * sdsp::kUsecPerSec;
  scenario.data = {data(1, 5, 0, 20), data(2, 3, 100, 140), data(3, 8, 500, 520)};
  scenario.windows = {window(1, 60, 130), window(2, 165, 265)};
  return scenario;
}

}  // namespace fixtures
