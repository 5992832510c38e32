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

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "sdsp/time.hpp"

namespace sdsp {

using DurationVector = Eigen::Matrix<Usec, Eigen::Dynamic, 1>;
using DurationMatrix = Eigen::Matrix<Usec, Eigen::Dynamic, Eigen::Dynamic>;
using BinaryVector = Eigen::VectorXi;
using BinaryMatrix = Eigen::MatrixXi;

// One stored observation product. The downlink duration d is tied to the
// observation interval by the 4.5x playback-to-observation rate:
// d = 4.5 * (oe - os), within one microsecond.
struct ImagingData {
  int n = 0;    // identity
  int p = 0;    // priority (reward when transmitted)
  Usec os = 0;  // observation start
  Usec oe = 0;  // observation end
  Usec d = 0;   // downlink duration
};

// A visibility interval; its capacity equals its length.
struct PlaybackWindow {
  int m = 0;    // identity
  Usec ds = 0;  // window start
  Usec de = 0;  // window end
  Usec l = 0;   // length
};

// ld is the minimum fragment length: no piece of an imaging data shorter
// than ld may be transmitted.
struct Scenario {
  Usec ld = 0;
  std::vector<ImagingData> data;
  std::vector<PlaybackWindow> windows;

  int n() const { return static_cast<int>(data.size()); }
  int m() const { return static_cast<int>(windows.size()); }
};

// r(i, j) = 1 exactly when window j starts strictly after data i's
// observation ends.
using ServiceMatrix = BinaryMatrix;

// Decision variables of the downlink model.
//   x(i)    whether data i is transmitted (all-or-nothing)
//   y(i,j)  amount of data i sent in window j, microseconds
//   g(i,j)  whether window j carries a fragment of data i
//   q(j)    whether window j is used; derived: q(j) = max_i g(i,j)
struct Solution {
  BinaryVector x;
  DurationMatrix y;
  BinaryMatrix g;
  BinaryVector q;
  long long objective = 0;
};

struct Fragment {
  int n = 0;      // data identity
  Usec dur = 0;   // fragment duration
};

// Executable playback order for one window: fragments run back to back
// from the window start.
struct PlaybackTask {
  int m = 0;
  Usec ts = 0;
  Usec te = 0;
  std::vector<Fragment> set;
};

// Zero-valued solution with dimensions matching the scenario.
Solution make_empty_solution(const Scenario& scenario);

// Structural problems with a scenario (ordering, interval invariants, the
// 4.5x duration coupling). Empty means well-formed.
std::vector<std::string> scenario_problems(const Scenario& scenario);

}  // namespace sdsp
