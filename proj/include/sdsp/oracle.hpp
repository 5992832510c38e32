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

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdsp/model.hpp"
#include "sdsp/types.hpp"

namespace sdsp {

// Tractability guard for the exhaustive oracle. max_data is additionally
// hard-capped at 22 (the subset enumeration is materialized) and
// max_windows at 20 (window-use patterns are bitmasks).
struct OracleLimits {
  int max_data = 12;
  int max_windows = 6;
  long long node_budget = 5'000'000;  // pattern-search nodes
  double time_budget = 30.0;          // seconds
};

// Instance exceeds the enumeration limits; the message names the limit.
struct OracleRefused : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  Solution solution;
  bool proved = false;  // false only when a budget aborted the enumeration
  long long nodes = 0;
};

// Exact optimum by decomposition: candidate data subsets in decreasing
// reward order, per-subset search over window-use patterns, continuous
// feasibility of the fragment sizes by max-flow. The first feasible subset
// in the ordering is optimal. NonSG restricts every pattern to one window
// per data. The witness validates against the full constraint set.
OracleResult exact_solve(const Scenario& scenario, const OracleLimits& limits, Mode mode);

// Feasibility of fragment sizes for a fixed pattern: does y with
//   y(i,j) in [ld, d_i] for j in pattern[i], sum_j y(i,j) = d_i,
//   per-window totals within capacity
// exist? Decided exactly by max-flow after substituting out the ld lower
// bounds. Preconditions (nonempty patterns, |pattern[i]|*ld <= d_i, indices
// in range) are refused with std::invalid_argument.
bool flow_feasible(std::span<const Usec> demands, const std::vector<std::vector<int>>& pattern,
                   std::span<const Usec> capacities, Usec ld);

// LP-format text of the mixed integer program, byte-stable. Variables
// x_i, g_i_j, y_i_j (1-based) exist only where the service matrix allows;
// rows c6lo/c6hi, c7, c8, c10 and, in NonSG mode, nonsg. Durations are
// written as seconds with up to six decimal places.
std::string export_lp(const Scenario& scenario, Mode mode);

}  // namespace sdsp
