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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sdsp/model.hpp"
#include "sdsp/rng.hpp"
#include "sdsp/types.hpp"

namespace sdsp {

// SEHA: greedy construction guided by two heuristic rules, then remove/
// insert hill climbing under iteration, stagnation and wall-clock limits.
//   rule1  examine data by decreasing contribution rate
//   rule2  try windows by increasing window service coefficient
// Disabling a rule replaces its ordering with a seeded random one.
struct SehaConfig {
  long long max_iter = 100000;
  long long noup_iter = 5000;
  double solve_time = 60.0;       // seconds
  double remove_fraction = 0.10;  // share of scheduled data removed per move
  bool rule1 = true;
  bool rule2 = true;
  Mode mode = Mode::Sg;
  std::uint64_t seed = 1;
};

// c_i = (p_i/d_i) / max_k (p_k/d_k), in (0, 1], max entry exactly 1.
// Ratios are compared by integer cross-multiplication, so the induced
// ordering is exact and invariant under uniform scaling of priorities.
Eigen::VectorXd contribution_rates(const Scenario& scenario);

// Column sums of the service matrix: how many data each window can carry.
Eigen::VectorXi window_service_coefficients(const ServiceMatrix& service);

// One fragment of an allocation: window column index plus amount.
struct AllocationFragment {
  int window = 0;
  Usec amount = 0;
};

// Walks the candidate windows in order and fills the demand greedily. The
// remainder guard keeps the unallocated tail segmentable: a fill that would
// strand a remainder in (0, ld) is shortened by ld instead. Fragments below
// ld are never placed. Fail (nullopt) when the demand cannot be fully
// placed; the caller's residuals are untouched either way. NonSG places the
// whole demand in the first window with enough room.
std::optional<std::vector<AllocationFragment>> allocate_data(const ImagingData& data,
                                                             std::span<const int> window_order,
                                                             const DurationVector& residuals,
                                                             Usec ld, Mode mode);

// Incremental form of a solution during search: per-data fragment lists
// plus window residuals. Materialized into a dense Solution on demand.
struct SearchState {
  std::vector<std::vector<AllocationFragment>> alloc;  // per data index
  DurationVector residual;                             // per window
  std::vector<std::uint8_t> scheduled;                 // per data, 0/1
  long long objective = 0;
};

SearchState make_empty_state(const Scenario& scenario);
Solution materialize(const Scenario& scenario, const SearchState& state);

// Greedy construction per the two rules; skipped data stay unscheduled.
// Consumes rng only for orderings whose rule is off.
SearchState construct_greedy_state(const Scenario& scenario, const ServiceMatrix& service,
                                   const SehaConfig& config, Rng& rng);
Solution construct_greedy(const Scenario& scenario, const SehaConfig& config);

// Removes k = max(1, ceil(remove_fraction * |scheduled|)) uniformly chosen
// scheduled data entirely, restoring their residuals. No-op when nothing is
// scheduled.
void remove_operator(const Scenario& scenario, SearchState& state, double remove_fraction,
                     Rng& rng);

// Tries every unscheduled data in seeded random order against the current
// residuals, inserting each success.
void insert_operator(const Scenario& scenario, const ServiceMatrix& service, SearchState& state,
                     const SehaConfig& config, Rng& rng);

struct RunStats {
  long long initial_objective = 0;
  long long best_objective = 0;
  long long iterations = 0;
  long long improvements = 0;
  double elapsed_s = 0.0;
  std::string terminated_by;  // max_iter | noup_iter | time_limit
  // Adopted objectives: (iteration, objective), entry 0 is the construction.
  std::vector<std::pair<long long, long long>> trace;
};

// Hill climbing: a remove+insert pair is adopted only on strict objective
// improvement, otherwise rolled back. Stops at whichever limit binds first.
std::pair<Solution, RunStats> run_seha(const Scenario& scenario, const SehaConfig& config);

// Stats JSON (trace, counters, termination cause). Wall-clock time is
// deliberately not serialized so identical runs emit identical bytes.
std::string run_stats_to_json(const RunStats& stats);

// CLI/file form of the config: {"max_iter":..., "noup_iter":...,
// "solve_time":..., "remove_fraction":..., "rule1":..., "rule2":...,
// "mode":"sg"|"nonsg", "seed":...}. Missing keys keep their defaults.
SehaConfig seha_config_from_json(const std::string& text);

}  // namespace sdsp
