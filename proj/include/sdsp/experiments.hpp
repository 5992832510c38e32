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
#include <filesystem>
#include <string>
#include <vector>

#include "sdsp/generator.hpp"
#include "sdsp/oracle.hpp"
#include "sdsp/seha.hpp"

namespace sdsp {

// One report row. Comparison rows aggregate over repeats; the paired
// studies emit one row per (seed, arm) with R_max = R_min = R_mean.
// refused marks an oracle arm that was over its limits; gaps exist only on
// heuristic rows with a proved oracle counterpart.
struct ExperimentRow {
  std::string label;
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
  std::string arm;
  bool refused = false;
  long long r_max = 0;
  long long r_min = 0;
  double r_mean = 0.0;
  double t_mean_s = 0.0;
  bool has_gap = false;
  double gap_r = 0.0;
  double gap_rbar = 0.0;
};

struct Report {
  std::string study;
  std::vector<ExperimentRow> rows;
};

struct StudyOptions {
  int repeats = 20;
  std::uint64_t seed = 1;
  Usec ld = 10 * kUsecPerSec;
  bool timing = true;  // off zeroes T_mean_s so report bytes are reproducible
  SehaConfig seha;     // seed/mode/rules overridden per arm as the study requires
  OracleLimits limits;
};

struct StudySize {
  std::string label;
  int n = 0;
  int m = 0;
};

StudySize preset_size(int index_1based);  // benchmark shapes 1..8

// Heuristic vs exact baseline per size: one scenario per size, `repeats`
// searches with distinct seeds, oracle where within limits. Gap columns are
// exact-minus-heuristic (negative means the heuristic won).
Report run_comparison(const std::vector<StudySize>& sizes, const StudyOptions& options);

// Construction quality of the four rule arms (a&b, a&!b, !a&b, !a&!b) on
// paired seeds; objectives are taken before local search.
Report run_rule_ablation(const StudySize& size, const StudyOptions& options);

// Full searches started from the rule-guided construction (h_initial) vs a
// random construction (r_initial), sharing search seeds pairwise.
Report run_initial_solution_study(const StudySize& size, const StudyOptions& options);

// Full SG vs NonSG searches on paired seeds per size.
Report run_segmentation_study(const std::vector<StudySize>& sizes, const StudyOptions& options);

enum class ReportFormat { Csv, Json, PlotData };

// csv: header label,N,M,seed,arm,R_max,R_min,R_mean,T_mean_s,Gap_R,Gap_Rbar
//      (missing values as --)
// json: {"study":..., "rows":[...]}, loss-free mirror of the rows
// plotdata: per-arm "<N> <mean>" series files next to `path`
// Returns the files written.
std::vector<std::filesystem::path> emit_report(const Report& report, ReportFormat format,
                                               const std::filesystem::path& path);

std::string report_to_csv(const Report& report);
std::string report_to_json(const Report& report);
Report report_from_json(const std::string& text);

}  // namespace sdsp
