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

#include <filesystem>
#include <stdexcept>
#include <string>

#include "sdsp/types.hpp"

namespace sdsp {

// Malformed or non-conforming input (bad JSON, missing keys, broken
// scenario invariants). The message names the offending key or location.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Canonical scenario JSON. Key order is fixed, numbers are seconds with at
// most six decimal places, one data/window object per line. Emission is
// byte-stable: equal scenarios produce equal bytes.
std::string scenario_to_json(const Scenario& scenario);

// Parses and checks scenario invariants; throws ParseError naming the
// problem (missing key, duration inconsistent with the 4.5x rule, ...).
Scenario scenario_from_json(const std::string& text);

// Canonical solution JSON: objective, x, sparse assignments ordered by
// (i, j) 1-based, and the per-window playback tasks. The solution must
// validate (tasks are derived from it); throws std::invalid_argument
// otherwise.
std::string solution_to_json(const Scenario& scenario, const Solution& solution);

// Rebuilds a Solution against the scenario's dimensions; g is recovered as
// the indicator of nonzero assignment, q as the indicator of window use.
// Throws ParseError on malformed input or dimension mismatch.
Solution solution_from_json(const std::string& text, const Scenario& scenario);

void save_scenario(const Scenario& scenario, const std::filesystem::path& path);
Scenario load_scenario(const std::filesystem::path& path);
void save_solution(const Scenario& scenario, const Solution& solution,
                   const std::filesystem::path& path);
Solution load_solution(const std::filesystem::path& path, const Scenario& scenario);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace sdsp
