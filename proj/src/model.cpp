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

#include "sdsp/model.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace sdsp {
namespace {

void require_dimensions(const Scenario& scenario, const Solution& solution) {
  const int n = scenario.n();
  const int m = scenario.m();
  if (solution.x.size() != n || solution.q.size() != m || solution.y.rows() != n ||
      solution.y.cols() != m || solution.g.rows() != n || solution.g.cols() != m) {
    throw std::invalid_argument("solution dimensions do not match scenario (N=" +
                                std::to_string(n) + ", M=" + std::to_string(m) + ")");
  }
}

}  // namespace

Mode mode_from_string(const std::string& s) {
  if (s == "sg") return Mode::Sg;
  if (s == "nonsg") return Mode::NonSg;
  throw std::invalid_argument("unknown mode '" + s + "' (expected sg or nonsg)");
}

std::string to_string(Mode mode) { return mode == Mode::Sg ? "sg" : "nonsg"; }

Solution make_empty_solution(const Scenario& scenario) {
  Solution solution;
  solution.x = BinaryVector::Zero(scenario.n());
  solution.y = DurationMatrix::Zero(scenario.n(), scenario.m());
  solution.g = BinaryMatrix::Zero(scenario.n(), scenario.m());
  solution.q = BinaryVector::Zero(scenario.m());
  solution.objective = 0;
  return solution;
}

std::vector<std::string> scenario_problems(const Scenario& scenario) {
  std::vector<std::string> problems;
  if (scenario.ld <= 0) problems.push_back("ld must be positive");
  for (int i = 0; i < scenario.n(); ++i) {
    const ImagingData& t = scenario.data[i];
    std::string tag = "data[" + std::to_string(i + 1) + "]";
    if (t.p < 1) problems.push_back(tag + ": priority below 1");
    if (t.oe <= t.os) problems.push_back(tag + ": oe must exceed os");
    if (t.d <= 0) problems.push_back(tag + ": d must be positive");
    // d = 4.5 * (oe - os) within 1e-6 s  <=>  |2d - 9(oe - os)| <= 2 ticks.
    if (std::abs(2 * t.d - 9 * (t.oe - t.os)) > 2 * kTimeTol)
      problems.push_back(tag + ": d inconsistent with 4.5*(oe-os)");
    if (i > 0 && t.os < scenario.data[i - 1].oe)
      problems.push_back(tag + ": overlaps or precedes previous observation");
  }
  for (int j = 0; j < scenario.m(); ++j) {
    const PlaybackWindow& w = scenario.windows[j];
    std::string tag = "windows[" + std::to_string(j + 1) + "]";
    if (w.l <= 0) problems.push_back(tag + ": l must be positive");
    if (std::abs((w.ds + w.l) - w.de) > kTimeTol)
      problems.push_back(tag + ": de inconsistent with ds + l");
    if (j > 0 && w.ds < scenario.windows[j - 1].de)
      problems.push_back(tag + ": overlaps or precedes previous window");
  }
  return problems;
}

ServiceMatrix compute_service_matrix(const Scenario& scenario) {
  ServiceMatrix r(scenario.n(), scenario.m());
  for (int i = 0; i < scenario.n(); ++i)
    for (int j = 0; j < scenario.m(); ++j)
      r(i, j) = scenario.windows[j].ds > scenario.data[i].oe ? 1 : 0;
  return r;
}

long long evaluate_objective(const Scenario& scenario, const Solution& solution) {
  if (solution.x.size() != scenario.n())
    throw std::invalid_argument("x has length " + std::to_string(solution.x.size()) +
                                ", scenario has N=" + std::to_string(scenario.n()));
  long long total = 0;
  for (int i = 0; i < scenario.n(); ++i)
    if (solution.x[i] != 0) total += scenario.data[i].p;
  return total;
}

std::vector<Violation> validate_solution(const Scenario& scenario, const Solution& solution,
                                         Mode mode) {
  require_dimensions(scenario, solution);
  const int n = scenario.n();
  const int m = scenario.m();
  const ServiceMatrix r = compute_service_matrix(scenario);
  std::vector<Violation> out;
  auto flag = [&out](const char* constraint, int i, int j, std::string detail) {
    out.push_back(Violation{constraint, i, j, std::move(detail)});
  };

  for (int i = 0; i < n; ++i) {
    const Usec d = scenario.data[i].d;
    const bool x_binary = solution.x[i] == 0 || solution.x[i] == 1;
    if (!x_binary) flag("c13", i + 1, 0, "x = " + std::to_string(solution.x[i]));
    Usec row_sum = 0;
    int used_windows = 0;
    for (int j = 0; j < m; ++j) {
      const Usec y = solution.y(i, j);
      const int g = solution.g(i, j);
      row_sum += y;
      if (g != 0 && g != 1) flag("c12", i + 1, j + 1, "g = " + std::to_string(g));
      if (g == 1) ++used_windows;
      const Usec lo = static_cast<Usec>(g) * scenario.ld;
      const Usec hi = static_cast<Usec>(g) * d;
      if (y < lo - kTimeTol || y > hi + kTimeTol)
        flag("c6", i + 1, j + 1,
             "y = " + format_seconds(y) + " outside [" + format_seconds(lo) + ", " +
                 format_seconds(hi) + "]");
      if (g == 1 && r(i, j) == 0) flag("c9", i + 1, j + 1, "window cannot service this data");
      if (g == 1 && solution.x[i] == 0) flag("c10", i + 1, j + 1, "g set while x = 0");
      if (y < 0) flag("c11", i + 1, j + 1, "y = " + format_seconds(y));
    }
    const Usec target = solution.x[i] != 0 ? d : 0;
    if (std::abs(row_sum - target) > kTimeTol)
      flag("c7", i + 1, 0,
           "allocated " + format_seconds(row_sum) + ", required " + format_seconds(target));
    if (mode == Mode::NonSg && used_windows > 1)
      flag("nonsg", i + 1, 0, std::to_string(used_windows) + " windows used for one data");
  }
  for (int j = 0; j < m; ++j) {
    Usec col_sum = 0;
    bool any_g = false;
    for (int i = 0; i < n; ++i) {
      col_sum += solution.y(i, j);
      any_g = any_g || solution.g(i, j) == 1;
    }
    if (col_sum > scenario.windows[j].l + kTimeTol)
      flag("c8", 0, j + 1,
           "window carries " + format_seconds(col_sum) + " > capacity " +
               format_seconds(scenario.windows[j].l));
    const int expected_q = any_g ? 1 : 0;
    if (solution.q[j] != expected_q)
      flag("q", 0, j + 1,
           "q = " + std::to_string(solution.q[j]) + ", expected " + std::to_string(expected_q));
  }
  return out;
}

std::string describe(const Violation& violation) {
  std::string where;
  if (violation.i > 0 && violation.j > 0)
    where = "(" + std::to_string(violation.i) + "," + std::to_string(violation.j) + ")";
  else if (violation.i > 0)
    where = "(i=" + std::to_string(violation.i) + ")";
  else if (violation.j > 0)
    where = "(j=" + std::to_string(violation.j) + ")";
  std::string text = violation.constraint;
  if (!where.empty()) text += " at " + where;
  if (!violation.detail.empty()) text += ": " + violation.detail;
  return text;
}

std::vector<PlaybackTask> emit_playback_tasks(const Scenario& scenario, const Solution& solution) {
  auto violations = validate_solution(scenario, solution, Mode::Sg);
  if (!violations.empty())
    throw std::invalid_argument("refusing to emit tasks for an invalid solution: " +
                                describe(violations.front()));
  std::vector<PlaybackTask> tasks;
  for (int j = 0; j < scenario.m(); ++j) {
    if (solution.q[j] == 0) continue;
    PlaybackTask task;
    task.m = scenario.windows[j].m;
    task.ts = scenario.windows[j].ds;
    for (int i = 0; i < scenario.n(); ++i)
      if (solution.g(i, j) == 1) task.set.push_back(Fragment{scenario.data[i].n, solution.y(i, j)});
    std::sort(task.set.begin(), task.set.end(),
              [](const Fragment& a, const Fragment& b) { return a.n < b.n; });
    task.te = task.ts;
    for (const Fragment& fragment : task.set) task.te += fragment.dur;
    tasks.push_back(std::move(task));
  }
  return tasks;
}

}  // namespace sdsp
