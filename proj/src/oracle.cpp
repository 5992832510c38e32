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

#include "sdsp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdsp/time.hpp"

namespace sdsp {
namespace {

constexpr int kHardMaxData = 22;
constexpr int kHardMaxWindows = 20;

struct MaxFlow {
  struct Edge {
    int to;
    Usec cap;
    int rev;
  };

  explicit MaxFlow(int node_count) : graph(node_count), level(node_count), next(node_count) {}

  // Returns the edge's index in graph[from] so callers can read back flow.
  int add_edge(int from, int to, Usec cap) {
    graph[from].push_back({to, cap, static_cast<int>(graph[to].size())});
    graph[to].push_back({from, 0, static_cast<int>(graph[from].size()) - 1});
    return static_cast<int>(graph[from].size()) - 1;
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> queue;
    level[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (const Edge& e : graph[v]) {
        if (e.cap > 0 && level[e.to] < 0) {
          level[e.to] = level[v] + 1;
          queue.push(e.to);
        }
      }
    }
    return level[t] >= 0;
  }

  Usec dfs(int v, int t, Usec pushed) {
    if (v == t) return pushed;
    for (int& i = next[v]; i < static_cast<int>(graph[v].size()); ++i) {
      Edge& e = graph[v][i];
      if (e.cap > 0 && level[e.to] == level[v] + 1) {
        const Usec got = dfs(e.to, t, std::min(pushed, e.cap));
        if (got > 0) {
          e.cap -= got;
          graph[e.to][e.rev].cap += got;
          return got;
        }
      }
    }
    return 0;
  }

  Usec solve(int s, int t) {
    Usec flow = 0;
    while (bfs(s, t)) {
      std::fill(next.begin(), next.end(), 0);
      while (Usec pushed = dfs(s, t, std::numeric_limits<Usec>::max())) flow += pushed;
    }
    return flow;
  }

  std::vector<std::vector<Edge>> graph;
  std::vector<int> level;
  std::vector<int> next;
};

// Feasibility of the fixed-pattern transportation subproblem, with the first
// `patterns.size()` data pinned to their window sets (each listed window owes
// at least ld) and the remainder free over all serviceable windows with no
// lower bound.  Substituting y = ld + y' on pinned arcs turns the whole thing
// into a plain max-flow saturation test.  When every data is pinned and `out`
// is given, the witness allocation is written back (rows follow `demands`).
bool prefix_flow_feasible(std::span<const Usec> demands,
                          std::span<const std::vector<int>> patterns,
                          std::span<const std::vector<int>> serviceable,
                          std::span<const Usec> capacities, Usec ld,
                          Eigen::Matrix<Usec, Eigen::Dynamic, Eigen::Dynamic>* out) {
  const int k = static_cast<int>(demands.size());
  const int pinned = static_cast<int>(patterns.size());
  const int m = static_cast<int>(capacities.size());

  std::vector<Usec> window_fixed(m, 0);
  for (int t = 0; t < pinned; ++t)
    for (int j : patterns[t]) window_fixed[j] += ld;
  for (int j = 0; j < m; ++j)
    if (window_fixed[j] > capacities[j]) return false;

  const int source = 0;
  const int sink = 1 + k + m;
  MaxFlow flow(sink + 1);
  Usec total_supply = 0;
  struct ArcRef {
    int t;
    int j;
    int edge;
    Usec cap;
  };
  std::vector<ArcRef> arcs;
  for (int t = 0; t < k; ++t) {
    const Usec supply =
        t < pinned ? demands[t] - static_cast<Usec>(patterns[t].size()) * ld : demands[t];
    total_supply += supply;
    flow.add_edge(source, 1 + t, supply);
    if (t < pinned) {
      for (int j : patterns[t]) {
        const int edge = flow.add_edge(1 + t, 1 + k + j, supply);
        if (out) arcs.push_back({t, j, edge, supply});
      }
    } else {
      for (int j : serviceable[t]) flow.add_edge(1 + t, 1 + k + j, demands[t]);
    }
  }
  for (int j = 0; j < m; ++j) flow.add_edge(1 + k + j, sink, capacities[j] - window_fixed[j]);

  if (flow.solve(source, sink) != total_supply) return false;
  if (out) {
    out->setZero(k, m);
    for (const ArcRef& arc : arcs)
      (*out)(arc.t, arc.j) = ld + (arc.cap - flow.graph[1 + arc.t][arc.edge].cap);
  }
  return true;
}

struct SearchBudget {
  long long nodes_left;
  std::chrono::steady_clock::time_point deadline;
  long long used = 0;

  bool spend() {
    ++used;
    if (--nodes_left < 0) return false;
    return std::chrono::steady_clock::now() < deadline;
  }
};

enum class DfsOutcome { Found, Exhausted, Aborted };

DfsOutcome assign_patterns(const Scenario& scenario, std::span<const int> selected,
                           std::span<const std::vector<int>> serviceable,
                           std::span<const Usec> demands, std::span<const Usec> capacities,
                           Mode mode, SearchBudget& budget, std::vector<std::vector<int>>& patterns,
                           Eigen::Matrix<Usec, Eigen::Dynamic, Eigen::Dynamic>& witness) {
  const int k = static_cast<int>(selected.size());
  const int t = static_cast<int>(patterns.size());
  if (t == k) return DfsOutcome::Found;

  const std::vector<int>& windows = serviceable[t];
  const int max_parts =
      mode == Mode::NonSg
          ? 1
          : static_cast<int>(std::min<Usec>(static_cast<Usec>(windows.size()),
                                            demands[t] / scenario.ld));
  const std::uint64_t mask_end = std::uint64_t{1} << windows.size();
  for (std::uint64_t mask = 1; mask < mask_end; ++mask) {
    const int parts = std::popcount(mask);
    if (parts > max_parts) continue;
    if (mode == Mode::NonSg && parts != 1) continue;
    std::vector<int> pattern;
    pattern.reserve(parts);
    for (int b = 0; b < static_cast<int>(windows.size()); ++b)
      if (mask & (std::uint64_t{1} << b)) pattern.push_back(windows[b]);
    patterns.push_back(std::move(pattern));

    if (!budget.spend()) {
      patterns.pop_back();
      return DfsOutcome::Aborted;
    }
    const bool complete = static_cast<int>(patterns.size()) == k;
    if (prefix_flow_feasible(demands, patterns, serviceable, capacities, scenario.ld,
                             complete ? &witness : nullptr)) {
      const DfsOutcome deeper = assign_patterns(scenario, selected, serviceable, demands,
                                                capacities, mode, budget, patterns, witness);
      if (deeper != DfsOutcome::Exhausted) return deeper;
    }
    patterns.pop_back();
  }
  return DfsOutcome::Exhausted;
}

Solution build_solution(const Scenario& scenario, std::span<const int> selected,
                        const std::vector<std::vector<int>>& patterns,
                        const Eigen::Matrix<Usec, Eigen::Dynamic, Eigen::Dynamic>& witness) {
  Solution solution = make_empty_solution(scenario);
  for (int t = 0; t < static_cast<int>(selected.size()); ++t) {
    const int i = selected[t];
    solution.x[i] = 1;
    solution.objective += scenario.data[i].p;
    for (int j : patterns[t]) {
      solution.g(i, j) = 1;
      solution.y(i, j) = witness(t, j);
      solution.q[j] = 1;
    }
  }
  return solution;
}

// Terms like "6 x_1 + 4 x_2 - 90 x_3"; a unit coefficient drops the number.
class TermList {
 public:
  void add(Usec coef, const std::string& var) {
    if (coef == 0) return;
    const Usec mag = coef < 0 ? -coef : coef;
    if (empty_) {
      if (coef < 0) text_ += "- ";
      empty_ = false;
    } else {
      text_ += coef < 0 ? " - " : " + ";
    }
    if (mag != kUsecPerSec) {
      text_ += format_seconds(mag);
      text_ += ' ';
    }
    text_ += var;
  }

  bool empty() const { return empty_; }
  const std::string& str() const { return text_; }

 private:
  std::string text_;
  bool empty_ = true;
};

std::string var_x(int i) { return "x_" + std::to_string(i + 1); }
std::string var_g(int i, int j) {
  return "g_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}
std::string var_y(int i, int j) {
  return "y_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

}  // namespace

bool flow_feasible(std::span<const Usec> demands, const std::vector<std::vector<int>>& pattern,
                   std::span<const Usec> capacities, Usec ld) {
  if (ld <= 0) throw std::invalid_argument("ld must be positive");
  if (pattern.size() != demands.size())
    throw std::invalid_argument("pattern and demand counts differ");
  const int m = static_cast<int>(capacities.size());
  for (std::size_t t = 0; t < pattern.size(); ++t) {
    if (pattern[t].empty()) throw std::invalid_argument("empty window set");
    std::vector<int> sorted = pattern[t];
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0 || sorted.back() >= m)
      throw std::invalid_argument("window index out of range");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("duplicate window in set");
    if (static_cast<Usec>(pattern[t].size()) * ld > demands[t])
      throw std::invalid_argument("window set too large for demand");
  }
  return prefix_flow_feasible(demands, pattern, {}, capacities, ld, nullptr);
}

OracleResult exact_solve(const Scenario& scenario, const OracleLimits& limits, Mode mode) {
  if (limits.node_budget < 1) throw std::invalid_argument("node_budget must be at least 1");
  if (!(limits.time_budget > 0)) throw std::invalid_argument("time_budget must be positive");
  const int max_data = std::min(limits.max_data, kHardMaxData);
  if (scenario.n() > max_data)
    throw OracleRefused("instance has " + std::to_string(scenario.n()) +
                        " imaging data, limit is " + std::to_string(max_data));
  const int max_windows = std::min(limits.max_windows, kHardMaxWindows);
  if (scenario.m() > max_windows)
    throw OracleRefused("instance has " + std::to_string(scenario.m()) +
                        " playback windows, limit is " + std::to_string(max_windows));

  const int n = scenario.n();
  const int m = scenario.m();
  const ServiceMatrix service = compute_service_matrix(scenario);
  std::vector<Usec> capacities(m);
  Usec total_capacity = 0;
  for (int j = 0; j < m; ++j) {
    capacities[j] = scenario.windows[j].l;
    total_capacity += capacities[j];
  }

  // Subsets ranked by total priority, ties by ascending bitmask; the first
  // subset admitting a feasible allocation is the optimum.  The empty subset
  // ranks last, so exhausting the ranking still yields a proved answer.
  const std::uint32_t subset_count = std::uint32_t{1} << n;
  std::vector<long long> priority(subset_count);
  priority[0] = 0;
  for (std::uint32_t mask = 1; mask < subset_count; ++mask)
    priority[mask] = priority[mask & (mask - 1)] + scenario.data[std::countr_zero(mask)].p;
  std::vector<std::uint32_t> ranked(subset_count);
  std::iota(ranked.begin(), ranked.end(), 0u);
  std::sort(ranked.begin(), ranked.end(), [&priority](std::uint32_t a, std::uint32_t b) {
    if (priority[a] != priority[b]) return priority[a] > priority[b];
    return a < b;
  });

  SearchBudget budget{limits.node_budget,
                      std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(limits.time_budget)),
                      0};

  OracleResult result;
  result.solution = make_empty_solution(scenario);
  for (std::uint32_t mask : ranked) {
    std::vector<int> selected;
    std::vector<Usec> demands;
    std::vector<std::vector<int>> serviceable;
    Usec total_demand = 0;
    bool viable = true;
    for (int i = 0; i < n && viable; ++i) {
      if (!(mask & (std::uint32_t{1} << i))) continue;
      selected.push_back(i);
      demands.push_back(scenario.data[i].d);
      total_demand += scenario.data[i].d;
      if (scenario.data[i].d < scenario.ld) viable = false;
      std::vector<int> windows;
      for (int j = 0; j < m; ++j)
        if (service(i, j) == 1) windows.push_back(j);
      if (windows.empty()) viable = false;
      serviceable.push_back(std::move(windows));
    }
    if (!viable || total_demand > total_capacity) continue;

    if (!selected.empty()) {
      if (!budget.spend()) {
        result.nodes = budget.used;
        result.proved = false;
        result.solution = make_empty_solution(scenario);
        return result;
      }
      if (!prefix_flow_feasible(demands, {}, serviceable, capacities, scenario.ld, nullptr))
        continue;
    }

    std::vector<std::vector<int>> patterns;
    Eigen::Matrix<Usec, Eigen::Dynamic, Eigen::Dynamic> witness;
    const DfsOutcome outcome = assign_patterns(scenario, selected, serviceable, demands,
                                               capacities, mode, budget, patterns, witness);
    if (outcome == DfsOutcome::Aborted) {
      result.nodes = budget.used;
      result.proved = false;
      result.solution = make_empty_solution(scenario);
      return result;
    }
    if (outcome == DfsOutcome::Found) {
      if (selected.empty())
        result.solution = make_empty_solution(scenario);
      else
        result.solution = build_solution(scenario, selected, patterns, witness);
      result.proved = true;
      result.nodes = budget.used;
      return result;
    }
  }
  result.nodes = budget.used;
  result.proved = true;
  return result;
}

std::string export_lp(const Scenario& scenario, Mode mode) {
  const int n = scenario.n();
  const int m = scenario.m();
  const ServiceMatrix service = compute_service_matrix(scenario);
  std::ostringstream out;

  out << "\\ Satellite downlink scheduling, breakpoint-resume MIP\n";
  out << "\\ mode: " << to_string(mode) << "\n";
  out << "Maximize\n";
  TermList objective;
  for (int i = 0; i < n; ++i)
    objective.add(scenario.data[i].p * kUsecPerSec, var_x(i));
  out << " obj:" << (objective.empty() ? "" : " ") << objective.str() << "\n";

  out << "Subject To\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (service(i, j) != 1) continue;
      TermList lo;
      lo.add(scenario.ld, var_g(i, j));
      lo.add(-kUsecPerSec, var_y(i, j));
      out << " c6lo_" << i + 1 << "_" << j + 1 << ": " << lo.str() << " <= 0\n";
      TermList hi;
      hi.add(kUsecPerSec, var_y(i, j));
      hi.add(-scenario.data[i].d, var_g(i, j));
      out << " c6hi_" << i + 1 << "_" << j + 1 << ": " << hi.str() << " <= 0\n";
    }
  }
  for (int i = 0; i < n; ++i) {
    TermList row;
    for (int j = 0; j < m; ++j)
      if (service(i, j) == 1) row.add(kUsecPerSec, var_y(i, j));
    row.add(-scenario.data[i].d, var_x(i));
    out << " c7_" << i + 1 << ": " << row.str() << " = 0\n";
  }
  for (int j = 0; j < m; ++j) {
    TermList row;
    for (int i = 0; i < n; ++i)
      if (service(i, j) == 1) row.add(kUsecPerSec, var_y(i, j));
    if (row.empty()) continue;
    out << " c8_" << j + 1 << ": " << row.str() << " <= " << format_seconds(scenario.windows[j].l)
        << "\n";
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (service(i, j) != 1) continue;
      TermList row;
      row.add(kUsecPerSec, var_g(i, j));
      row.add(-kUsecPerSec, var_x(i));
      out << " c10_" << i + 1 << "_" << j + 1 << ": " << row.str() << " <= 0\n";
    }
  }
  if (mode == Mode::NonSg) {
    for (int i = 0; i < n; ++i) {
      TermList row;
      for (int j = 0; j < m; ++j)
        if (service(i, j) == 1) row.add(kUsecPerSec, var_g(i, j));
      if (row.empty()) continue;
      out << " nonsg_" << i + 1 << ": " << row.str() << " <= 1\n";
    }
  }

  out << "Bounds\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if (service(i, j) == 1) out << " 0 <= " << var_y(i, j) << "\n";

  out << "Binary\n";
  for (int i = 0; i < n; ++i) out << " " << var_x(i) << "\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if (service(i, j) == 1) out << " " << var_g(i, j) << "\n";
  out << "End\n";
  return out.str();
}

}  // namespace sdsp
