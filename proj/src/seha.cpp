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

#include "sdsp/seha.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sdsp {
namespace {

// p_a/d_a > p_b/d_b by cross multiplication; exact, so priority scaling can
// never flip an ordering through rounding.
bool ratio_greater(long long p_a, Usec d_a, long long p_b, Usec d_b) {
  return static_cast<__int128>(p_a) * d_b > static_cast<__int128>(p_b) * d_a;
}

void check_config(const SehaConfig& config) {
  if (config.max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
  if (config.noup_iter < 1) throw std::invalid_argument("noup_iter must be at least 1");
  if (!(config.solve_time > 0)) throw std::invalid_argument("solve_time must be positive");
  if (!(config.remove_fraction > 0) || config.remove_fraction > 1)
    throw std::invalid_argument("remove_fraction must lie in (0, 1]");
}

void commit(SearchState& state, const Scenario& scenario, int i,
            std::vector<AllocationFragment> fragments) {
  for (const AllocationFragment& f : fragments) state.residual[f.window] -= f.amount;
  state.alloc[i] = std::move(fragments);
  state.scheduled[i] = 1;
  state.objective += scenario.data[i].p;
}

void uncommit(SearchState& state, const Scenario& scenario, int i) {
  for (const AllocationFragment& f : state.alloc[i]) state.residual[f.window] += f.amount;
  state.alloc[i].clear();
  state.scheduled[i] = 0;
  state.objective -= scenario.data[i].p;
}

std::vector<int> window_preference_order(const ServiceMatrix& service, bool rule2, Rng& rng) {
  std::vector<int> order(service.cols());
  std::iota(order.begin(), order.end(), 0);
  if (rule2) {
    const Eigen::VectorXi coeff = window_service_coefficients(service);
    std::stable_sort(order.begin(), order.end(),
                     [&coeff](int a, int b) { return coeff[a] < coeff[b]; });
  } else {
    rng.shuffle(order);
  }
  return order;
}

// Serviceable windows of data i, keeping the preference order.
void filter_candidates(const ServiceMatrix& service, int i, const std::vector<int>& order,
                       std::vector<int>& out) {
  out.clear();
  for (int j : order)
    if (service(i, j) == 1) out.push_back(j);
}

}  // namespace

Eigen::VectorXd contribution_rates(const Scenario& scenario) {
  const int n = scenario.n();
  Eigen::VectorXd c(n);
  if (n == 0) return c;
  int best = 0;
  for (int i = 1; i < n; ++i)
    if (ratio_greater(scenario.data[i].p, scenario.data[i].d, scenario.data[best].p,
                      scenario.data[best].d))
      best = i;
  for (int i = 0; i < n; ++i) {
    const __int128 num = static_cast<__int128>(scenario.data[i].p) * scenario.data[best].d;
    const __int128 den = static_cast<__int128>(scenario.data[i].d) * scenario.data[best].p;
    c[i] = static_cast<double>(num) / static_cast<double>(den);
  }
  return c;
}

Eigen::VectorXi window_service_coefficients(const ServiceMatrix& service) {
  return service.colwise().sum().transpose();
}

std::optional<std::vector<AllocationFragment>> allocate_data(const ImagingData& data,
                                                             std::span<const int> window_order,
                                                             const DurationVector& residuals,
                                                             Usec ld, Mode mode) {
  if (mode == Mode::NonSg) {
    for (int j : window_order)
      if (residuals[j] >= data.d) return std::vector<AllocationFragment>{{j, data.d}};
    return std::nullopt;
  }
  std::vector<AllocationFragment> fragments;
  Usec rem = data.d;
  for (int j : window_order) {
    if (rem == 0) break;
    Usec alloc = std::min(rem, residuals[j]);
    // Never strand a remainder below ld: shrink the fill so the tail stays
    // placeable in a later window.
    if (rem - alloc > 0 && rem - alloc < ld) alloc = rem - ld;
    if (alloc < ld) continue;
    fragments.push_back({j, alloc});
    rem -= alloc;
  }
  if (rem > 0) return std::nullopt;
  return fragments;
}

SearchState make_empty_state(const Scenario& scenario) {
  SearchState state;
  state.alloc.resize(scenario.n());
  state.residual.resize(scenario.m());
  for (int j = 0; j < scenario.m(); ++j) state.residual[j] = scenario.windows[j].l;
  state.scheduled.assign(scenario.n(), 0);
  state.objective = 0;
  return state;
}

Solution materialize(const Scenario& scenario, const SearchState& state) {
  Solution solution = make_empty_solution(scenario);
  for (int i = 0; i < scenario.n(); ++i) {
    if (!state.scheduled[i]) continue;
    solution.x[i] = 1;
    for (const AllocationFragment& f : state.alloc[i]) {
      solution.y(i, f.window) = f.amount;
      solution.g(i, f.window) = 1;
      solution.q[f.window] = 1;
    }
  }
  solution.objective = state.objective;
  return solution;
}

SearchState construct_greedy_state(const Scenario& scenario, const ServiceMatrix& service,
                                   const SehaConfig& config, Rng& rng) {
  SearchState state = make_empty_state(scenario);
  if (scenario.n() == 0 || scenario.m() == 0) return state;

  std::vector<int> data_order(scenario.n());
  std::iota(data_order.begin(), data_order.end(), 0);
  if (config.rule1) {
    std::stable_sort(data_order.begin(), data_order.end(), [&scenario](int a, int b) {
      return ratio_greater(scenario.data[a].p, scenario.data[a].d, scenario.data[b].p,
                           scenario.data[b].d);
    });
  } else {
    rng.shuffle(data_order);
  }
  const std::vector<int> window_order = window_preference_order(service, config.rule2, rng);

  std::vector<int> candidates;
  for (int i : data_order) {
    filter_candidates(service, i, window_order, candidates);
    auto fragments = allocate_data(scenario.data[i], candidates, state.residual, scenario.ld,
                                   config.mode);
    if (fragments) commit(state, scenario, i, std::move(*fragments));
  }
  return state;
}

Solution construct_greedy(const Scenario& scenario, const SehaConfig& config) {
  Rng rng(config.seed);
  const ServiceMatrix service = compute_service_matrix(scenario);
  return materialize(scenario, construct_greedy_state(scenario, service, config, rng));
}

void remove_operator(const Scenario& scenario, SearchState& state, double remove_fraction,
                     Rng& rng) {
  std::vector<int> scheduled;
  for (int i = 0; i < scenario.n(); ++i)
    if (state.scheduled[i]) scheduled.push_back(i);
  if (scheduled.empty()) return;
  // k = max(1, ceil(fraction * count)), with the fraction held on a
  // millionth grid so the ceiling cannot be tipped by float rounding.
  const long long ppm = std::llround(remove_fraction * 1e6);
  const long long count = static_cast<long long>(scheduled.size());
  long long k = std::max<long long>(1, (count * ppm + 999999) / 1000000);
  k = std::min(k, count);
  for (long long t = 0; t < k; ++t) {
    const long long pick = rng.uniform_int(t, count - 1);
    std::swap(scheduled[t], scheduled[pick]);
    uncommit(state, scenario, scheduled[t]);
  }
}

void insert_operator(const Scenario& scenario, const ServiceMatrix& service, SearchState& state,
                     const SehaConfig& config, Rng& rng) {
  std::vector<int> unscheduled;
  for (int i = 0; i < scenario.n(); ++i)
    if (!state.scheduled[i]) unscheduled.push_back(i);
  if (unscheduled.empty() || scenario.m() == 0) return;
  rng.shuffle(unscheduled);
  const std::vector<int> window_order = window_preference_order(service, config.rule2, rng);

  Usec total_residual = 0;
  for (int j = 0; j < scenario.m(); ++j) total_residual += state.residual[j];

  std::vector<int> candidates;
  for (int i : unscheduled) {
    if (scenario.data[i].d > total_residual) continue;
    filter_candidates(service, i, window_order, candidates);
    auto fragments = allocate_data(scenario.data[i], candidates, state.residual, scenario.ld,
                                   config.mode);
    if (fragments) {
      total_residual -= scenario.data[i].d;
      commit(state, scenario, i, std::move(*fragments));
    }
  }
}

std::pair<Solution, RunStats> run_seha(const Scenario& scenario, const SehaConfig& config) {
  check_config(config);
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&t0] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  Rng rng(config.seed);
  const ServiceMatrix service = compute_service_matrix(scenario);
  SearchState state = construct_greedy_state(scenario, service, config, rng);

  RunStats stats;
  stats.initial_objective = state.objective;
  stats.trace.emplace_back(0, state.objective);

  long long iter = 0;
  long long no_improve = 0;
  while (true) {
    if (iter >= config.max_iter) {
      stats.terminated_by = "max_iter";
      break;
    }
    if (no_improve >= config.noup_iter) {
      stats.terminated_by = "noup_iter";
      break;
    }
    if (elapsed() >= config.solve_time) {
      stats.terminated_by = "time_limit";
      break;
    }
    ++iter;
    SearchState trial = state;
    remove_operator(scenario, trial, config.remove_fraction, rng);
    insert_operator(scenario, service, trial, config, rng);
    if (trial.objective > state.objective) {
      state = std::move(trial);
      ++stats.improvements;
      no_improve = 0;
      stats.trace.emplace_back(iter, state.objective);
    } else {
      ++no_improve;
    }
  }

  stats.iterations = iter;
  stats.best_objective = state.objective;
  stats.elapsed_s = elapsed();
  return {materialize(scenario, state), stats};
}

std::string run_stats_to_json(const RunStats& stats) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"initial_objective\": " << stats.initial_objective << ",\n";
  out << "  \"best_objective\": " << stats.best_objective << ",\n";
  out << "  \"iterations\": " << stats.iterations << ",\n";
  out << "  \"improvements\": " << stats.improvements << ",\n";
  out << "  \"terminated_by\": \"" << stats.terminated_by << "\",\n";
  out << "  \"trace\": [";
  for (std::size_t k = 0; k < stats.trace.size(); ++k) {
    out << (k == 0 ? "\n" : ",\n");
    out << "    {\"iter\": " << stats.trace[k].first << ", \"objective\": " << stats.trace[k].second
        << "}";
  }
  out << (stats.trace.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

SehaConfig seha_config_from_json(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config JSON: ") + e.what());
  }
  if (!root.is_object()) throw std::invalid_argument("config JSON must be an object");
  SehaConfig config;
  if (root.contains("max_iter")) config.max_iter = root["max_iter"].get<long long>();
  if (root.contains("noup_iter")) config.noup_iter = root["noup_iter"].get<long long>();
  if (root.contains("solve_time")) config.solve_time = root["solve_time"].get<double>();
  if (root.contains("remove_fraction"))
    config.remove_fraction = root["remove_fraction"].get<double>();
  if (root.contains("rule1")) config.rule1 = root["rule1"].get<bool>();
  if (root.contains("rule2")) config.rule2 = root["rule2"].get<bool>();
  if (root.contains("mode")) config.mode = mode_from_string(root["mode"].get<std::string>());
  if (root.contains("seed")) config.seed = root["seed"].get<std::uint64_t>();
  check_config(config);
  return config;
}

}  // namespace sdsp
