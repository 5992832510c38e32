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

#include "sdsp/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sdsp/json_io.hpp"
#include "sdsp/time.hpp"

namespace sdsp {
namespace {

constexpr std::uint64_t kScenarioSalt = 0x73636e;  // scenario stream
constexpr std::uint64_t kSearchSalt = 0x736f6c;    // search stream

std::uint64_t scenario_seed(const StudyOptions& options, int size_index) {
  return mix_seed(options.seed, kScenarioSalt, static_cast<std::uint64_t>(size_index));
}

std::uint64_t search_seed(const StudyOptions& options, int size_index, int repeat) {
  return mix_seed(options.seed, kSearchSalt + static_cast<std::uint64_t>(size_index),
                  static_cast<std::uint64_t>(repeat));
}

Scenario make_scenario(const StudySize& size, const StudyOptions& options, int size_index) {
  GenParams params;
  params.m = size.m;
  params.ld = options.ld;
  params.seed = scenario_seed(options, size_index);
  params.exact_n = size.n;
  return generate_scenario(params);
}

template <typename Fn>
auto timed(bool enabled, double& accumulator, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  auto value = fn();
  if (enabled)
    accumulator += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return value;
}

ExperimentRow single_run_row(const StudySize& size, std::uint64_t seed, const std::string& arm,
                             long long objective, double elapsed_s) {
  ExperimentRow row;
  row.label = size.label;
  row.n = size.n;
  row.m = size.m;
  row.seed = seed;
  row.arm = arm;
  row.r_max = objective;
  row.r_min = objective;
  row.r_mean = static_cast<double>(objective);
  row.t_mean_s = elapsed_s;
  return row;
}

void check_repeats(const StudyOptions& options) {
  if (options.repeats < 1) throw std::invalid_argument("repeats must be at least 1");
}

std::string csv_value(double v) { return format_decimal(v); }

}  // namespace

StudySize preset_size(int index_1based) {
  const auto presets = scenario_presets();
  if (index_1based < 1 || index_1based > static_cast<int>(presets.size()))
    throw std::invalid_argument("preset index out of range");
  const ScenarioPreset& p = presets[index_1based - 1];
  return {p.label, p.n, p.m};
}

Report run_comparison(const std::vector<StudySize>& sizes, const StudyOptions& options) {
  check_repeats(options);
  Report report;
  report.study = "comparison";
  for (int s = 0; s < static_cast<int>(sizes.size()); ++s) {
    const StudySize& size = sizes[s];
    const Scenario scenario = make_scenario(size, options, s);

    ExperimentRow heuristic;
    heuristic.label = size.label;
    heuristic.n = size.n;
    heuristic.m = size.m;
    heuristic.seed = scenario_seed(options, s);
    heuristic.arm = "seha";
    long long best = 0, worst = 0;
    double sum = 0.0, time_sum = 0.0;
    for (int rep = 0; rep < options.repeats; ++rep) {
      SehaConfig config = options.seha;
      config.seed = search_seed(options, s, rep);
      const auto [solution, stats] =
          timed(options.timing, time_sum, [&] { return run_seha(scenario, config); });
      (void)stats;
      if (rep == 0) {
        best = worst = solution.objective;
      } else {
        best = std::max(best, solution.objective);
        worst = std::min(worst, solution.objective);
      }
      sum += static_cast<double>(solution.objective);
    }
    heuristic.r_max = best;
    heuristic.r_min = worst;
    heuristic.r_mean = sum / options.repeats;
    heuristic.t_mean_s = time_sum / options.repeats;

    ExperimentRow exact;
    exact.label = size.label;
    exact.n = size.n;
    exact.m = size.m;
    exact.seed = scenario_seed(options, s);
    exact.arm = "exact";
    double oracle_time = 0.0;
    try {
      const OracleResult result = timed(options.timing, oracle_time, [&] {
        return exact_solve(scenario, options.limits, options.seha.mode);
      });
      if (result.proved) {
        exact.r_max = exact.r_min = result.solution.objective;
        exact.r_mean = static_cast<double>(result.solution.objective);
        exact.t_mean_s = oracle_time;
        heuristic.has_gap = true;
        heuristic.gap_r = static_cast<double>(result.solution.objective - heuristic.r_max);
        heuristic.gap_rbar = static_cast<double>(result.solution.objective) - heuristic.r_mean;
      } else {
        exact.refused = true;
      }
    } catch (const OracleRefused&) {
      exact.refused = true;
    }

    report.rows.push_back(std::move(heuristic));
    report.rows.push_back(std::move(exact));
  }
  return report;
}

Report run_rule_ablation(const StudySize& size, const StudyOptions& options) {
  check_repeats(options);
  Report report;
  report.study = "rule_ablation";
  const Scenario scenario = make_scenario(size, options, 0);
  const struct {
    const char* label;
    bool rule1;
    bool rule2;
  } arms[] = {{"a&b", true, true}, {"a&!b", true, false}, {"!a&b", false, true},
              {"!a&!b", false, false}};
  for (int rep = 0; rep < options.repeats; ++rep) {
    const std::uint64_t seed = search_seed(options, 0, rep);
    for (const auto& arm : arms) {
      SehaConfig config = options.seha;
      config.rule1 = arm.rule1;
      config.rule2 = arm.rule2;
      config.seed = seed;
      double elapsed = 0.0;
      const Solution solution =
          timed(options.timing, elapsed, [&] { return construct_greedy(scenario, config); });
      report.rows.push_back(single_run_row(size, seed, arm.label, solution.objective, elapsed));
    }
  }
  return report;
}

Report run_initial_solution_study(const StudySize& size, const StudyOptions& options) {
  check_repeats(options);
  Report report;
  report.study = "initial_solution";
  const Scenario scenario = make_scenario(size, options, 0);
  const struct {
    const char* label;
    bool rules;
  } arms[] = {{"h_initial", true}, {"r_initial", false}};
  for (int rep = 0; rep < options.repeats; ++rep) {
    const std::uint64_t seed = search_seed(options, 0, rep);
    for (const auto& arm : arms) {
      SehaConfig config = options.seha;
      config.rule1 = arm.rules;
      config.rule2 = arm.rules;
      config.seed = seed;
      double elapsed = 0.0;
      const auto [solution, stats] =
          timed(options.timing, elapsed, [&] { return run_seha(scenario, config); });
      (void)stats;
      report.rows.push_back(single_run_row(size, seed, arm.label, solution.objective, elapsed));
    }
  }
  return report;
}

Report run_segmentation_study(const std::vector<StudySize>& sizes, const StudyOptions& options) {
  check_repeats(options);
  Report report;
  report.study = "segmentation";
  for (int s = 0; s < static_cast<int>(sizes.size()); ++s) {
    const StudySize& size = sizes[s];
    const Scenario scenario = make_scenario(size, options, s);
    const Mode modes[] = {Mode::Sg, Mode::NonSg};
    for (int rep = 0; rep < options.repeats; ++rep) {
      const std::uint64_t seed = search_seed(options, s, rep);
      for (Mode mode : modes) {
        SehaConfig config = options.seha;
        config.mode = mode;
        config.seed = seed;
        double elapsed = 0.0;
        const auto [solution, stats] =
            timed(options.timing, elapsed, [&] { return run_seha(scenario, config); });
        (void)stats;
        report.rows.push_back(
            single_run_row(size, seed, to_string(mode), solution.objective, elapsed));
      }
    }
  }
  return report;
}

std::string report_to_csv(const Report& report) {
  std::ostringstream out;
  out << "label,N,M,seed,arm,R_max,R_min,R_mean,T_mean_s,Gap_R,Gap_Rbar\n";
  for (const ExperimentRow& row : report.rows) {
    out << row.label << ',' << row.n << ',' << row.m << ',' << row.seed << ',' << row.arm << ',';
    if (row.refused) {
      out << "--,--,--,--";
    } else {
      out << row.r_max << ',' << row.r_min << ',' << csv_value(row.r_mean) << ','
          << csv_value(row.t_mean_s);
    }
    if (row.has_gap)
      out << ',' << csv_value(row.gap_r) << ',' << csv_value(row.gap_rbar);
    else
      out << ",--,--";
    out << '\n';
  }
  return out.str();
}

std::string report_to_json(const Report& report) {
  std::ostringstream out;
  out << "{\n  \"study\": " << nlohmann::json(report.study).dump() << ",\n  \"rows\": [";
  for (std::size_t k = 0; k < report.rows.size(); ++k) {
    const ExperimentRow& row = report.rows[k];
    out << (k == 0 ? "\n" : ",\n");
    out << "    {\"label\": " << nlohmann::json(row.label).dump() << ", \"n\": " << row.n
        << ", \"m\": " << row.m << ", \"seed\": " << row.seed
        << ", \"arm\": " << nlohmann::json(row.arm).dump()
        << ", \"refused\": " << (row.refused ? "true" : "false") << ", \"r_max\": " << row.r_max
        << ", \"r_min\": " << row.r_min << ", \"r_mean\": " << format_decimal(row.r_mean)
        << ", \"t_mean_s\": " << format_decimal(row.t_mean_s)
        << ", \"has_gap\": " << (row.has_gap ? "true" : "false");
    if (row.has_gap)
      out << ", \"gap_r\": " << format_decimal(row.gap_r)
          << ", \"gap_rbar\": " << format_decimal(row.gap_rbar);
    out << "}";
  }
  out << (report.rows.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

Report report_from_json(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("report JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("study") || !root.contains("rows"))
    throw std::invalid_argument("report JSON must carry study and rows");
  Report report;
  report.study = root["study"].get<std::string>();
  for (const nlohmann::json& item : root["rows"]) {
    ExperimentRow row;
    row.label = item.at("label").get<std::string>();
    row.n = item.at("n").get<int>();
    row.m = item.at("m").get<int>();
    row.seed = item.at("seed").get<std::uint64_t>();
    row.arm = item.at("arm").get<std::string>();
    row.refused = item.at("refused").get<bool>();
    row.r_max = item.at("r_max").get<long long>();
    row.r_min = item.at("r_min").get<long long>();
    row.r_mean = item.at("r_mean").get<double>();
    row.t_mean_s = item.at("t_mean_s").get<double>();
    row.has_gap = item.at("has_gap").get<bool>();
    if (row.has_gap) {
      row.gap_r = item.at("gap_r").get<double>();
      row.gap_rbar = item.at("gap_rbar").get<double>();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<std::filesystem::path> emit_report(const Report& report, ReportFormat format,
                                               const std::filesystem::path& path) {
  std::vector<std::filesystem::path> written;
  if (format == ReportFormat::Csv || format == ReportFormat::Json) {
    write_text_file(path, format == ReportFormat::Csv ? report_to_csv(report)
                                                      : report_to_json(report));
    written.push_back(path);
    return written;
  }

  // One "<N> <mean objective>" series per arm, sizes ascending.
  std::vector<std::string> arm_order;
  std::map<std::string, std::map<int, std::pair<double, int>>> series;
  for (const ExperimentRow& row : report.rows) {
    if (row.refused) continue;
    if (series.find(row.arm) == series.end()) arm_order.push_back(row.arm);
    auto& cell = series[row.arm][row.n];
    cell.first += row.r_mean;
    cell.second += 1;
  }
  const std::filesystem::path dir = path.parent_path();
  const std::string stem = path.stem().string();
  for (const std::string& arm : arm_order) {
    std::string name = arm;
    std::replace(name.begin(), name.end(), '/', '_');
    const std::filesystem::path file = dir / (stem + "_" + name + ".dat");
    std::ostringstream out;
    for (const auto& [n, cell] : series[arm])
      out << n << ' ' << format_decimal(cell.first / cell.second) << '\n';
    write_text_file(file, out.str());
    written.push_back(file);
  }
  return written;
}

}  // namespace sdsp
