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

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sdsp/experiments.hpp"
#include "sdsp/generator.hpp"
#include "sdsp/json_io.hpp"
#include "sdsp/model.hpp"
#include "sdsp/oracle.hpp"
#include "sdsp/seha.hpp"
#include "sdsp/time.hpp"

namespace {

using namespace sdsp;

struct SehaFlags {
  std::string mode = "sg";
  std::string rules = "ab";
  long long max_iter = 0;
  long long noup_iter = 0;
  double time_limit = 0.0;
  double remove_fraction = 0.0;
  std::uint64_t seed = 1;

  CLI::Option* mode_opt = nullptr;
  CLI::Option* rules_opt = nullptr;
  CLI::Option* max_iter_opt = nullptr;
  CLI::Option* noup_iter_opt = nullptr;
  CLI::Option* time_limit_opt = nullptr;
  CLI::Option* remove_fraction_opt = nullptr;
  CLI::Option* seed_opt = nullptr;

  void attach(CLI::App* cmd) {
    mode_opt = cmd->add_option("--mode", mode, "Segmentation mode")
                   ->check(CLI::IsMember({"sg", "nonsg"}))
                   ->capture_default_str();
    rules_opt = cmd->add_option("--rules", rules,
                                "Construction rules: a = contribution-rate order, "
                                "b = window-coefficient order")
                    ->check(CLI::IsMember({"ab", "a", "b", "none"}))
                    ->capture_default_str();
    max_iter_opt = cmd->add_option("--max-iter", max_iter, "Iteration limit");
    noup_iter_opt = cmd->add_option("--noup-iter", noup_iter, "Stagnation limit");
    time_limit_opt = cmd->add_option("--time-limit", time_limit, "Search time limit (s)");
    remove_fraction_opt =
        cmd->add_option("--remove-fraction", remove_fraction, "Removed share per iteration");
    seed_opt = cmd->add_option("--seed", seed, "Search seed")->capture_default_str();
  }

  // Flags override whatever the base (defaults or --config) carries.
  SehaConfig apply(SehaConfig config) const {
    if (mode_opt->count()) config.mode = mode_from_string(mode);
    if (rules_opt->count()) {
      config.rule1 = rules == "ab" || rules == "a";
      config.rule2 = rules == "ab" || rules == "b";
    }
    if (max_iter_opt->count()) config.max_iter = max_iter;
    if (noup_iter_opt->count()) config.noup_iter = noup_iter;
    if (time_limit_opt->count()) config.solve_time = time_limit;
    if (remove_fraction_opt->count()) config.remove_fraction = remove_fraction;
    if (seed_opt->count()) config.seed = seed;
    return config;
  }
};

struct OracleFlags {
  int max_data = OracleLimits{}.max_data;
  int max_windows = OracleLimits{}.max_windows;
  long long node_budget = OracleLimits{}.node_budget;
  double time_budget = OracleLimits{}.time_budget;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-data", max_data, "Largest N the oracle accepts")
        ->capture_default_str();
    cmd->add_option("--max-windows", max_windows, "Largest M the oracle accepts")
        ->capture_default_str();
    cmd->add_option("--node-budget", node_budget, "Search node budget")->capture_default_str();
    cmd->add_option("--time-budget", time_budget, "Search time budget (s)")
        ->capture_default_str();
  }

  OracleLimits limits() const { return {max_data, max_windows, node_budget, time_budget}; }
};

StudySize parse_size(const std::string& token) {
  const auto presets = scenario_presets();
  for (const ScenarioPreset& p : presets)
    if (token == p.label) return {p.label, p.n, p.m};
  const auto x = token.find('x');
  if (x != std::string::npos) {
    const int n = std::stoi(token.substr(0, x));
    const int m = std::stoi(token.substr(x + 1));
    if (n < 0 || m < 0) throw std::invalid_argument("size " + token + " is negative");
    return {token, n, m};
  }
  return preset_size(std::stoi(token));
}

std::vector<StudySize> parse_sizes(const std::string& list) {
  std::vector<StudySize> sizes;
  std::string token;
  std::istringstream in(list);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    try {
      sizes.push_back(parse_size(token));
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot read size \"" + token +
                                  "\" (want a preset label, a preset index, or NxM)");
    }
  }
  if (sizes.empty()) throw std::invalid_argument("no sizes given");
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Satellite downlink scheduling under breakpoint-resume playback"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Sample a random scenario");
  std::string gen_out = "scenario.json";
  std::string gen_preset;
  int gen_m = 8;
  std::optional<int> gen_n;
  std::uint64_t gen_seed = 1;
  double gen_ld = 10.0;
  generate->add_option("-o,--output", gen_out, "Scenario file")->capture_default_str();
  generate->add_option("--preset", gen_preset, "Benchmark shape label (sn1..sn8)");
  generate->add_option("--m", gen_m, "Window count")->capture_default_str();
  generate->add_option("--exact-n", gen_n, "Pin the data count");
  generate->add_option("--seed", gen_seed, "Generator seed")->capture_default_str();
  generate->add_option("--ld", gen_ld, "Minimum fragment length (s)")->capture_default_str();

  // solve
  auto* solve = app.add_subcommand("solve", "Run the heuristic search");
  std::string solve_in = "scenario.json";
  std::string solve_out = "solution.json";
  std::string solve_stats = "stats.json";
  std::string solve_config;
  solve->add_option("-i,--scenario", solve_in, "Scenario file")->capture_default_str();
  solve->add_option("-o,--solution", solve_out, "Solution file")->capture_default_str();
  solve->add_option("--stats", solve_stats, "Search stats file")->capture_default_str();
  solve->add_option("--config", solve_config, "Search config JSON, overridden by flags");
  SehaFlags solve_flags;
  solve_flags.attach(solve);

  // exact
  auto* exact = app.add_subcommand("exact", "Run the exact oracle");
  std::string exact_in = "scenario.json";
  std::string exact_out = "solution.json";
  std::string exact_mode = "sg";
  exact->add_option("-i,--scenario", exact_in, "Scenario file")->capture_default_str();
  exact->add_option("-o,--solution", exact_out, "Solution file")->capture_default_str();
  exact->add_option("--mode", exact_mode, "Segmentation mode")
      ->check(CLI::IsMember({"sg", "nonsg"}))
      ->capture_default_str();
  OracleFlags exact_flags;
  exact_flags.attach(exact);

  // validate
  auto* validate = app.add_subcommand("validate", "Check a solution against a scenario");
  std::string val_in = "scenario.json";
  std::string val_sol = "solution.json";
  std::string val_mode = "sg";
  validate->add_option("-i,--scenario", val_in, "Scenario file")->capture_default_str();
  validate->add_option("-s,--solution", val_sol, "Solution file")->capture_default_str();
  validate->add_option("--mode", val_mode, "Segmentation mode")
      ->check(CLI::IsMember({"sg", "nonsg"}))
      ->capture_default_str();

  // export-lp
  auto* exportlp = app.add_subcommand("export-lp", "Write the MIP in LP format");
  std::string lp_in = "scenario.json";
  std::string lp_out = "export.lp";
  std::string lp_mode = "sg";
  exportlp->add_option("-i,--scenario", lp_in, "Scenario file")->capture_default_str();
  exportlp->add_option("-o,--output", lp_out, "LP file")->capture_default_str();
  exportlp->add_option("--mode", lp_mode, "Segmentation mode")
      ->check(CLI::IsMember({"sg", "nonsg"}))
      ->capture_default_str();

  // bench
  auto* bench = app.add_subcommand("bench", "Run a study and write its report");
  std::string bench_study;
  std::string bench_sizes = "sn1,sn2";
  std::string bench_format = "csv";
  std::string bench_out = "report.csv";
  int bench_repeats = 20;
  double bench_ld = 10.0;
  bool bench_timing = true;
  bench->add_option("--study", bench_study, "comparison | rules | initial | segmentation")
      ->check(CLI::IsMember({"comparison", "rules", "initial", "segmentation"}))
      ->required();
  bench->add_option("--sizes", bench_sizes, "Comma-separated preset labels/indices or NxM")
      ->capture_default_str();
  bench->add_option("--format", bench_format, "Report format")
      ->check(CLI::IsMember({"csv", "json", "plotdata"}))
      ->capture_default_str();
  bench->add_option("-o,--output", bench_out, "Report file")->capture_default_str();
  bench->add_option("--repeats", bench_repeats, "Runs per arm")->capture_default_str();
  bench->add_option("--ld", bench_ld, "Minimum fragment length (s)")->capture_default_str();
  bench->add_flag("--timing,!--no-timing", bench_timing,
                  "Measure wall time (off for byte-reproducible reports)");
  SehaFlags bench_flags;
  bench_flags.attach(bench);
  bench->get_option("--seed")->description("Study seed");
  OracleFlags bench_oracle;
  bench_oracle.attach(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (generate->parsed()) {
      GenParams params;
      params.m = gen_m;
      params.seed = gen_seed;
      params.ld = usec_from_seconds(gen_ld);
      params.exact_n = gen_n;
      if (!gen_preset.empty()) {
        bool found = false;
        for (const ScenarioPreset& p : scenario_presets()) {
          if (gen_preset == p.label) {
            params.m = p.m;
            params.exact_n = p.n;
            found = true;
            break;
          }
        }
        if (!found) throw std::invalid_argument("unknown preset \"" + gen_preset + "\"");
      }
      const Scenario scenario = generate_scenario(params);
      save_scenario(scenario, gen_out);
      std::cout << "generated N=" << scenario.n() << " M=" << scenario.m()
                << " ld=" << format_seconds(scenario.ld) << " -> " << gen_out << "\n";
      return 0;
    }

    if (solve->parsed()) {
      const Scenario scenario = load_scenario(solve_in);
      SehaConfig config;
      if (!solve_config.empty()) config = seha_config_from_json(read_text_file(solve_config));
      config = solve_flags.apply(config);
      const auto [solution, stats] = run_seha(scenario, config);
      save_solution(scenario, solution, solve_out);
      write_text_file(solve_stats, run_stats_to_json(stats));
      std::cout << "objective " << solution.objective << " (construction "
                << stats.initial_objective << "), " << stats.iterations
                << " iterations, terminated by " << stats.terminated_by << " -> " << solve_out
                << "\n";
      std::cerr << "elapsed " << stats.elapsed_s << " s\n";
      return 0;
    }

    if (exact->parsed()) {
      const Scenario scenario = load_scenario(exact_in);
      const OracleResult result =
          exact_solve(scenario, exact_flags.limits(), mode_from_string(exact_mode));
      if (!result.proved) {
        std::cerr << "optimum unproved: search budget exhausted after " << result.nodes
                  << " nodes\n";
        return 2;
      }
      save_solution(scenario, result.solution, exact_out);
      std::cout << "objective " << result.solution.objective << ", proved, nodes " << result.nodes
                << " -> " << exact_out << "\n";
      return 0;
    }

    if (validate->parsed()) {
      const Scenario scenario = load_scenario(val_in);
      const Solution solution = load_solution(val_sol, scenario);
      const auto violations = validate_solution(scenario, solution, mode_from_string(val_mode));
      if (violations.empty()) {
        std::cout << "Ok\n";
        return 0;
      }
      for (const Violation& v : violations) std::cout << describe(v) << "\n";
      return 1;
    }

    if (exportlp->parsed()) {
      const Scenario scenario = load_scenario(lp_in);
      write_text_file(lp_out, export_lp(scenario, mode_from_string(lp_mode)));
      std::cout << "wrote " << lp_out << "\n";
      return 0;
    }

    if (bench->parsed()) {
      StudyOptions options;
      options.repeats = bench_repeats;
      options.seed = bench_flags.seed;
      options.ld = usec_from_seconds(bench_ld);
      options.timing = bench_timing;
      options.seha = bench_flags.apply(SehaConfig{});
      options.limits = bench_oracle.limits();
      const std::vector<StudySize> sizes = parse_sizes(bench_sizes);

      Report report;
      if (bench_study == "comparison") {
        report = run_comparison(sizes, options);
      } else if (bench_study == "segmentation") {
        report = run_segmentation_study(sizes, options);
      } else {
        if (sizes.size() != 1)
          throw std::invalid_argument("study " + bench_study + " takes exactly one size");
        report = bench_study == "rules" ? run_rule_ablation(sizes[0], options)
                                        : run_initial_solution_study(sizes[0], options);
      }
      const ReportFormat format = bench_format == "csv"    ? ReportFormat::Csv
                                  : bench_format == "json" ? ReportFormat::Json
                                                           : ReportFormat::PlotData;
      for (const auto& path : emit_report(report, format, bench_out))
        std::cout << "wrote " << path.string() << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const OracleRefused& e) {
    std::cerr << "exact oracle refused: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
