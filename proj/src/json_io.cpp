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

#include "sdsp/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sdsp/model.hpp"

namespace sdsp {
namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

const json& require_key(const json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

Usec time_field(const json& object, const char* key) {
  const json& value = require_key(object, key);
  if (!value.is_number()) throw ParseError(std::string("key \"") + key + "\" must be a number");
  return usec_from_seconds(value.get<double>());
}

int int_field(const json& object, const char* key) {
  const json& value = require_key(object, key);
  if (!value.is_number_integer())
    throw ParseError(std::string("key \"") + key + "\" must be an integer");
  return value.get<int>();
}

}  // namespace

std::string scenario_to_json(const Scenario& scenario) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"ld\": " << format_seconds(scenario.ld) << ",\n";
  out << "  \"data\": [";
  for (std::size_t i = 0; i < scenario.data.size(); ++i) {
    const ImagingData& t = scenario.data[i];
    out << (i == 0 ? "\n" : ",\n");
    out << "    {\"n\": " << t.n << ", \"p\": " << t.p << ", \"os\": " << format_seconds(t.os)
        << ", \"oe\": " << format_seconds(t.oe) << ", \"d\": " << format_seconds(t.d) << "}";
  }
  out << (scenario.data.empty() ? "],\n" : "\n  ],\n");
  out << "  \"windows\": [";
  for (std::size_t j = 0; j < scenario.windows.size(); ++j) {
    const PlaybackWindow& w = scenario.windows[j];
    out << (j == 0 ? "\n" : ",\n");
    out << "    {\"m\": " << w.m << ", \"ds\": " << format_seconds(w.ds)
        << ", \"de\": " << format_seconds(w.de) << ", \"l\": " << format_seconds(w.l) << "}";
  }
  out << (scenario.windows.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

Scenario scenario_from_json(const std::string& text) {
  const json root = parse_json(text);
  if (!root.is_object()) throw ParseError("scenario JSON must be an object");
  Scenario scenario;
  scenario.ld = time_field(root, "ld");
  const json& data = require_key(root, "data");
  if (!data.is_array()) throw ParseError("key \"data\" must be an array");
  for (const json& item : data) {
    ImagingData t;
    t.n = int_field(item, "n");
    t.p = int_field(item, "p");
    t.os = time_field(item, "os");
    t.oe = time_field(item, "oe");
    t.d = time_field(item, "d");
    scenario.data.push_back(t);
  }
  const json& windows = require_key(root, "windows");
  if (!windows.is_array()) throw ParseError("key \"windows\" must be an array");
  for (const json& item : windows) {
    PlaybackWindow w;
    w.m = int_field(item, "m");
    w.ds = time_field(item, "ds");
    w.de = time_field(item, "de");
    w.l = time_field(item, "l");
    scenario.windows.push_back(w);
  }
  auto problems = scenario_problems(scenario);
  if (!problems.empty()) throw ParseError("scenario invariant broken: " + problems.front());
  return scenario;
}

std::string solution_to_json(const Scenario& scenario, const Solution& solution) {
  const auto tasks = emit_playback_tasks(scenario, solution);  // refuses invalid solutions
  std::ostringstream out;
  out << "{\n";
  out << "  \"objective\": " << solution.objective << ",\n";
  out << "  \"x\": [";
  for (int i = 0; i < solution.x.size(); ++i) out << (i == 0 ? "" : ", ") << solution.x[i];
  out << "],\n";
  out << "  \"assignments\": [";
  bool first = true;
  for (int i = 0; i < solution.y.rows(); ++i) {
    for (int j = 0; j < solution.y.cols(); ++j) {
      if (solution.y(i, j) == 0) continue;
      out << (first ? "\n" : ",\n");
      first = false;
      out << "    {\"i\": " << (i + 1) << ", \"j\": " << (j + 1)
          << ", \"y\": " << format_seconds(solution.y(i, j)) << "}";
    }
  }
  out << (first ? "],\n" : "\n  ],\n");
  out << "  \"tasks\": [";
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    const PlaybackTask& task = tasks[k];
    out << (k == 0 ? "\n" : ",\n");
    out << "    {\"m\": " << task.m << ", \"ts\": " << format_seconds(task.ts)
        << ", \"te\": " << format_seconds(task.te) << ", \"set\": [";
    for (std::size_t f = 0; f < task.set.size(); ++f) {
      out << (f == 0 ? "" : ", ") << "{\"n\": " << task.set[f].n
          << ", \"dur\": " << format_seconds(task.set[f].dur) << "}";
    }
    out << "]}";
  }
  out << (tasks.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

Solution solution_from_json(const std::string& text, const Scenario& scenario) {
  const json root = parse_json(text);
  if (!root.is_object()) throw ParseError("solution JSON must be an object");
  Solution solution = make_empty_solution(scenario);
  const json& objective = require_key(root, "objective");
  if (!objective.is_number_integer()) throw ParseError("key \"objective\" must be an integer");
  solution.objective = objective.get<long long>();
  const json& x = require_key(root, "x");
  if (!x.is_array() || static_cast<int>(x.size()) != scenario.n())
    throw ParseError("key \"x\" must be an array of length N=" + std::to_string(scenario.n()));
  for (int i = 0; i < scenario.n(); ++i) {
    if (!x[i].is_number_integer()) throw ParseError("x entries must be integers");
    solution.x[i] = x[i].get<int>();
  }
  const json& assignments = require_key(root, "assignments");
  if (!assignments.is_array()) throw ParseError("key \"assignments\" must be an array");
  for (const json& item : assignments) {
    const int i = int_field(item, "i");
    const int j = int_field(item, "j");
    if (i < 1 || i > scenario.n() || j < 1 || j > scenario.m())
      throw ParseError("assignment index (" + std::to_string(i) + "," + std::to_string(j) +
                       ") out of range");
    const Usec y = time_field(item, "y");
    solution.y(i - 1, j - 1) = y;
    solution.g(i - 1, j - 1) = y != 0 ? 1 : 0;
    if (y != 0) solution.q[j - 1] = 1;
  }
  return solution;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
  write_text_file(path, scenario_to_json(scenario));
}

Scenario load_scenario(const std::filesystem::path& path) {
  try {
    return scenario_from_json(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_solution(const Scenario& scenario, const Solution& solution,
                   const std::filesystem::path& path) {
  write_text_file(path, solution_to_json(scenario, solution));
}

Solution load_solution(const std::filesystem::path& path, const Scenario& scenario) {
  try {
    return solution_from_json(read_text_file(path), scenario);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace sdsp
