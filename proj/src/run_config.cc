/*
 * Copyright 2026 The judgekit Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "judgekit/run_config.h"

#include <charconv>
#include <fstream>
#include <map>
#include <set>

#include <fmt/format.h>

#include "judgekit/error.h"

namespace judgekit {
namespace {

std::string_view trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  for (;;) {
    const auto pos = s.find(sep);
    parts.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) return parts;
    s.remove_prefix(pos + 1);
  }
}

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ValidationError(fmt::format("{}: '{}' is not a valid number", what, text));
  }
  return value;
}

double parse_double(std::string_view text, std::string_view what) {
  return parse_number<double>(text, what);
}

}  // namespace

std::vector<Metric> parse_metric_list(std::string_view text) {
  std::vector<Metric> metrics;
  for (std::string_view name : split(text, ',')) {
    if (name.empty()) throw ValidationError(fmt::format("empty name in metric list '{}'", text));
    const auto m = parse_metric(name);
    if (!m) throw ValidationError(fmt::format("unknown metric '{}'", name));
    metrics.push_back(*m);
  }
  if (metrics.empty()) throw ValidationError("metric list is empty");
  return metrics;
}

std::vector<GridValue> parse_grid(AblationAxis axis, std::string_view text) {
  std::vector<GridValue> grid;
  for (std::string_view item : split(text, ',')) {
    if (item.empty()) continue;
    const auto parts = split(item, ':');
    if (axis == AblationAxis::kGoldenPrevalence) {
      if (parts.size() != 2) {
        throw ValidationError(fmt::format("grid item '{}' must be a lo:hi range", item));
      }
      grid.emplace_back(PrevalenceRange{parse_double(parts[0], "grid"), parse_double(parts[1], "grid")});
      continue;
    }
    if (parts.size() == 1) {
      grid.emplace_back(parse_number<std::int64_t>(parts[0], "grid"));
    } else if (parts.size() == 3) {
      const auto start = parse_number<std::int64_t>(parts[0], "grid");
      const auto stop = parse_number<std::int64_t>(parts[1], "grid");
      const auto step = parse_number<std::int64_t>(parts[2], "grid");
      if (step <= 0 || stop < start) {
        throw ValidationError(fmt::format("grid triplet '{}' needs start <= stop and step > 0", item));
      }
      for (std::int64_t v = start; v <= stop; v += step) grid.emplace_back(v);
    } else {
      throw ValidationError(
          fmt::format("grid item '{}' must be a count or a start:stop:step triplet", item));
    }
  }
  if (grid.empty()) throw ValidationError("ablation grid is empty");
  // Same checks the simulation applies, surfaced before any work starts.
  for (const GridValue& value : grid) {
    ScenarioConfig probe;
    if (const auto* range = std::get_if<PrevalenceRange>(&value)) {
      probe.golden_prevalence = *range;
    } else if (axis == AblationAxis::kGoldenSize) {
      probe.n_golden = std::get<std::int64_t>(value);
    } else {
      probe.n_eval = std::get<std::int64_t>(value);
    }
    try {
      probe.validate();
    } catch (const ValidationError& e) {
      throw ValidationError(fmt::format("grid value '{}': {}", grid_value_label(value), e.what()));
    }
  }
  return grid;
}

RunConfig parse_run_config(std::istream& in) {
  std::map<std::string, std::pair<std::string, std::size_t>> entries;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    std::string_view view = line;
    view = trim(view.substr(0, view.find('#')));
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError(fmt::format("config line {}: expected key = value", line_no));
    }
    std::string key(trim(view.substr(0, eq)));
    std::string value(trim(view.substr(eq + 1)));
    if (!entries.emplace(key, std::pair{value, line_no}).second) {
      throw ValidationError(fmt::format("config line {}: duplicate key '{}'", line_no, key));
    }
  }

  RunConfig config;
  if (const auto it = entries.find("preset"); it != entries.end()) {
    config.scenario = ScenarioConfig::preset(it->second.first);
    entries.erase(it);
  }
  // The grid is parsed after the axis is known.
  std::optional<std::pair<std::string, std::size_t>> grid_text;
  ScenarioConfig& s = config.scenario;
  for (const auto& [key, entry] : entries) {
    const auto& [value, line_no] = entry;
    const std::string what = fmt::format("config line {} ({})", line_no, key);
    if (key == "n_models") {
      s.n_models = parse_number<std::int64_t>(value, what);
    } else if (key == "n_judges") {
      s.n_judges = parse_number<std::int64_t>(value, what);
    } else if (key == "n_eval") {
      s.n_eval = parse_number<std::int64_t>(value, what);
    } else if (key == "n_golden") {
      s.n_golden = parse_number<std::int64_t>(value, what);
    } else if (key == "n_scenarios") {
      s.n_scenarios = parse_number<std::int64_t>(value, what);
    } else if (key == "seed") {
      s.seed = parse_number<std::uint64_t>(value, what);
    } else if (key == "model_prev_lo") {
      s.model_prevalence.lo = parse_double(value, what);
    } else if (key == "model_prev_hi") {
      s.model_prevalence.hi = parse_double(value, what);
    } else if (key == "golden_prev_lo") {
      s.golden_prevalence.lo = parse_double(value, what);
    } else if (key == "golden_prev_hi") {
      s.golden_prevalence.hi = parse_double(value, what);
    } else if (key == "metrics") {
      s.metrics = parse_metric_list(value);
    } else if (key == "golden_mode") {
      s.golden_mode = parse_golden_mode(value);
    } else if (key == "axis") {
      config.axis = parse_ablation_axis(value);
    } else if (key == "grid") {
      grid_text = entry;
    } else if (key == "threads") {
      config.threads = parse_number<unsigned>(value, what);
    } else if (key == "output") {
      config.output = value;
    } else if (key == "format") {
      config.format = parse_report_format(value);
    } else {
      throw ValidationError(fmt::format("config line {}: unknown key '{}'", line_no, key));
    }
  }
  if (grid_text) {
    if (!config.axis) {
      throw ValidationError(fmt::format("config line {}: grid given without axis", grid_text->second));
    }
    config.grid = parse_grid(*config.axis, grid_text->first);
  }
  config.scenario.validate();
  return config;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(fmt::format("cannot open config '{}'", path));
  try {
    return parse_run_config(in);
  } catch (const ValidationError& e) {
    throw ValidationError(fmt::format("{}: {}", path, e.what()));
  }
}

}  // namespace judgekit
