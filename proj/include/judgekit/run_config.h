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

// Run configuration for the simulate and ablate commands.
//
// The config file is a flat list of `key = value` lines; `#` starts a
// comment. Recognized keys:
//
//   preset            standard | compact (applied before every other key)
//   n_models n_judges n_eval n_golden n_scenarios seed
//   model_prev_lo model_prev_hi golden_prev_lo golden_prev_hi
//   metrics           comma-separated metric names
//   golden_mode       per_judge | shared
//   axis grid         ablation axis and grid (see parse_grid)
//   threads output format
//
// Unknown or repeated keys are errors.

#ifndef JUDGEKIT_RUN_CONFIG_H_
#define JUDGEKIT_RUN_CONFIG_H_

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "judgekit/report.h"
#include "judgekit/simulation.h"

namespace judgekit {

struct RunConfig {
  ScenarioConfig scenario;
  std::optional<AblationAxis> axis;
  std::vector<GridValue> grid;
  unsigned threads = 0;
  std::string output;  // empty = stdout
  ReportFormat format = ReportFormat::kCsv;
};

RunConfig parse_run_config(std::istream& in);
RunConfig load_run_config(const std::string& path);

// Comma-separated metric names.
std::vector<Metric> parse_metric_list(std::string_view text);

// Grid syntax depends on the axis:
//   golden-prevalence: comma list of lo:hi ranges, e.g. "0.3:0.7,0.05:0.2"
//   golden-size, eval-size: comma list of counts or start:stop:step
//   triplets (stop inclusive), e.g. "25,200,1000:5000:2000"
std::vector<GridValue> parse_grid(AblationAxis axis, std::string_view text);

}  // namespace judgekit

#endif  // JUDGEKIT_RUN_CONFIG_H_
