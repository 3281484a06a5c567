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

// judgekit command-line interface.
//
//   judgekit metrics  --input golden.jsonl --positive-label violation
//   judgekit compare  --inputs a.jsonl,b.jsonl --positive-label violation
//   judgekit roc      --input scored.jsonl --positive-label violation
//   judgekit simulate --preset compact --scenarios 100000 --seed 7
//   judgekit ablate   --axis golden-size --grid 25,200,2000
//
// Exit codes: 0 success, 1 validation error, 2 runtime error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "judgekit/error.h"
#include "judgekit/golden_io.h"
#include "judgekit/report.h"
#include "judgekit/run_config.h"
#include "judgekit/simulation.h"

namespace {

using namespace judgekit;

constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

struct OutputOptions {
  std::string output;
  bool json = false;
  bool csv = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--output,-o", out.output, "Write to this file instead of stdout");
  auto* json = cmd->add_flag("--json", out.json, "Emit JSON");
  cmd->add_flag("--csv", out.csv, "Emit CSV")->excludes(json);
}

ReportFormat resolve_format(const OutputOptions& out, ReportFormat fallback) {
  if (out.json) return ReportFormat::kJson;
  if (out.csv) return ReportFormat::kCsv;
  return fallback;
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw RuntimeError(fmt::format("cannot write '{}'", path));
  file << bytes;
  if (!file) throw RuntimeError(fmt::format("error writing '{}'", path));
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string item;
  for (char c : text) {
    if (c == ',') {
      if (!item.empty()) items.push_back(item);
      item.clear();
    } else {
      item += c;
    }
  }
  if (!item.empty()) items.push_back(item);
  return items;
}

// ---------------------------------------------------------------------------
// Golden-set commands

struct GoldenOptions {
  std::string format;  // empty = infer from extension
  std::string positive_label;
  std::string labels;
  double zero_division = 0.0;
};

void add_golden_flags(CLI::App* cmd, GoldenOptions& g) {
  cmd->add_option("--format", g.format, "Input format: jsonl or csv (default: from extension)");
  cmd->add_option("--positive-label", g.positive_label, "Label of the positive class")->required();
  cmd->add_option("--labels", g.labels, "Comma-separated label set; other labels are rejected");
  cmd->add_option("--zero-division", g.zero_division,
                  "Value for metrics with a zero denominator")
      ->check(CLI::Range(0.0, 1.0));
}

std::vector<GoldenRecord> read_records(const std::string& path, const GoldenOptions& g) {
  const InputFormat format = g.format.empty() ? infer_input_format(path) : parse_input_format(g.format);
  return load_golden(path, format, split_list(g.labels), g.positive_label);
}

JudgeReport report_for(const std::string& name, const std::vector<GoldenRecord>& records,
                       const GoldenOptions& g) {
  JudgeReport report =
      make_judge_report(name, confusion_from_records(records, g.positive_label), g.zero_division);
  const auto labels = collect_labels(records, split_list(g.labels));
  if (labels.size() > 2) {
    const MulticlassConfusion mc = multiclass_from_records(records, labels);
    report.multiclass = MulticlassSummary{labels, multiclass_balanced_accuracy(mc, g.zero_division),
                                          macro_j(mc, OneVsRest::kClassBalanced, g.zero_division)};
  }
  return report;
}

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

// ---------------------------------------------------------------------------
// Simulation commands

struct ScenarioFlags {
  std::string config;
  std::string preset;
  std::optional<std::int64_t> scenarios, judges, models, eval_samples, golden_size;
  std::optional<double> golden_lo, golden_hi, model_lo, model_hi;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> metrics, golden_mode;
  std::optional<unsigned> threads;
};

void add_scenario_flags(CLI::App* cmd, ScenarioFlags& f) {
  cmd->add_option("--config", f.config, "Flat key = value run configuration");
  cmd->add_option("--preset", f.preset, "standard (n_eval=n_golden=2000) or compact (200/800)");
  cmd->add_option("--scenarios", f.scenarios, "Number of Monte-Carlo scenarios");
  cmd->add_option("--judges", f.judges, "Candidate judges per scenario");
  cmd->add_option("--models", f.models, "Assistant models per scenario");
  cmd->add_option("--eval-samples", f.eval_samples, "Judged samples per model");
  cmd->add_option("--golden-size", f.golden_size, "Golden-set size");
  cmd->add_option("--golden-prev-lo", f.golden_lo, "Golden prevalence lower bound");
  cmd->add_option("--golden-prev-hi", f.golden_hi, "Golden prevalence upper bound");
  cmd->add_option("--model-prev-lo", f.model_lo, "Model prevalence lower bound");
  cmd->add_option("--model-prev-hi", f.model_hi, "Model prevalence upper bound");
  cmd->add_option("--metrics", f.metrics, "Comma-separated selection metrics");
  cmd->add_option("--golden-mode", f.golden_mode, "per_judge or shared golden sets");
  cmd->add_option("--seed", f.seed, "Master seed");
  cmd->add_option("--threads", f.threads, "Worker threads (0 = all cores)");
}

RunConfig resolve_run_config(const ScenarioFlags& f) {
  RunConfig run;
  if (!f.config.empty()) run = load_run_config(f.config);
  if (!f.preset.empty()) {
    if (!f.config.empty()) throw ValidationError("--preset and --config are mutually exclusive");
    run.scenario = ScenarioConfig::preset(f.preset);
  }
  ScenarioConfig& s = run.scenario;
  if (f.scenarios) s.n_scenarios = *f.scenarios;
  if (f.judges) s.n_judges = *f.judges;
  if (f.models) s.n_models = *f.models;
  if (f.eval_samples) s.n_eval = *f.eval_samples;
  if (f.golden_size) s.n_golden = *f.golden_size;
  if (f.golden_lo) s.golden_prevalence.lo = *f.golden_lo;
  if (f.golden_hi) s.golden_prevalence.hi = *f.golden_hi;
  if (f.model_lo) s.model_prevalence.lo = *f.model_lo;
  if (f.model_hi) s.model_prevalence.hi = *f.model_hi;
  if (f.seed) s.seed = *f.seed;
  if (f.metrics) s.metrics = parse_metric_list(*f.metrics);
  if (f.golden_mode) s.golden_mode = parse_golden_mode(*f.golden_mode);
  if (f.threads) run.threads = *f.threads;
  s.validate();
  return run;
}

ReportFormat run_format(const OutputOptions& out, const RunConfig& run) {
  return resolve_format(out, run.format);
}

std::string run_output(const OutputOptions& out, const RunConfig& run) {
  return out.output.empty() ? run.output : out.output;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Judge evaluation metrics, ROC analysis and judge-selection simulation"};
  app.require_subcommand(1);

  // metrics
  auto* metrics_cmd = app.add_subcommand("metrics", "Metric report for one judge's golden set");
  std::string metrics_input;
  GoldenOptions metrics_golden;
  OutputOptions metrics_out;
  metrics_cmd->add_option("--input,-i", metrics_input, "Golden-set file")->required();
  add_golden_flags(metrics_cmd, metrics_golden);
  add_output_flags(metrics_cmd, metrics_out);

  // compare
  auto* compare_cmd = app.add_subcommand("compare", "Compare judges labelled on the same items");
  std::string compare_inputs;
  std::string compare_names;
  std::string select_by = "balanced_accuracy";
  GoldenOptions compare_golden;
  OutputOptions compare_out;
  compare_cmd->add_option("--inputs", compare_inputs, "Comma-separated files, one per judge")
      ->required();
  compare_cmd->add_option("--names", compare_names, "Comma-separated judge names");
  compare_cmd->add_option("--select-by", select_by, "Selection metric");
  add_golden_flags(compare_cmd, compare_golden);
  add_output_flags(compare_cmd, compare_out);

  // roc
  auto* roc_cmd = app.add_subcommand("roc", "ROC curve, AUC and Youden-optimal threshold");
  std::string roc_input;
  std::string roc_format;
  std::string roc_positive;
  std::string roc_output;
  roc_cmd->add_option("--input,-i", roc_input, "Scored golden-set file")->required();
  roc_cmd->add_option("--format", roc_format, "Input format: jsonl or csv");
  roc_cmd->add_option("--positive-label", roc_positive, "Label of the positive class")->required();
  roc_cmd->add_option("--output,-o", roc_output, "Write curve points (CSV) to this file");

  // simulate
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte-Carlo judge-selection study");
  ScenarioFlags simulate_flags;
  OutputOptions simulate_out;
  add_scenario_flags(simulate_cmd, simulate_flags);
  add_output_flags(simulate_cmd, simulate_out);

  // ablate
  auto* ablate_cmd = app.add_subcommand("ablate", "Sweep one simulation parameter");
  ScenarioFlags ablate_flags;
  OutputOptions ablate_out;
  std::string axis_name;
  std::string grid_text;
  add_scenario_flags(ablate_cmd, ablate_flags);
  add_output_flags(ablate_cmd, ablate_out);
  ablate_cmd->add_option("--axis", axis_name, "golden-prevalence, golden-size or eval-size");
  ablate_cmd->add_option("--grid", grid_text, "Comma list of values, lo:hi ranges or start:stop:step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*metrics_cmd) {
      const auto records = read_records(metrics_input, metrics_golden);
      const JudgeReport report = report_for(stem(metrics_input), records, metrics_golden);
      write_output(metrics_out.output,
                   emit_report(report, resolve_format(metrics_out, ReportFormat::kJson)));
    } else if (*compare_cmd) {
      const auto inputs = split_list(compare_inputs);
      if (inputs.empty()) throw ValidationError("--inputs lists no files");
      auto names = split_list(compare_names);
      if (names.empty()) {
        for (const auto& path : inputs) names.push_back(stem(path));
      } else if (names.size() != inputs.size()) {
        throw ValidationError("--names must list one name per input");
      }
      const auto metric = parse_metric(select_by);
      if (!metric) throw ValidationError(fmt::format("unknown metric '{}'", select_by));
      std::vector<std::vector<GoldenRecord>> per_judge;
      for (const auto& path : inputs) per_judge.push_back(read_records(path, compare_golden));
      check_same_items(per_judge, names);
      std::vector<JudgeReport> reports;
      for (std::size_t i = 0; i < inputs.size(); ++i) {
        reports.push_back(report_for(names[i], per_judge[i], compare_golden));
      }
      const Comparison comparison = compare_judges(std::move(reports), *metric);
      write_output(compare_out.output,
                   emit_report(comparison, resolve_format(compare_out, ReportFormat::kJson)));
    } else if (*roc_cmd) {
      const InputFormat format =
          roc_format.empty() ? infer_input_format(roc_input) : parse_input_format(roc_format);
      const auto records = load_golden(roc_input, format);
      const auto samples = scored_samples_from_records(records, roc_positive);
      const RocCurve curve = roc_curve(samples);
      if (!roc_output.empty()) write_output(roc_output, emit_roc_curve_csv(curve));
      write_output("", emit_roc_summary(curve));
    } else if (*simulate_cmd) {
      const RunConfig run = resolve_run_config(simulate_flags);
      const AggregateResult result = run_simulation(run.scenario, {run.threads});
      write_output(run_output(simulate_out, run),
                   emit_report(result, run_format(simulate_out, run), &run.scenario));
    } else if (*ablate_cmd) {
      RunConfig run = resolve_run_config(ablate_flags);
      if (!axis_name.empty()) {
        run.axis = parse_ablation_axis(axis_name);
        if (grid_text.empty() && !run.grid.empty()) {
          throw ValidationError("--axis given without --grid");
        }
      }
      if (!run.axis) throw ValidationError("ablate needs --axis (or axis in the config)");
      if (!grid_text.empty()) run.grid = parse_grid(*run.axis, grid_text);
      if (run.grid.empty()) throw ValidationError("ablate needs --grid (or grid in the config)");
      const AblationTable table = run_ablation(run.scenario, *run.axis, run.grid, {run.threads});
      write_output(run_output(ablate_out, run),
                   emit_report(table, run_format(ablate_out, run), &run.scenario));
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
