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

#include "judgekit/report.h"

#include <cmath>

#include <fmt/format.h>

#include "judgekit/error.h"

namespace judgekit {
namespace {

using nlohmann::ordered_json;

// Shortest representation that round-trips.
std::string full(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{}", v);
}

std::string fixed(double v, int decimals) {
  return fmt::format("{:.{}f}", round_display(v, decimals), decimals);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

constexpr std::array<std::string_view, 3> kAgreementNames = {"cohen_kappa", "scott_pi",
                                                             "krippendorff_alpha"};

std::array<const AgreementValue*, 3> agreement_values(const JudgeReport& r) {
  return {&r.cohen_kappa, &r.scott_pi, &r.krippendorff_alpha};
}

void append_judge_rows(std::string& out, const JudgeReport& r, std::string_view selected) {
  const std::string judge = csv_field(r.judge);
  for (Metric m : kAllMetrics) {
    const MetricValue& v = r.metrics.at(m);
    out += fmt::format("{},{},{},{},{}{}\n", judge, metric_name(m), full(v.value), fixed(v.value, 2),
                       v.degenerate ? "true" : "false", selected);
  }
  const auto agreement = agreement_values(r);
  for (std::size_t i = 0; i < agreement.size(); ++i) {
    const AgreementValue& v = *agreement[i];
    out += fmt::format("{},{},{},{},{}{}\n", judge, kAgreementNames[i], full(v.value),
                       fixed(v.value, 2), v.degenerate ? "true" : "false", selected);
  }
  if (r.multiclass) {
    for (const auto& [name, v] :
         {std::pair<std::string_view, const ClassAveragedValue*>{"multiclass_balanced_accuracy",
                                                                 &r.multiclass->balanced_accuracy},
          {"macro_j", &r.multiclass->macro_j}}) {
      out += fmt::format("{},{},{},{},{}{}\n", judge, name, full(v->value), fixed(v->value, 2),
                         v->any_degenerate() ? "true" : "false", selected);
    }
  }
}

ordered_json aggregate_rows(const AggregateResult& result) {
  ordered_json rows = ordered_json::array();
  for (const MetricAggregate& a : result.metrics) {
    ordered_json row;
    row["metric"] = metric_name(a.metric);
    row["success_rate"] = a.success_rate;
    row["avg_rank_gap"] = a.avg_rank_gap;
    row["n_scenarios"] = a.n_scenarios;
    row["flagged_fraction"] = a.flagged_fraction;
    row["conditional_rank_gap"] = a.conditional_rank_gap;
    row["success_rate_display"] = round_display(a.success_rate, 3);
    row["avg_rank_gap_display"] = round_display(a.avg_rank_gap, 3);
    rows.push_back(std::move(row));
  }
  return rows;
}

constexpr std::string_view kAggregateColumns =
    "metric,success_rate,avg_rank_gap,n_scenarios,flagged_fraction,conditional_rank_gap,"
    "success_rate_display,avg_rank_gap_display";

std::string aggregate_csv_row(const MetricAggregate& a) {
  return fmt::format("{},{},{},{},{},{},{},{}", metric_name(a.metric), full(a.success_rate),
                     full(a.avg_rank_gap), a.n_scenarios, full(a.flagged_fraction),
                     full(a.conditional_rank_gap), fixed(a.success_rate, 3),
                     fixed(a.avg_rank_gap, 3));
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  throw ValidationError(fmt::format("unknown output format '{}' (expected json or csv)", name));
}

double round_display(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

JudgeReport make_judge_report(std::string judge, const BinaryConfusion& cm,
                              double zero_division_value) {
  JudgeReport r;
  r.judge = std::move(judge);
  r.confusion = cm;
  r.metrics = binary_metrics(cm, zero_division_value);
  r.cohen_kappa = cohen_kappa(cm);
  r.scott_pi = scott_pi(cm);
  // Alpha is undefined for a single item; report it as degenerate.
  r.krippendorff_alpha = cm.total() >= 2 ? krippendorff_alpha_binary(cm) : AgreementValue{0, true};
  return r;
}

Comparison compare_judges(std::vector<JudgeReport> judges, Metric select_by) {
  if (judges.empty()) throw ValidationError("no judges to compare");
  Comparison c;
  c.select_by = select_by;
  c.judges = std::move(judges);
  for (std::size_t i = 1; i < c.judges.size(); ++i) {
    if (c.judges[i].metrics[select_by] > c.judges[c.selected].metrics[select_by]) c.selected = i;
  }
  return c;
}

ordered_json to_json(const JudgeReport& r) {
  ordered_json j;
  j["judge"] = r.judge;
  const BinaryConfusion& cm = r.confusion;
  j["confusion"] = {{"tp", cm.tp},
                    {"fp", cm.fp},
                    {"tn", cm.tn},
                    {"fn", cm.fn},
                    {"total", cm.total()},
                    {"prevalence", prevalence(cm)}};
  ordered_json metrics;
  ordered_json display;
  ordered_json degenerate = ordered_json::array();
  for (Metric m : kAllMetrics) {
    const MetricValue& v = r.metrics.at(m);
    metrics[std::string(metric_name(m))] = v.value;
    display[std::string(metric_name(m))] = round_display(v.value, 2);
    if (v.degenerate) degenerate.push_back(metric_name(m));
  }
  const auto agreement = agreement_values(r);
  ordered_json agree;
  for (std::size_t i = 0; i < agreement.size(); ++i) {
    agree[std::string(kAgreementNames[i])] = agreement[i]->value;
    display[std::string(kAgreementNames[i])] = round_display(agreement[i]->value, 2);
    if (agreement[i]->degenerate) degenerate.push_back(kAgreementNames[i]);
  }
  j["metrics"] = std::move(metrics);
  j["agreement"] = std::move(agree);
  j["display"] = std::move(display);
  j["degenerate"] = std::move(degenerate);
  if (r.multiclass) {
    const MulticlassSummary& mc = *r.multiclass;
    auto flags = [&](const ClassAveragedValue& v) {
      ordered_json out = ordered_json::array();
      for (std::size_t i = 0; i < v.degenerate.size(); ++i) {
        if (v.degenerate[i]) out.push_back(mc.labels[i]);
      }
      return out;
    };
    j["multiclass"] = {{"labels", mc.labels},
                       {"balanced_accuracy", mc.balanced_accuracy.value},
                       {"macro_j", mc.macro_j.value},
                       {"degenerate_classes", flags(mc.balanced_accuracy)},
                       {"degenerate_one_vs_rest", flags(mc.macro_j)}};
  }
  return j;
}

ordered_json to_json(const Comparison& c) {
  ordered_json j;
  j["select_by"] = metric_name(c.select_by);
  j["selected"] = c.judges[c.selected].judge;
  j["selected_index"] = c.selected;
  ordered_json judges = ordered_json::array();
  for (const JudgeReport& r : c.judges) judges.push_back(to_json(r));
  j["judges"] = std::move(judges);
  return j;
}

ordered_json to_json(const ScenarioConfig& config) {
  ordered_json j;
  j["n_models"] = config.n_models;
  j["n_judges"] = config.n_judges;
  j["n_eval"] = config.n_eval;
  j["n_golden"] = config.n_golden;
  j["model_prevalence"] = {config.model_prevalence.lo, config.model_prevalence.hi};
  j["golden_prevalence"] = {config.golden_prevalence.lo, config.golden_prevalence.hi};
  ordered_json metrics = ordered_json::array();
  for (Metric m : config.metrics) metrics.push_back(metric_name(m));
  j["metrics"] = std::move(metrics);
  j["n_scenarios"] = config.n_scenarios;
  j["seed"] = config.seed;
  j["golden_mode"] = golden_mode_name(config.golden_mode);
  return j;
}

ordered_json to_json(const AggregateResult& result, const ScenarioConfig* config) {
  ordered_json j;
  if (config != nullptr) j["config"] = to_json(*config);
  j["results"] = aggregate_rows(result);
  return j;
}

ordered_json to_json(const AblationTable& table, const ScenarioConfig* base) {
  ordered_json j;
  if (base != nullptr) j["base_config"] = to_json(*base);
  j["axis"] = ablation_axis_name(table.axis);
  ordered_json rows = ordered_json::array();
  for (const AblationRow& row : table.rows) {
    rows.push_back({{"axis_value", grid_value_label(row.value)},
                    {"results", aggregate_rows(row.result)}});
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string emit_report(const JudgeReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) return dump(to_json(report));
  std::string out = "judge,metric,value,display,degenerate\n";
  append_judge_rows(out, report, "");
  return out;
}

std::string emit_report(const Comparison& comparison, ReportFormat format) {
  if (format == ReportFormat::kJson) return dump(to_json(comparison));
  std::string out = "judge,metric,value,display,degenerate,selected\n";
  for (std::size_t i = 0; i < comparison.judges.size(); ++i) {
    append_judge_rows(out, comparison.judges[i], i == comparison.selected ? ",true" : ",false");
  }
  return out;
}

std::string emit_report(const AggregateResult& result, ReportFormat format,
                        const ScenarioConfig* config) {
  if (format == ReportFormat::kJson) return dump(to_json(result, config));
  std::string out = fmt::format("{}\n", kAggregateColumns);
  for (const MetricAggregate& a : result.metrics) out += aggregate_csv_row(a) + "\n";
  return out;
}

std::string emit_report(const AblationTable& table, ReportFormat format,
                        const ScenarioConfig* base) {
  if (format == ReportFormat::kJson) return dump(to_json(table, base));
  std::string out = fmt::format("axis,axis_value,{}\n", kAggregateColumns);
  for (const AblationRow& row : table.rows) {
    for (const MetricAggregate& a : row.result.metrics) {
      out += fmt::format("{},{},{}\n", ablation_axis_name(table.axis), grid_value_label(row.value),
                         aggregate_csv_row(a));
    }
  }
  return out;
}

std::string emit_roc_summary(const RocCurve& curve) {
  const YoudenPoint best = youden_optimal_threshold(curve);
  ordered_json j;
  j["positives"] = curve.positives;
  j["negatives"] = curve.negatives;
  j["points"] = curve.points.size();
  j["auc"] = roc_auc(curve);
  ordered_json youden;
  // JSON has no infinity; the all-negative threshold is written as null.
  youden["threshold"] = std::isinf(best.threshold) ? ordered_json(nullptr) : ordered_json(best.threshold);
  youden["j"] = best.j;
  youden["tpr"] = best.tpr;
  youden["fpr"] = best.fpr;
  j["youden_optimal"] = std::move(youden);
  return dump(j);
}

std::string emit_roc_curve_csv(const RocCurve& curve) {
  std::string out = "fpr,tpr,threshold\n";
  for (const RocPoint& p : curve.points) {
    out += fmt::format("{},{},{}\n", full(p.fpr), full(p.tpr), full(p.threshold));
  }
  return out;
}

}  // namespace judgekit
