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

// Report assembly and serialization.
//
// Every emitter has a stable field order. Values are written at full
// (round-trip) precision next to a rounded display column: 2 decimals for
// judge metrics, 3 for simulation aggregates.

#ifndef JUDGEKIT_REPORT_H_
#define JUDGEKIT_REPORT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "judgekit/agreement.h"
#include "judgekit/confusion.h"
#include "judgekit/roc.h"
#include "judgekit/simulation.h"

namespace judgekit {

enum class ReportFormat { kJson, kCsv };

ReportFormat parse_report_format(std::string_view name);

// Half-away-from-zero rounding to `decimals` places.
double round_display(double value, int decimals);

struct MulticlassSummary {
  std::vector<std::string> labels;
  ClassAveragedValue balanced_accuracy;
  ClassAveragedValue macro_j;
};

struct JudgeReport {
  std::string judge;
  BinaryConfusion confusion;
  MetricReport metrics;
  AgreementValue cohen_kappa;
  AgreementValue scott_pi;
  AgreementValue krippendorff_alpha;
  std::optional<MulticlassSummary> multiclass;
};

JudgeReport make_judge_report(std::string judge, const BinaryConfusion& cm,
                              double zero_division_value = 0.0);

struct Comparison {
  Metric select_by = Metric::kBalancedAccuracy;
  std::size_t selected = 0;
  std::vector<JudgeReport> judges;
};

// Builds reports for every judge and selects one by `select_by`; ties go to
// the first judge.
Comparison compare_judges(std::vector<JudgeReport> judges, Metric select_by);

nlohmann::ordered_json to_json(const JudgeReport& report);
nlohmann::ordered_json to_json(const Comparison& comparison);
nlohmann::ordered_json to_json(const ScenarioConfig& config);
nlohmann::ordered_json to_json(const AggregateResult& result,
                               const ScenarioConfig* config = nullptr);
nlohmann::ordered_json to_json(const AblationTable& table, const ScenarioConfig* base = nullptr);

std::string emit_report(const JudgeReport& report, ReportFormat format);
std::string emit_report(const Comparison& comparison, ReportFormat format);
std::string emit_report(const AggregateResult& result, ReportFormat format,
                        const ScenarioConfig* config = nullptr);
std::string emit_report(const AblationTable& table, ReportFormat format,
                        const ScenarioConfig* base = nullptr);

// ROC summary as JSON (AUC and the Youden-optimal point) and the curve as CSV
// with columns fpr,tpr,threshold.
std::string emit_roc_summary(const RocCurve& curve);
std::string emit_roc_curve_csv(const RocCurve& curve);

}  // namespace judgekit

#endif  // JUDGEKIT_REPORT_H_
