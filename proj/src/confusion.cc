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

#include "judgekit/confusion.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include <fmt/format.h>

#include "judgekit/error.h"

namespace judgekit {
namespace {

constexpr std::array<std::string_view, kNumMetrics> kMetricNames = {
    "sensitivity", "specificity", "precision", "npv", "accuracy",
    "f1",          "macro_f1",    "youden_j",  "balanced_accuracy",
};

void check_rate(double value, const char* what) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ValidationError(fmt::format("{} must lie in [0, 1], got {}", what, value));
  }
}

void check_counts(const ScaledConfusion& cm) {
  if (!(cm.tp >= 0 && cm.fp >= 0 && cm.tn >= 0 && cm.fn >= 0) ||
      !std::isfinite(cm.total())) {
    throw ValidationError("confusion counts must be finite and non-negative");
  }
  if (cm.total() == 0) throw ValidationError("empty confusion matrix");
}

MetricValue ratio(double num, double den, double zero_division_value) {
  if (den == 0) return {zero_division_value, true};
  return {num / den, false};
}

}  // namespace

ScaledConfusion to_scaled(const BinaryConfusion& cm) {
  return {static_cast<double>(cm.tp), static_cast<double>(cm.fp),
          static_cast<double>(cm.tn), static_cast<double>(cm.fn)};
}

double prevalence(const ScaledConfusion& cm) {
  check_counts(cm);
  return cm.positives() / cm.total();
}

std::string_view metric_name(Metric m) { return kMetricNames[static_cast<std::size_t>(m)]; }

std::optional<Metric> parse_metric(std::string_view name) {
  for (Metric m : kAllMetrics) {
    if (metric_name(m) == name) return m;
  }
  if (name == "recall" || name == "tpr") return Metric::kSensitivity;
  if (name == "tnr") return Metric::kSpecificity;
  if (name == "j") return Metric::kYoudenJ;
  if (name == "ba") return Metric::kBalancedAccuracy;
  return std::nullopt;
}

bool MetricReport::any_degenerate() const {
  return std::any_of(values_.begin(), values_.end(),
                     [](const MetricValue& v) { return v.degenerate; });
}

MetricReport binary_metrics(const ScaledConfusion& cm, double zero_division_value) {
  check_counts(cm);
  check_rate(zero_division_value, "zero_division_value");
  const double z = zero_division_value;

  MetricReport r;
  const MetricValue sens = ratio(cm.tp, cm.tp + cm.fn, z);
  const MetricValue spec = ratio(cm.tn, cm.tn + cm.fp, z);
  r.at(Metric::kSensitivity) = sens;
  r.at(Metric::kSpecificity) = spec;
  r.at(Metric::kPrecision) = ratio(cm.tp, cm.tp + cm.fp, z);
  r.at(Metric::kNpv) = ratio(cm.tn, cm.tn + cm.fn, z);
  r.at(Metric::kAccuracy) = ratio(cm.tp + cm.tn, cm.total(), z);

  const MetricValue f1_pos = ratio(2 * cm.tp, 2 * cm.tp + cm.fp + cm.fn, z);
  const MetricValue f1_neg = ratio(2 * cm.tn, 2 * cm.tn + cm.fp + cm.fn, z);
  r.at(Metric::kF1) = f1_pos;
  r.at(Metric::kMacroF1) = {(f1_pos.value + f1_neg.value) / 2,
                            f1_pos.degenerate || f1_neg.degenerate};

  const bool rates_degenerate = sens.degenerate || spec.degenerate;
  r.at(Metric::kYoudenJ) = {sens.value + spec.value - 1, rates_degenerate};
  r.at(Metric::kBalancedAccuracy) = {(sens.value + spec.value) / 2, rates_degenerate};
  return r;
}

MetricReport binary_metrics(const BinaryConfusion& cm, double zero_division_value) {
  if (cm.tp < 0 || cm.fp < 0 || cm.tn < 0 || cm.fn < 0) {
    throw ValidationError("confusion counts must be non-negative");
  }
  return binary_metrics(to_scaled(cm), zero_division_value);
}

double youden_j_from_rates(double tpr, double fpr) {
  check_rate(tpr, "tpr");
  check_rate(fpr, "fpr");
  return tpr - fpr;
}

double balanced_accuracy_from_j(double j) {
  if (!(j >= -1.0 && j <= 1.0)) {
    throw ValidationError(fmt::format("Youden's J must lie in [-1, 1], got {}", j));
  }
  return (j + 1) / 2;
}

double j_from_balanced_accuracy(double ba) {
  check_rate(ba, "balanced accuracy");
  return 2 * ba - 1;
}

ScaledConfusion rescale_to_prevalence(const ScaledConfusion& cm, double target_prevalence) {
  check_counts(cm);
  if (!(target_prevalence > 0.0 && target_prevalence < 1.0)) {
    throw ValidationError(
        fmt::format("target prevalence must lie in (0, 1), got {}", target_prevalence));
  }
  if (cm.positives() == 0 || cm.negatives() == 0) {
    throw ValidationError("cannot rescale degenerate class");
  }
  const double total = cm.total();
  const double pos_scale = target_prevalence * total / cm.positives();
  const double neg_scale = (1 - target_prevalence) * total / cm.negatives();
  return {.tp = cm.tp * pos_scale,
          .fp = cm.fp * neg_scale,
          .tn = cm.tn * neg_scale,
          .fn = cm.fn * pos_scale};
}

ScaledConfusion rescale_to_prevalence(const BinaryConfusion& cm, double target_prevalence) {
  return rescale_to_prevalence(to_scaled(cm), target_prevalence);
}

// ---------------------------------------------------------------------------
// Multiclass

MulticlassConfusion::MulticlassConfusion(std::vector<std::string> labels,
                                         std::vector<std::int64_t> counts)
    : labels_(std::move(labels)), counts_(std::move(counts)) {
  if (labels_.empty()) {
    const auto n = static_cast<std::size_t>(std::llround(std::sqrt(counts_.size())));
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  }
  const std::size_t n = labels_.size();
  if (n < 2) throw ValidationError("multiclass confusion needs at least 2 classes");
  if (counts_.size() != n * n) {
    throw ValidationError(
        fmt::format("multiclass confusion must be square: {} labels, {} cells", n, counts_.size()));
  }
  if (std::any_of(counts_.begin(), counts_.end(), [](std::int64_t c) { return c < 0; })) {
    throw ValidationError("confusion counts must be non-negative");
  }
}

MulticlassConfusion MulticlassConfusion::from_rows(
    const std::vector<std::vector<std::int64_t>>& rows, std::vector<std::string> labels) {
  std::vector<std::int64_t> flat;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw ValidationError("multiclass confusion must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < rows.size(); ++i) labels.push_back(std::to_string(i));
  }
  return MulticlassConfusion(std::move(labels), std::move(flat));
}

std::int64_t MulticlassConfusion::row_total(std::size_t truth) const {
  const auto begin = counts_.begin() + static_cast<std::ptrdiff_t>(truth * num_classes());
  return std::accumulate(begin, begin + static_cast<std::ptrdiff_t>(num_classes()),
                         std::int64_t{0});
}

std::int64_t MulticlassConfusion::column_total(std::size_t predicted) const {
  std::int64_t sum = 0;
  for (std::size_t t = 0; t < num_classes(); ++t) sum += count(t, predicted);
  return sum;
}

std::int64_t MulticlassConfusion::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

BinaryConfusion MulticlassConfusion::one_vs_rest(std::size_t cls) const {
  BinaryConfusion cm;
  cm.tp = count(cls, cls);
  cm.fn = row_total(cls) - cm.tp;
  cm.fp = column_total(cls) - cm.tp;
  cm.tn = total() - cm.tp - cm.fn - cm.fp;
  return cm;
}

bool ClassAveragedValue::any_degenerate() const {
  return std::find(degenerate.begin(), degenerate.end(), true) != degenerate.end();
}

ClassAveragedValue multiclass_balanced_accuracy(const MulticlassConfusion& mc,
                                                double zero_division_value) {
  check_rate(zero_division_value, "zero_division_value");
  const std::size_t n = mc.num_classes();
  ClassAveragedValue out;
  out.degenerate.resize(n);
  double sum = 0;
  std::size_t empty_rows = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const MetricValue recall = ratio(static_cast<double>(mc.count(i, i)),
                                     static_cast<double>(mc.row_total(i)), zero_division_value);
    sum += recall.value;
    out.degenerate[i] = recall.degenerate;
    if (recall.degenerate) ++empty_rows;
  }
  if (empty_rows == n) throw ValidationError("empty confusion matrix");
  out.value = sum / static_cast<double>(n);
  return out;
}

ClassAveragedValue macro_j(const MulticlassConfusion& mc, OneVsRest mode,
                           double zero_division_value) {
  check_rate(zero_division_value, "zero_division_value");
  const std::size_t n = mc.num_classes();
  if (mc.total() == 0) throw ValidationError("empty confusion matrix");

  ClassAveragedValue out;
  out.degenerate.resize(n);
  double sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const MetricValue tpr = ratio(static_cast<double>(mc.count(i, i)),
                                  static_cast<double>(mc.row_total(i)), zero_division_value);
    MetricValue fpr;
    if (mode == OneVsRest::kPooled) {
      const std::int64_t negatives = mc.total() - mc.row_total(i);
      fpr = ratio(static_cast<double>(mc.column_total(i) - mc.count(i, i)),
                  static_cast<double>(negatives), zero_division_value);
    } else {
      double rate_sum = 0;
      bool any_empty = false;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i) continue;
        const std::int64_t row = mc.row_total(k);
        if (row == 0) {
          any_empty = true;
          rate_sum += zero_division_value;
        } else {
          rate_sum += static_cast<double>(mc.count(k, i)) / static_cast<double>(row);
        }
      }
      fpr = {rate_sum / static_cast<double>(n - 1), any_empty};
    }
    sum += tpr.value - fpr.value;
    out.degenerate[i] = tpr.degenerate || fpr.degenerate;
  }
  out.value = sum / static_cast<double>(n);
  return out;
}

}  // namespace judgekit
