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

// Binary and multiclass confusion matrices and the scalar metrics computed
// from them.
//
// All metric functions are pure. A metric whose denominator is zero takes the
// caller's `zero_division_value` and is flagged `degenerate` in the result.

#ifndef JUDGEKIT_CONFUSION_H_
#define JUDGEKIT_CONFUSION_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace judgekit {

template <typename T>
struct BasicBinaryConfusion {
  T tp{};
  T fp{};
  T tn{};
  T fn{};

  constexpr T positives() const { return tp + fn; }
  constexpr T negatives() const { return fp + tn; }
  constexpr T total() const { return tp + fp + tn + fn; }

  friend constexpr bool operator==(const BasicBinaryConfusion&,
                                   const BasicBinaryConfusion&) = default;
};

// Integer counts, as read from a golden set.
using BinaryConfusion = BasicBinaryConfusion<std::int64_t>;
// Real-valued counts, produced by rescaling.
using ScaledConfusion = BasicBinaryConfusion<double>;

ScaledConfusion to_scaled(const BinaryConfusion& cm);

// Fraction of gold positives. Throws ValidationError on an empty matrix.
double prevalence(const ScaledConfusion& cm);
inline double prevalence(const BinaryConfusion& cm) { return prevalence(to_scaled(cm)); }

// Exchanges the roles of the two classes.
template <typename T>
constexpr BasicBinaryConfusion<T> swap_labels(const BasicBinaryConfusion<T>& cm) {
  return {.tp = cm.tn, .fp = cm.fn, .tn = cm.tp, .fn = cm.fp};
}

enum class Metric : std::size_t {
  kSensitivity = 0,
  kSpecificity,
  kPrecision,
  kNpv,
  kAccuracy,
  kF1,
  kMacroF1,
  kYoudenJ,
  kBalancedAccuracy,
};

inline constexpr std::size_t kNumMetrics = 9;

inline constexpr std::array<Metric, kNumMetrics> kAllMetrics = {
    Metric::kSensitivity, Metric::kSpecificity, Metric::kPrecision,
    Metric::kNpv,         Metric::kAccuracy,    Metric::kF1,
    Metric::kMacroF1,     Metric::kYoudenJ,     Metric::kBalancedAccuracy,
};

// Canonical snake_case name, e.g. "balanced_accuracy".
std::string_view metric_name(Metric m);
// Accepts canonical names plus the aliases "recall", "tpr", "tnr", "j",
// "ba". Returns nullopt for anything else.
std::optional<Metric> parse_metric(std::string_view name);

struct MetricValue {
  double value = 0.0;
  bool degenerate = false;
};

class MetricReport {
 public:
  MetricReport() = default;

  const MetricValue& at(Metric m) const { return values_[static_cast<std::size_t>(m)]; }
  MetricValue& at(Metric m) { return values_[static_cast<std::size_t>(m)]; }
  double operator[](Metric m) const { return at(m).value; }

  double sensitivity() const { return (*this)[Metric::kSensitivity]; }
  double specificity() const { return (*this)[Metric::kSpecificity]; }
  double precision() const { return (*this)[Metric::kPrecision]; }
  double npv() const { return (*this)[Metric::kNpv]; }
  double accuracy() const { return (*this)[Metric::kAccuracy]; }
  double f1() const { return (*this)[Metric::kF1]; }
  double macro_f1() const { return (*this)[Metric::kMacroF1]; }
  double youden_j() const { return (*this)[Metric::kYoudenJ]; }
  double balanced_accuracy() const { return (*this)[Metric::kBalancedAccuracy]; }

  bool any_degenerate() const;

 private:
  std::array<MetricValue, kNumMetrics> values_{};
};

// Computes the nine binary metrics. Throws ValidationError("empty confusion
// matrix") when total is 0, and on negative counts or a zero_division_value
// outside [0, 1].
MetricReport binary_metrics(const ScaledConfusion& cm, double zero_division_value = 0.0);
MetricReport binary_metrics(const BinaryConfusion& cm, double zero_division_value = 0.0);

// J = TPR - FPR. Both rates must lie in [0, 1].
double youden_j_from_rates(double tpr, double fpr);
// BA = (J + 1) / 2, and its inverse.
double balanced_accuracy_from_j(double j);
double j_from_balanced_accuracy(double ba);

// Scales the positive row (tp, fn) and the negative row (fp, tn) so that the
// total is preserved and the gold prevalence becomes `target_prevalence`.
// Per-class rates are unchanged. Throws ValidationError("cannot rescale
// degenerate class") if either class is empty.
ScaledConfusion rescale_to_prevalence(const ScaledConfusion& cm, double target_prevalence);
ScaledConfusion rescale_to_prevalence(const BinaryConfusion& cm, double target_prevalence);

// Square count matrix; rows are the true class, columns the predicted class.
class MulticlassConfusion {
 public:
  // `counts` is row-major, size n*n with n = labels.size() >= 2. An empty
  // `labels` vector is replaced by "0", "1", ... sized from `counts`.
  MulticlassConfusion(std::vector<std::string> labels, std::vector<std::int64_t> counts);

  static MulticlassConfusion from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                       std::vector<std::string> labels = {});

  std::size_t num_classes() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::int64_t count(std::size_t truth, std::size_t predicted) const {
    return counts_[truth * labels_.size() + predicted];
  }
  std::int64_t row_total(std::size_t truth) const;
  std::int64_t column_total(std::size_t predicted) const;
  std::int64_t total() const;

  // A row with no items; its recall is undefined.
  bool row_degenerate(std::size_t truth) const { return row_total(truth) == 0; }

  // One-vs-rest reduction with `cls` as the positive class.
  BinaryConfusion one_vs_rest(std::size_t cls) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::int64_t> counts_;
};

// A mean over classes, with per-class degeneracy flags.
struct ClassAveragedValue {
  double value = 0.0;
  std::vector<bool> degenerate;

  bool any_degenerate() const;
};

// Mean of per-class recalls. Empty rows contribute zero_division_value and are
// flagged. Throws ValidationError if every row is empty.
ClassAveragedValue multiclass_balanced_accuracy(const MulticlassConfusion& mc,
                                                double zero_division_value = 0.0);

// How the "rest" side of a one-vs-rest reduction is weighted.
//
// kClassBalanced: FPR_i is the mean, over the other classes k, of the rate at
// which class-k items are predicted as i. Each class weighs equally, so the
// result does not depend on how the other classes are distributed, and
// BA = ((n-1)/n) * MacroJ + 1/n holds exactly.
//
// kPooled: FPR_i = (items predicted i that are not i) / (items not i), the
// plain one-vs-rest binary reduction. Matches kClassBalanced for n = 2 and
// whenever every row has the same total.
enum class OneVsRest { kClassBalanced, kPooled };

// Mean over classes of the one-vs-rest J. A class whose TPR or FPR is
// undefined uses zero_division_value for that rate and is flagged.
ClassAveragedValue macro_j(const MulticlassConfusion& mc,
                           OneVsRest mode = OneVsRest::kClassBalanced,
                           double zero_division_value = 0.0);

}  // namespace judgekit

#endif  // JUDGEKIT_CONFUSION_H_
