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

// ROC analysis over scored predictions: curve construction, trapezoidal AUC,
// Youden-optimal thresholding, and the two-sample Kuiper statistic.
//
// Threshold convention: a sample is predicted positive iff score >= threshold.

#ifndef JUDGEKIT_ROC_H_
#define JUDGEKIT_ROC_H_

#include <span>
#include <vector>

namespace judgekit {

struct ScoredSample {
  double score = 0.0;  // higher = more positive
  bool gold = false;
};

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
  // +infinity for the leading (0, 0) point.
  double threshold = 0.0;
};

// Points ordered by decreasing threshold; starts at (0, 0) and ends at (1, 1).
// Samples with tied scores move the curve in a single (possibly diagonal) step.
struct RocCurve {
  std::vector<RocPoint> points;
  std::size_t positives = 0;
  std::size_t negatives = 0;
};

// Throws ValidationError("ROC undefined without both classes") for
// single-class input and on non-finite scores.
RocCurve roc_curve(std::span<const ScoredSample> samples);

double roc_auc(const RocCurve& curve);

struct YoudenPoint {
  double threshold = 0.0;
  double j = 0.0;
  double tpr = 0.0;
  double fpr = 0.0;
};

// Curve point maximising TPR - FPR. Ties go to the lower FPR, then the lower
// threshold.
YoudenPoint youden_optimal_threshold(const RocCurve& curve);

struct KuiperResult {
  double d_plus = 0.0;   // sup(F_a - F_b)
  double d_minus = 0.0;  // sup(F_b - F_a)
  double statistic = 0.0;
};

// V = D+ + D- over the empirical CDFs of the two samples. Both must be
// non-empty.
KuiperResult kuiper_statistic(std::span<const double> scores_a, std::span<const double> scores_b);

}  // namespace judgekit

#endif  // JUDGEKIT_ROC_H_
