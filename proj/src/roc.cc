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

#include "judgekit/roc.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "judgekit/error.h"

namespace judgekit {

RocCurve roc_curve(std::span<const ScoredSample> samples) {
  std::vector<ScoredSample> sorted(samples.begin(), samples.end());
  RocCurve curve;
  for (const auto& s : sorted) {
    if (!std::isfinite(s.score)) throw ValidationError("ROC scores must be finite");
    (s.gold ? curve.positives : curve.negatives) += 1;
  }
  if (curve.positives == 0 || curve.negatives == 0) {
    throw ValidationError("ROC undefined without both classes");
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const ScoredSample& a, const ScoredSample& b) { return a.score > b.score; });

  const auto pos = static_cast<double>(curve.positives);
  const auto neg = static_cast<double>(curve.negatives);
  curve.points.push_back({0.0, 0.0, std::numeric_limits<double>::infinity()});
  std::size_t tp = 0;
  std::size_t fp = 0;
  for (std::size_t i = 0; i < sorted.size();) {
    const double threshold = sorted[i].score;
    for (; i < sorted.size() && sorted[i].score == threshold; ++i) {
      (sorted[i].gold ? tp : fp) += 1;
    }
    curve.points.push_back(
        {static_cast<double>(fp) / neg, static_cast<double>(tp) / pos, threshold});
  }
  return curve;
}

double roc_auc(const RocCurve& curve) {
  double area = 0;
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    const RocPoint& a = curve.points[i - 1];
    const RocPoint& b = curve.points[i];
    area += (b.fpr - a.fpr) * (a.tpr + b.tpr) / 2;
  }
  return area;
}

YoudenPoint youden_optimal_threshold(const RocCurve& curve) {
  if (curve.points.empty()) throw ValidationError("empty ROC curve");
  const RocPoint* best = &curve.points.front();
  for (const RocPoint& p : curve.points) {
    const double j = p.tpr - p.fpr;
    const double best_j = best->tpr - best->fpr;
    if (j > best_j || (j == best_j && (p.fpr < best->fpr ||
                                       (p.fpr == best->fpr && p.threshold < best->threshold)))) {
      best = &p;
    }
  }
  return {best->threshold, best->tpr - best->fpr, best->tpr, best->fpr};
}

KuiperResult kuiper_statistic(std::span<const double> scores_a, std::span<const double> scores_b) {
  if (scores_a.empty() || scores_b.empty()) {
    throw ValidationError("Kuiper statistic needs two non-empty samples");
  }
  std::vector<double> a(scores_a.begin(), scores_a.end());
  std::vector<double> b(scores_b.begin(), scores_b.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());

  const auto na = static_cast<double>(a.size());
  const auto nb = static_cast<double>(b.size());
  KuiperResult r;
  std::size_t i = 0;
  std::size_t k = 0;
  // Both CDFs are right-continuous steps; compare after consuming each
  // distinct value from both samples.
  while (i < a.size() || k < b.size()) {
    double x;
    if (k == b.size() || (i < a.size() && a[i] <= b[k])) {
      x = a[i];
    } else {
      x = b[k];
    }
    while (i < a.size() && a[i] == x) ++i;
    while (k < b.size() && b[k] == x) ++k;
    const double diff = static_cast<double>(i) / na - static_cast<double>(k) / nb;
    r.d_plus = std::max(r.d_plus, diff);
    r.d_minus = std::max(r.d_minus, -diff);
  }
  r.statistic = r.d_plus + r.d_minus;
  return r;
}

}  // namespace judgekit
