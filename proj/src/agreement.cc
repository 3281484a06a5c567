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

#include "judgekit/agreement.h"

#include "judgekit/error.h"

namespace judgekit {
namespace {

struct Marginals {
  double n;
  double observed;  // p_o
  double gold_pos;  // proportions
  double judge_pos;
};

Marginals marginals(const ScaledConfusion& cm) {
  if (!(cm.tp >= 0 && cm.fp >= 0 && cm.tn >= 0 && cm.fn >= 0)) {
    throw ValidationError("confusion counts must be non-negative");
  }
  const double n = cm.total();
  if (n == 0) throw ValidationError("empty confusion matrix");
  return {n, (cm.tp + cm.tn) / n, cm.positives() / n, (cm.tp + cm.fp) / n};
}

AgreementValue chance_corrected(double observed, double expected) {
  if (expected >= 1.0) return {observed >= 1.0 ? 1.0 : 0.0, true};
  return {(observed - expected) / (1 - expected), false};
}

}  // namespace

AgreementValue cohen_kappa(const ScaledConfusion& cm) {
  const Marginals m = marginals(cm);
  const double expected =
      m.gold_pos * m.judge_pos + (1 - m.gold_pos) * (1 - m.judge_pos);
  return chance_corrected(m.observed, expected);
}

AgreementValue scott_pi(const ScaledConfusion& cm) {
  const Marginals m = marginals(cm);
  const double pooled_pos = (m.gold_pos + m.judge_pos) / 2;
  const double expected = pooled_pos * pooled_pos + (1 - pooled_pos) * (1 - pooled_pos);
  return chance_corrected(m.observed, expected);
}

AgreementValue krippendorff_alpha_binary(const ScaledConfusion& cm) {
  const Marginals m = marginals(cm);
  const double values = 2 * m.n;
  // Counts of each pooled value across both raters.
  const double n_pos = 2 * cm.tp + cm.fp + cm.fn;
  const double n_neg = 2 * cm.tn + cm.fp + cm.fn;
  const double observed_disagreement = (cm.fp + cm.fn) / m.n;
  const double expected_disagreement = 2 * n_pos * n_neg / (values * (values - 1));
  if (expected_disagreement <= 0) {
    return {observed_disagreement == 0 ? 1.0 : 0.0, true};
  }
  return {1 - observed_disagreement / expected_disagreement, false};
}

AgreementValue cohen_kappa(const BinaryConfusion& cm) { return cohen_kappa(to_scaled(cm)); }
AgreementValue scott_pi(const BinaryConfusion& cm) { return scott_pi(to_scaled(cm)); }

AgreementValue krippendorff_alpha_binary(const BinaryConfusion& cm) {
  if (cm.total() < 2) throw ValidationError("Krippendorff's alpha needs at least 2 items");
  return krippendorff_alpha_binary(to_scaled(cm));
}

}  // namespace judgekit
