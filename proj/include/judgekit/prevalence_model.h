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

// The linear filter a judge applies to prevalence:
//
//   measured = tpr * true + fpr * (1 - true)
//
// so a judge compresses every true prevalence difference by J = tpr - fpr.

#ifndef JUDGEKIT_PREVALENCE_MODEL_H_
#define JUDGEKIT_PREVALENCE_MODEL_H_

namespace judgekit {

// A judge summarized by its error rates. Negative-J judges are allowed.
struct JudgeProfile {
  double tpr = 0.0;  // sensitivity
  double fpr = 0.0;  // 1 - specificity

  // Throws ValidationError unless both rates lie in [0, 1].
  static JudgeProfile make(double tpr, double fpr);

  double youden_j() const { return tpr - fpr; }

  friend bool operator==(const JudgeProfile&, const JudgeProfile&) = default;
};

// Expected judge-positive rate when the true prevalence is x in [0, 1].
double measured_prevalence(const JudgeProfile& judge, double x);

// Change in measured prevalence for a true change dx, |dx| <= 1.
double measured_delta(const JudgeProfile& judge, double dx);

// Inverts measured_prevalence and clamps to [0, 1]. Throws ValidationError
// for a judge with tpr == fpr.
double correct_prevalence(const JudgeProfile& judge, double y);

struct FixedPoint {
  double value = 0.0;
  // tpr = 1 and fpr = 0: every prevalence is fixed, value is 0.
  bool degenerate = false;
};

// The prevalence x' with measured_prevalence(judge, x') == x'.
FixedPoint fixed_point(const JudgeProfile& judge);

}  // namespace judgekit

#endif  // JUDGEKIT_PREVALENCE_MODEL_H_
