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

#include "judgekit/prevalence_model.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "judgekit/error.h"

namespace judgekit {
namespace {

void check_rate(double value, const char* what) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ValidationError(fmt::format("{} must lie in [0, 1], got {}", what, value));
  }
}

}  // namespace

JudgeProfile JudgeProfile::make(double tpr, double fpr) {
  check_rate(tpr, "tpr");
  check_rate(fpr, "fpr");
  return {tpr, fpr};
}

double measured_prevalence(const JudgeProfile& judge, double x) {
  check_rate(x, "prevalence");
  return judge.tpr * x + judge.fpr * (1 - x);
}

double measured_delta(const JudgeProfile& judge, double dx) {
  if (!(std::abs(dx) <= 1.0)) {
    throw ValidationError(fmt::format("prevalence difference must lie in [-1, 1], got {}", dx));
  }
  return judge.youden_j() * dx;
}

double correct_prevalence(const JudgeProfile& judge, double y) {
  if (judge.tpr == judge.fpr) {
    throw ValidationError("non-informative judge, inversion undefined");
  }
  return std::clamp((y - judge.fpr) / (judge.tpr - judge.fpr), 0.0, 1.0);
}

FixedPoint fixed_point(const JudgeProfile& judge) {
  const double denom = 1 - judge.tpr + judge.fpr;
  if (denom <= 0) return {0.0, true};
  return {judge.fpr / denom, false};
}

}  // namespace judgekit
