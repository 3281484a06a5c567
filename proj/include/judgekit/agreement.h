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

// Chance-corrected agreement between the gold labels and a judge, treating
// the binary confusion matrix as two raters labelling the same N items.

#ifndef JUDGEKIT_AGREEMENT_H_
#define JUDGEKIT_AGREEMENT_H_

#include "judgekit/confusion.h"

namespace judgekit {

struct AgreementValue {
  double value = 0.0;
  // Set when the chance term leaves nothing to correct (p_e = 1 or D_e = 0).
  // The value is then 1 if the raters agree everywhere and 0 otherwise.
  bool degenerate = false;
};

// (p_o - p_e) / (1 - p_e), with p_e from the product of each rater's marginals.
AgreementValue cohen_kappa(const BinaryConfusion& cm);
AgreementValue cohen_kappa(const ScaledConfusion& cm);

// As kappa, but p_e uses the pooled marginals of both raters.
AgreementValue scott_pi(const BinaryConfusion& cm);
AgreementValue scott_pi(const ScaledConfusion& cm);

// Two-rater, binary-nominal Krippendorff's alpha with no missing values:
// 1 - D_o / D_e over the 2N pooled values. Requires N >= 2 for integer counts.
AgreementValue krippendorff_alpha_binary(const BinaryConfusion& cm);
AgreementValue krippendorff_alpha_binary(const ScaledConfusion& cm);

}  // namespace judgekit

#endif  // JUDGEKIT_AGREEMENT_H_
