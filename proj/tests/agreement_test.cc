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

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "judgekit/error.h"
#include "test_util.h"

namespace judgekit {
namespace {

// Krippendorff's alpha from first principles: expand the matrix into units of
// two values, then count disagreeing ordered pairs within units (observed)
// and across all pooled values (expected).
double brute_force_alpha(const BinaryConfusion& cm) {
  std::vector<std::pair<int, int>> units;
  auto add = [&](std::int64_t count, int gold, int judge) {
    for (std::int64_t i = 0; i < count; ++i) units.emplace_back(gold, judge);
  };
  add(cm.tp, 1, 1);
  add(cm.fp, 0, 1);
  add(cm.tn, 0, 0);
  add(cm.fn, 1, 0);
  std::vector<int> pooled;
  double observed_pairs = 0;
  for (const auto& [a, b] : units) {
    pooled.push_back(a);
    pooled.push_back(b);
    // Ordered pairs (a, b) and (b, a), each weighted 1 / (values in unit - 1).
    if (a != b) observed_pairs += 2;
  }
  const double n = static_cast<double>(pooled.size());
  double expected_pairs = 0;
  for (std::size_t i = 0; i < pooled.size(); ++i) {
    for (std::size_t k = 0; k < pooled.size(); ++k) {
      if (i != k && pooled[i] != pooled[k]) expected_pairs += 1;
    }
  }
  const double d_o = observed_pairs / n;
  const double d_e = expected_pairs / (n * (n - 1));
  return 1 - d_o / d_e;
}

TEST(CohenKappa, Examples) {
  EXPECT_NEAR(cohen_kappa(BinaryConfusion{40, 20, 30, 10}).value, 0.4, 1e-12);
  EXPECT_DOUBLE_EQ(cohen_kappa(BinaryConfusion{50, 0, 50, 0}).value, 1.0);
  EXPECT_DOUBLE_EQ(cohen_kappa(BinaryConfusion{25, 25, 25, 25}).value, 0.0);
}

TEST(ScottPi, Examples) {
  EXPECT_NEAR(scott_pi(BinaryConfusion{40, 20, 30, 10}).value, 0.195 / 0.495, 1e-12);
  EXPECT_NEAR(scott_pi(BinaryConfusion{40, 20, 30, 10}).value, 0.3939, 1e-4);
  EXPECT_DOUBLE_EQ(scott_pi(BinaryConfusion{50, 0, 50, 0}).value, 1.0);
  EXPECT_DOUBLE_EQ(scott_pi(BinaryConfusion{25, 25, 25, 25}).value, 0.0);
}

TEST(KrippendorffAlpha, Examples) {
  const BinaryConfusion cm{40, 20, 30, 10};
  const double expected = 1 - 0.3 / (2.0 * 110 * 90 / (200.0 * 199));
  EXPECT_NEAR(krippendorff_alpha_binary(cm).value, expected, 1e-12);
  EXPECT_NEAR(krippendorff_alpha_binary(cm).value, 0.3970, 1e-4);
  EXPECT_NEAR(krippendorff_alpha_binary(cm).value, brute_force_alpha(cm), 1e-12);
  EXPECT_DOUBLE_EQ(krippendorff_alpha_binary(BinaryConfusion{50, 0, 50, 0}).value, 1.0);

  const BinaryConfusion large{400, 200, 300, 100};
  EXPECT_LT(std::abs(krippendorff_alpha_binary(large).value - scott_pi(large).value), 0.01);
}

TEST(KrippendorffAlpha, MatchesBruteForceOracle) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const BinaryConfusion cm = testing::random_confusion(rng, 15, false);
    if (cm.total() < 2) continue;
    const AgreementValue alpha = krippendorff_alpha_binary(cm);
    if (alpha.degenerate) continue;
    ASSERT_NEAR(alpha.value, brute_force_alpha(cm), 1e-12);
  }
}

TEST(Agreement, DegenerateMarginals) {
  // Both raters always say negative.
  const BinaryConfusion constant{0, 0, 10, 0};
  for (const AgreementValue& v : {cohen_kappa(constant), scott_pi(constant),
                                  krippendorff_alpha_binary(constant)}) {
    EXPECT_TRUE(v.degenerate);
    EXPECT_DOUBLE_EQ(v.value, 1.0);
  }
  EXPECT_THROW(cohen_kappa(BinaryConfusion{}), ValidationError);
  EXPECT_THROW(krippendorff_alpha_binary(BinaryConfusion{1, 0, 0, 0}), ValidationError);
}

TEST(Agreement, LabelSymmetric) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 1000; ++i) {
    const BinaryConfusion cm = testing::random_confusion(rng, 200, false);
    if (cm.total() < 2) continue;
    const BinaryConfusion sw = swap_labels(cm);
    EXPECT_NEAR(cohen_kappa(cm).value, cohen_kappa(sw).value, 1e-12);
    EXPECT_NEAR(scott_pi(cm).value, scott_pi(sw).value, 1e-12);
    EXPECT_NEAR(krippendorff_alpha_binary(cm).value, krippendorff_alpha_binary(sw).value, 1e-12);
  }
}

TEST(Agreement, KappaEqualsPiWhenMarginalsMatch) {
  // fp == fn makes the judge's positive count equal the gold positive count.
  for (const BinaryConfusion& cm : {BinaryConfusion{30, 7, 56, 7}, BinaryConfusion{5, 12, 80, 12},
                                    BinaryConfusion{40, 20, 30, 20}}) {
    EXPECT_NEAR(cohen_kappa(cm).value, scott_pi(cm).value, 1e-12);
  }
}

TEST(Agreement, KappaCollapsesWithPrevalenceWhileJStaysPut) {
  // TPR = TNR = 0.9 at balanced prevalence.
  const BinaryConfusion base{450, 50, 450, 50};
  double previous = 2.0;
  for (double pi : {0.5, 0.3, 0.2, 0.1, 0.05, 0.02, 0.01}) {
    const ScaledConfusion cm = rescale_to_prevalence(base, pi);
    const double kappa = cohen_kappa(cm).value;
    EXPECT_LT(kappa, previous) << "prevalence " << pi;
    EXPECT_NEAR(binary_metrics(cm).youden_j(), 0.8, 1e-9);
    previous = kappa;
  }
  EXPECT_LT(previous, 0.3);
}

}  // namespace
}  // namespace judgekit
