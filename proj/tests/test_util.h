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

// Shared fixtures and random generators for the test suites.

#ifndef JUDGEKIT_TESTS_TEST_UTIL_H_
#define JUDGEKIT_TESTS_TEST_UTIL_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "judgekit/confusion.h"

namespace judgekit::testing {

// Reference case-study counts (TP/FP/TN/FN).
inline constexpr BinaryConfusion kCase1JudgeA{63, 133, 784, 20};
inline constexpr BinaryConfusion kCase1JudgeB{47, 69, 848, 36};
inline constexpr BinaryConfusion kCase2JudgeA{50, 20, 780, 150};
inline constexpr BinaryConfusion kCase2JudgeB{40, 0, 800, 160};

inline std::string data_path(const std::string& name) {
  return std::string(JUDGEKIT_TEST_DATA_DIR) + "/" + name;
}

// |actual - reference| <= 0.005, inclusive of the half-unit boundary.
inline bool matches_two_decimals(double actual, double reference) {
  return std::abs(actual - reference) <= 0.005 + 1e-9;
}

// Random confusion matrix with every cell in [0, max_cell]; `nondegenerate`
// forces at least one positive and one negative.
inline BinaryConfusion random_confusion(std::mt19937_64& rng, std::int64_t max_cell = 500,
                                        bool nondegenerate = true) {
  std::uniform_int_distribution<std::int64_t> cell(0, max_cell);
  for (;;) {
    BinaryConfusion cm{cell(rng), cell(rng), cell(rng), cell(rng)};
    if (cm.total() == 0) continue;
    if (nondegenerate && (cm.positives() == 0 || cm.negatives() == 0)) continue;
    return cm;
  }
}

// n x n matrix with every row total > 0.
inline MulticlassConfusion random_multiclass(std::mt19937_64& rng, std::size_t n,
                                             std::int64_t max_cell = 200) {
  std::uniform_int_distribution<std::int64_t> cell(0, max_cell);
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
  for (auto& row : rows) {
    std::int64_t total = 0;
    do {
      total = 0;
      for (auto& c : row) total += (c = cell(rng));
    } while (total == 0);
  }
  return MulticlassConfusion::from_rows(rows);
}

}  // namespace judgekit::testing

#endif  // JUDGEKIT_TESTS_TEST_UTIL_H_
