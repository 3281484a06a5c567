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

// Golden-set ingestion: JSONL and CSV record files, and the confusion
// matrices and scored samples built from them.
//
// JSONL is the canonical format, one object per line:
//
//   {"id": "r1", "gold_label": "violation", "judge_label": "safe",
//    "judge_score": 0.31, "model_id": "m-7"}
//
// CSV uses the same field names as header columns. Other fields/columns (for
// example prompt or response text) are ignored.

#ifndef JUDGEKIT_GOLDEN_IO_H_
#define JUDGEKIT_GOLDEN_IO_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "judgekit/confusion.h"
#include "judgekit/roc.h"

namespace judgekit {

struct GoldenRecord {
  std::string id;
  std::string gold_label;
  std::optional<std::string> judge_label;
  std::optional<double> judge_score;
  std::optional<std::string> model_id;
  std::size_t line = 0;  // 1-based source line

  friend bool operator==(const GoldenRecord& a, const GoldenRecord& b) {
    return a.id == b.id && a.gold_label == b.gold_label && a.judge_label == b.judge_label &&
           a.judge_score == b.judge_score && a.model_id == b.model_id;
  }
};

enum class InputFormat { kJsonl, kCsv };

InputFormat parse_input_format(std::string_view name);
// ".csv" -> kCsv, anything else -> kJsonl.
InputFormat infer_input_format(std::string_view path);

// Parses records and validates them. `label_set` may be empty, in which case
// any label is accepted; otherwise every gold and judge label must belong to
// it, and so must `positive_label` when given. Errors name the offending line.
std::vector<GoldenRecord> parse_golden(std::istream& in, InputFormat format,
                                       const std::vector<std::string>& label_set = {},
                                       std::string_view positive_label = {});

std::vector<GoldenRecord> load_golden(const std::string& path, InputFormat format,
                                      const std::vector<std::string>& label_set = {},
                                      std::string_view positive_label = {});

// Every record must carry a judge_label. Gold/judge labels equal to
// `positive_label` count as positive, everything else as negative.
BinaryConfusion confusion_from_records(const std::vector<GoldenRecord>& records,
                                       std::string_view positive_label);

// Labels in first-seen order over gold then judge labels, or `label_set` when
// non-empty.
std::vector<std::string> collect_labels(const std::vector<GoldenRecord>& records,
                                        const std::vector<std::string>& label_set = {});

MulticlassConfusion multiclass_from_records(const std::vector<GoldenRecord>& records,
                                            const std::vector<std::string>& labels);

// Every record must carry a judge_score.
std::vector<ScoredSample> scored_samples_from_records(const std::vector<GoldenRecord>& records,
                                                      std::string_view positive_label);

// Throws ValidationError unless every file covers the same ids with the same
// gold labels.
void check_same_items(const std::vector<std::vector<GoldenRecord>>& judges,
                      const std::vector<std::string>& names);

}  // namespace judgekit

#endif  // JUDGEKIT_GOLDEN_IO_H_
