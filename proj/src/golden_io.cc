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

#include "judgekit/golden_io.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "judgekit/error.h"

namespace judgekit {
namespace {

using nlohmann::json;

// Splits one CSV line. Quoted fields may contain commas and doubled quotes but
// not newlines.
std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  if (quoted) throw ValidationError(fmt::format("line {}: unterminated quoted field", line_no));
  fields.push_back(std::move(field));
  return fields;
}

double parse_score(const std::string& text, std::size_t line_no) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !std::isfinite(value)) {
    throw ValidationError(fmt::format("line {}: judge_score '{}' is not a finite number", line_no, text));
  }
  return value;
}

std::string string_field(const json& obj, const char* key, std::size_t line_no) {
  const json& v = obj.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  throw ValidationError(fmt::format("line {}: field '{}' must be a string", line_no, key));
}

std::optional<std::string> optional_string(const json& obj, const char* key,
                                           std::size_t line_no) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return string_field(obj, key, line_no);
}

GoldenRecord record_from_json(const std::string& line, std::size_t line_no) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ValidationError(fmt::format("line {}: invalid JSON: {}", line_no, e.what()));
  }
  if (!obj.is_object()) throw ValidationError(fmt::format("line {}: expected a JSON object", line_no));
  for (const char* key : {"id", "gold_label"}) {
    if (!obj.contains(key) || obj[key].is_null()) {
      throw ValidationError(fmt::format("line {}: missing required field '{}'", line_no, key));
    }
  }
  GoldenRecord r;
  r.line = line_no;
  r.id = string_field(obj, "id", line_no);
  r.gold_label = string_field(obj, "gold_label", line_no);
  r.judge_label = optional_string(obj, "judge_label", line_no);
  r.model_id = optional_string(obj, "model_id", line_no);
  if (const auto it = obj.find("judge_score"); it != obj.end() && !it->is_null()) {
    if (!it->is_number()) {
      throw ValidationError(fmt::format("line {}: judge_score must be a number", line_no));
    }
    r.judge_score = it->get<double>();
    if (!std::isfinite(*r.judge_score)) {
      throw ValidationError(fmt::format("line {}: judge_score must be finite", line_no));
    }
  }
  return r;
}

std::vector<GoldenRecord> parse_jsonl(std::istream& in) {
  std::vector<GoldenRecord> records;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    records.push_back(record_from_json(line, line_no));
  }
  return records;
}

std::vector<GoldenRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) return {};
  const std::vector<std::string> header = split_csv_line(line, 1);
  auto column = [&](std::string_view name) -> std::optional<std::size_t> {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
  };
  const auto id_col = column("id");
  const auto gold_col = column("gold_label");
  if (!id_col || !gold_col) {
    throw ValidationError("line 1: CSV header must contain 'id' and 'gold_label'");
  }
  const auto judge_col = column("judge_label");
  const auto score_col = column("judge_score");
  const auto model_col = column("model_id");

  std::vector<GoldenRecord> records;
  for (std::size_t line_no = 2; std::getline(in, line); ++line_no) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::vector<std::string> fields = split_csv_line(line, line_no);
    if (fields.size() != header.size()) {
      throw ValidationError(fmt::format("line {}: expected {} fields, found {}", line_no,
                                        header.size(), fields.size()));
    }
    auto optional_cell = [&](std::optional<std::size_t> col) -> std::optional<std::string> {
      if (!col || fields[*col].empty()) return std::nullopt;
      return fields[*col];
    };
    GoldenRecord r;
    r.line = line_no;
    r.id = fields[*id_col];
    r.gold_label = fields[*gold_col];
    if (r.id.empty() || r.gold_label.empty()) {
      throw ValidationError(fmt::format("line {}: missing required field '{}'", line_no,
                                        r.id.empty() ? "id" : "gold_label"));
    }
    r.judge_label = optional_cell(judge_col);
    r.model_id = optional_cell(model_col);
    if (auto score = optional_cell(score_col)) r.judge_score = parse_score(*score, line_no);
    records.push_back(std::move(r));
  }
  return records;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

}  // namespace

InputFormat parse_input_format(std::string_view name) {
  if (name == "jsonl" || name == "json") return InputFormat::kJsonl;
  if (name == "csv") return InputFormat::kCsv;
  throw ValidationError(fmt::format("unknown input format '{}' (expected jsonl or csv)", name));
}

InputFormat infer_input_format(std::string_view path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return InputFormat::kCsv;
  return InputFormat::kJsonl;
}

std::vector<GoldenRecord> parse_golden(std::istream& in, InputFormat format,
                                       const std::vector<std::string>& label_set,
                                       std::string_view positive_label) {
  std::vector<GoldenRecord> records =
      format == InputFormat::kCsv ? parse_csv(in) : parse_jsonl(in);
  for (const GoldenRecord& r : records) {
    if (!r.judge_label && !r.judge_score) {
      throw ValidationError(
          fmt::format("line {}: record '{}' needs a judge_label or a judge_score", r.line, r.id));
    }
  }
  if (label_set.empty()) return records;

  auto known = [&](std::string_view label) {
    return std::find(label_set.begin(), label_set.end(), label) != label_set.end();
  };
  if (!positive_label.empty() && !known(positive_label)) {
    throw ValidationError(fmt::format("positive label '{}' is not in the label set {{{}}}",
                                      positive_label, join(label_set)));
  }
  for (const GoldenRecord& r : records) {
    for (const std::string* label : {&r.gold_label, r.judge_label ? &*r.judge_label : nullptr}) {
      if (label != nullptr && !known(*label)) {
        throw ValidationError(fmt::format("line {}: label '{}' is not in the label set {{{}}}",
                                          r.line, *label, join(label_set)));
      }
    }
  }
  return records;
}

std::vector<GoldenRecord> load_golden(const std::string& path, InputFormat format,
                                      const std::vector<std::string>& label_set,
                                      std::string_view positive_label) {
  std::ifstream in(path);
  if (!in) throw ValidationError(fmt::format("cannot open '{}'", path));
  try {
    return parse_golden(in, format, label_set, positive_label);
  } catch (const ValidationError& e) {
    throw ValidationError(fmt::format("{}: {}", path, e.what()));
  }
}

BinaryConfusion confusion_from_records(const std::vector<GoldenRecord>& records,
                                       std::string_view positive_label) {
  if (records.empty()) throw ValidationError("no records to build a confusion matrix from");
  BinaryConfusion cm;
  for (const GoldenRecord& r : records) {
    if (!r.judge_label) {
      throw ValidationError(fmt::format(
          "line {}: record '{}' has no judge_label; use the roc command for scored records",
          r.line, r.id));
    }
    const bool gold = r.gold_label == positive_label;
    const bool judged = *r.judge_label == positive_label;
    if (gold) {
      (judged ? cm.tp : cm.fn) += 1;
    } else {
      (judged ? cm.fp : cm.tn) += 1;
    }
  }
  return cm;
}

std::vector<std::string> collect_labels(const std::vector<GoldenRecord>& records,
                                        const std::vector<std::string>& label_set) {
  if (!label_set.empty()) return label_set;
  std::vector<std::string> labels;
  auto add = [&](const std::string& label) {
    if (std::find(labels.begin(), labels.end(), label) == labels.end()) labels.push_back(label);
  };
  for (const GoldenRecord& r : records) add(r.gold_label);
  for (const GoldenRecord& r : records) {
    if (r.judge_label) add(*r.judge_label);
  }
  return labels;
}

MulticlassConfusion multiclass_from_records(const std::vector<GoldenRecord>& records,
                                            const std::vector<std::string>& labels) {
  if (records.empty()) throw ValidationError("no records to build a confusion matrix from");
  const std::size_t n = labels.size();
  std::vector<std::int64_t> counts(n * n);
  auto index = [&](const std::string& label, std::size_t line) {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
      throw ValidationError(fmt::format("line {}: label '{}' is not in the label set", line, label));
    }
    return static_cast<std::size_t>(it - labels.begin());
  };
  for (const GoldenRecord& r : records) {
    if (!r.judge_label) {
      throw ValidationError(fmt::format("line {}: record '{}' has no judge_label", r.line, r.id));
    }
    counts[index(r.gold_label, r.line) * n + index(*r.judge_label, r.line)] += 1;
  }
  return MulticlassConfusion(labels, std::move(counts));
}

std::vector<ScoredSample> scored_samples_from_records(const std::vector<GoldenRecord>& records,
                                                      std::string_view positive_label) {
  std::vector<ScoredSample> samples;
  samples.reserve(records.size());
  for (const GoldenRecord& r : records) {
    if (!r.judge_score) {
      throw ValidationError(fmt::format("line {}: record '{}' has no judge_score", r.line, r.id));
    }
    samples.push_back({*r.judge_score, r.gold_label == positive_label});
  }
  return samples;
}

void check_same_items(const std::vector<std::vector<GoldenRecord>>& judges,
                      const std::vector<std::string>& names) {
  if (judges.empty()) return;
  auto index = [](const std::vector<GoldenRecord>& records, const std::string& name) {
    std::map<std::string, std::string> gold;
    for (const GoldenRecord& r : records) {
      if (!gold.emplace(r.id, r.gold_label).second) {
        throw ValidationError(fmt::format("{}: duplicate id '{}' on line {}", name, r.id, r.line));
      }
    }
    return gold;
  };
  const auto reference = index(judges[0], names[0]);
  for (std::size_t j = 1; j < judges.size(); ++j) {
    const auto other = index(judges[j], names[j]);
    for (const auto& [id, label] : reference) {
      const auto it = other.find(id);
      if (it == other.end()) {
        throw ValidationError(fmt::format("{}: id '{}' from {} is missing", names[j], id, names[0]));
      }
      if (it->second != label) {
        throw ValidationError(fmt::format("{}: id '{}' has gold label '{}' but {} has '{}'",
                                          names[j], id, it->second, names[0], label));
      }
    }
    if (other.size() != reference.size()) {
      for (const auto& [id, label] : other) {
        if (!reference.contains(id)) {
          throw ValidationError(
              fmt::format("{}: id '{}' does not appear in {}", names[j], id, names[0]));
        }
      }
    }
  }
}

}  // namespace judgekit
