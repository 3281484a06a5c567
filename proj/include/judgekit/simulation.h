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

// Monte-Carlo study of metric-based judge selection.
//
// Each scenario samples assistant models with true prevalences and candidate
// judges with (TPR, FPR). A judge's true utility is its pairwise ranking
// accuracy (RankAcc) on the models, estimated from n_eval judged samples per
// model. Separately, each judge is scored on a synthetic golden set and the
// top judge under each selection metric is compared with the RankAcc-best one.

#ifndef JUDGEKIT_SIMULATION_H_
#define JUDGEKIT_SIMULATION_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "judgekit/confusion.h"
#include "judgekit/prevalence_model.h"
#include "judgekit/rng.h"

namespace judgekit {

struct PrevalenceRange {
  double lo = 0.0;
  double hi = 0.0;

  friend bool operator==(const PrevalenceRange&, const PrevalenceRange&) = default;
};

// How golden sets are drawn within one scenario.
enum class GoldenMode {
  // Every judge is scored on its own golden set: its own p_golden and n_pos.
  kPerJudge,
  // One p_golden and n_pos per scenario, shared by all judges; only the
  // classification noise is per judge.
  kShared,
};

std::string_view golden_mode_name(GoldenMode mode);
GoldenMode parse_golden_mode(std::string_view name);

struct ScenarioConfig {
  std::int64_t n_models = 5;
  std::int64_t n_judges = 3;
  std::int64_t n_eval = 2000;
  std::int64_t n_golden = 2000;
  PrevalenceRange model_prevalence{0.01, 0.5};
  PrevalenceRange golden_prevalence{0.05, 0.5};
  std::vector<Metric> metrics{Metric::kBalancedAccuracy, Metric::kMacroF1, Metric::kAccuracy,
                              Metric::kF1};
  std::int64_t n_scenarios = 100000;
  std::uint64_t seed = 0;
  GoldenMode golden_mode = GoldenMode::kPerJudge;
  // Replace the first sampled judges in every scenario. Must not exceed
  // n_judges.
  std::vector<JudgeProfile> forced_judges;

  // Throws ValidationError on any broken invariant.
  void validate() const;

  // "standard": n_eval = n_golden = 2000.
  // "compact":  n_eval = 200, n_golden = 800.
  static ScenarioConfig preset(std::string_view name);

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

std::vector<JudgeProfile> sample_judges(Rng& rng, std::int64_t n);

// n i.i.d. uniform prevalences from `range`, ascending.
std::vector<double> sample_models(Rng& rng, std::int64_t n, PrevalenceRange range);

// Probability a judge labels a model-p example positive.
inline double judge_positive_rate(const JudgeProfile& judge, double p) {
  return measured_prevalence(judge, p);
}

// Binomial(n_eval, q_k) / n_eval for each model k.
std::vector<double> estimate_model_prevalences(Rng& rng, const JudgeProfile& judge,
                                               std::span<const double> prevalences,
                                               std::int64_t n_eval);

// Fraction of model pairs ordered the same way by the estimates as by the
// truth. A pair with equal estimates counts 0.5.
double rank_accuracy(std::span<const double> true_prevalences,
                     std::span<const double> estimated_prevalences);

struct GoldenDraw {
  BinaryConfusion confusion;
  // No positives or no negatives in the golden set.
  bool degenerate = false;
};

// Draws n_pos ~ Binomial(n_golden, p_golden), then classifies the set.
GoldenDraw sample_golden_confusion(Rng& rng, const JudgeProfile& judge, std::int64_t n_golden,
                                   double p_golden);

// Classifies a golden set of known composition: tp ~ Bin(positives, tpr),
// tn ~ Bin(negatives, 1 - fpr).
GoldenDraw classify_golden_set(Rng& rng, const JudgeProfile& judge, std::int64_t positives,
                               std::int64_t negatives);

// Index of the judge with the highest metric; exact ties go to the lowest
// index. Degenerate metrics score 0.
std::size_t select_judge_by_metric(std::span<const BinaryConfusion> confusions, Metric metric);
// Throws ValidationError for an unknown metric name.
std::size_t select_judge_by_metric(std::span<const BinaryConfusion> confusions,
                                   std::string_view metric);

struct MetricSelection {
  Metric metric = Metric::kBalancedAccuracy;
  std::size_t chosen = 0;
  double chosen_rank_accuracy = 0.0;

  friend bool operator==(const MetricSelection&, const MetricSelection&) = default;
};

struct ScenarioOutcome {
  std::vector<double> model_prevalences;
  std::vector<JudgeProfile> judges;
  std::vector<double> rank_accuracy;
  std::vector<BinaryConfusion> golden;
  std::size_t best_judge = 0;
  double best_rank_accuracy = 0.0;
  std::vector<MetricSelection> selections;  // one per configured metric
  bool degenerate = false;                  // some golden draw was degenerate

  friend bool operator==(const ScenarioOutcome&, const ScenarioOutcome&) = default;
};

// Runs scenario `index` of `config`. The random streams depend only on
// (config.seed, index), never on which other scenarios have run.
ScenarioOutcome run_scenario(const ScenarioConfig& config, std::uint64_t index);

struct MetricAggregate {
  Metric metric = Metric::kBalancedAccuracy;
  double success_rate = 0.0;
  // Mean over all scenarios of RankAcc_best - RankAcc_chosen (0 on success).
  double avg_rank_gap = 0.0;
  // The same gap averaged only over scenarios where the metric mis-selected;
  // 0 when it never did.
  double conditional_rank_gap = 0.0;
  std::int64_t n_scenarios = 0;
  double flagged_fraction = 0.0;

  friend bool operator==(const MetricAggregate&, const MetricAggregate&) = default;
};

struct AggregateResult {
  std::vector<MetricAggregate> metrics;

  const MetricAggregate& at(Metric m) const;

  friend bool operator==(const AggregateResult&, const AggregateResult&) = default;
};

struct SimulationOptions {
  // 0 = std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Results are bit-identical for any thread count.
AggregateResult run_simulation(const ScenarioConfig& config, SimulationOptions options = {});

enum class AblationAxis { kGoldenPrevalence, kGoldenSize, kEvalSize };

std::string_view ablation_axis_name(AblationAxis axis);
// Accepts golden-prevalence / golden_prevalence and likewise for the others.
AblationAxis parse_ablation_axis(std::string_view name);

// A prevalence range for kGoldenPrevalence, a sample count otherwise.
using GridValue = std::variant<std::int64_t, PrevalenceRange>;

std::string grid_value_label(const GridValue& value);

struct AblationRow {
  GridValue value;
  AggregateResult result;
};

struct AblationTable {
  AblationAxis axis = AblationAxis::kGoldenPrevalence;
  std::vector<AblationRow> rows;
};

// One run_simulation per grid point, varying only `axis`. All points share
// the base seed, so scenarios are paired across the grid.
AblationTable run_ablation(const ScenarioConfig& base, AblationAxis axis,
                           std::span<const GridValue> grid, SimulationOptions options = {});

}  // namespace judgekit

#endif  // JUDGEKIT_SIMULATION_H_
