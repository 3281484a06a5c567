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

#include "judgekit/simulation.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "gtest/gtest.h"
#include "judgekit/error.h"
#include "test_util.h"

namespace judgekit {
namespace {

ScenarioConfig small_config(std::int64_t scenarios) {
  ScenarioConfig c;
  c.n_scenarios = scenarios;
  c.seed = 17;
  return c;
}

TEST(SampleJudges, DeterministicAndInRange) {
  Rng a(5, 1, 1), b(5, 1, 1);
  EXPECT_EQ(sample_judges(a, 50), sample_judges(b, 50));
  Rng rng(7);
  const auto judges = sample_judges(rng, 100000);
  double mean_tpr = 0, mean_fpr = 0;
  for (const auto& j : judges) {
    ASSERT_GE(j.tpr, 0.0);
    ASSERT_LE(j.tpr, 1.0);
    ASSERT_GE(j.fpr, 0.0);
    ASSERT_LE(j.fpr, 1.0);
    mean_tpr += j.tpr;
    mean_fpr += j.fpr;
  }
  EXPECT_NEAR(mean_tpr / 1e5, 0.5, 0.01);
  EXPECT_NEAR(mean_fpr / 1e5, 0.5, 0.01);
}

TEST(SampleModels, SortedReproducibleAndUniform) {
  Rng a(11), b(11);
  const auto models = sample_models(a, 1000, {0.01, 0.5});
  EXPECT_TRUE(std::is_sorted(models.begin(), models.end()));
  EXPECT_EQ(models, sample_models(b, 1000, {0.01, 0.5}));
  Rng rng(13);
  const auto many = sample_models(rng, 100000, {0.01, 0.5});
  EXPECT_NEAR(std::accumulate(many.begin(), many.end(), 0.0) / 1e5, 0.255, 0.005);
  EXPECT_GE(many.front(), 0.01);
  EXPECT_LE(many.back(), 0.5);
}

TEST(EstimateModelPrevalences, PerfectJudgeConverges) {
  const std::vector<double> truth = {0.02, 0.1, 0.25, 0.4, 0.5};
  Rng rng(19);
  const auto est = estimate_model_prevalences(rng, {1.0, 0.0}, truth, 1000000);
  for (std::size_t i = 0; i < truth.size(); ++i) EXPECT_LT(std::abs(est[i] - truth[i]), 0.005);
}

TEST(EstimateModelPrevalences, ZeroRateAndReproducible) {
  const std::vector<double> truth = {0.0, 0.3};
  Rng rng(23);
  // q = 0.3 * 0 + 0.7 * 0 = 0 for the first model.
  const auto est = estimate_model_prevalences(rng, {0.0, 0.0}, truth, 500);
  EXPECT_DOUBLE_EQ(est[0], 0.0);
  EXPECT_DOUBLE_EQ(est[1], 0.0);
  Rng a(29), b(29);
  EXPECT_EQ(estimate_model_prevalences(a, {0.7, 0.2}, truth, 500),
            estimate_model_prevalences(b, {0.7, 0.2}, truth, 500));
  Rng c(31);
  EXPECT_THROW(estimate_model_prevalences(c, {0.7, 0.2}, truth, 0), ValidationError);
}

TEST(RankAccuracy, Examples) {
  const std::vector<double> t3 = {0.1, 0.2, 0.3};
  const std::vector<double> kept = {0.15, 0.25, 0.35};
  const std::vector<double> tied = {0.2, 0.2, 0.25};
  const std::vector<double> t2 = {0.1, 0.2};
  const std::vector<double> reversed = {0.3, 0.1};
  EXPECT_DOUBLE_EQ(rank_accuracy(t3, kept), 1.0);
  EXPECT_DOUBLE_EQ(rank_accuracy(t2, reversed), 0.0);
  EXPECT_NEAR(rank_accuracy(t3, tied), 5.0 / 6.0, 1e-12);
  EXPECT_THROW(rank_accuracy(t3, t2), ValidationError);
}

TEST(RankAccuracy, BruteForcePairs) {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> v(0, 5);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> truth(6), est(6);
    for (std::size_t i = 0; i < truth.size(); ++i) {
      truth[i] = static_cast<double>(i) / 10.0;
      est[i] = v(rng) / 5.0;
    }
    double score = 0, pairs = 0;
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t k = i + 1; k < 6; ++k) {
        pairs += 1;
        if (est[i] < est[k]) score += 1;
        if (est[i] == est[k]) score += 0.5;
      }
    }
    ASSERT_NEAR(rank_accuracy(truth, est), score / pairs, 1e-12);
  }
}

TEST(SampleGoldenConfusion, PerfectJudgeAndTotals) {
  Rng rng(41);
  for (int i = 0; i < 1000; ++i) {
    const GoldenDraw d = sample_golden_confusion(rng, {1.0, 0.0}, 250, 0.3);
    ASSERT_EQ(d.confusion.fp, 0);
    ASSERT_EQ(d.confusion.fn, 0);
    ASSERT_EQ(d.confusion.total(), 250);
  }
  Rng other(43);
  for (int i = 0; i < 1000; ++i) {
    ASSERT_EQ(sample_golden_confusion(other, {0.6, 0.3}, 77, 0.4).confusion.total(), 77);
  }
}

TEST(SampleGoldenConfusion, MeanSensitivity) {
  Rng rng(47);
  double sum = 0;
  int counted = 0;
  for (int i = 0; i < 100000; ++i) {
    const BinaryConfusion cm = sample_golden_confusion(rng, {0.7, 0.2}, 1000, 0.3).confusion;
    if (cm.positives() == 0) continue;
    sum += static_cast<double>(cm.tp) / static_cast<double>(cm.positives());
    ++counted;
  }
  EXPECT_NEAR(sum / counted, 0.7, 0.01);
}

TEST(SampleGoldenConfusion, DegenerateDrawIsFlagged) {
  Rng rng(53);
  int flagged = 0;
  for (int i = 0; i < 200; ++i) {
    const GoldenDraw d = sample_golden_confusion(rng, {0.7, 0.2}, 5, 0.01);
    EXPECT_EQ(d.degenerate, d.confusion.positives() == 0 || d.confusion.negatives() == 0);
    flagged += d.degenerate ? 1 : 0;
  }
  EXPECT_GT(flagged, 150);
  EXPECT_THROW(sample_golden_confusion(rng, {0.7, 0.2}, 5, 0.0), ValidationError);
}

TEST(SelectJudgeByMetric, CaseStudyPairs) {
  const std::vector<BinaryConfusion> case1 = {testing::kCase1JudgeA, testing::kCase1JudgeB};
  const std::vector<BinaryConfusion> case2 = {testing::kCase2JudgeA, testing::kCase2JudgeB};
  EXPECT_EQ(select_judge_by_metric(case1, Metric::kBalancedAccuracy), 0u);
  EXPECT_EQ(select_judge_by_metric(case1, Metric::kAccuracy), 1u);
  EXPECT_EQ(select_judge_by_metric(case1, "balanced_accuracy"), 0u);
  EXPECT_EQ(select_judge_by_metric(case2, Metric::kF1), 0u);
  EXPECT_EQ(select_judge_by_metric(case2, Metric::kAccuracy), 1u);
  EXPECT_THROW(select_judge_by_metric(case2, "auc"), ValidationError);
}

TEST(SelectJudgeByMetric, TiesGoToLowestIndex) {
  const std::vector<BinaryConfusion> same = {testing::kCase1JudgeB, testing::kCase1JudgeA,
                                             testing::kCase1JudgeA};
  EXPECT_EQ(select_judge_by_metric(same, Metric::kBalancedAccuracy), 1u);
}

TEST(RunScenario, Deterministic) {
  const ScenarioConfig c = small_config(10);
  for (std::uint64_t i = 0; i < 10; ++i) EXPECT_EQ(run_scenario(c, i), run_scenario(c, i));
  EXPECT_NE(run_scenario(c, 0), run_scenario(c, 1));
}

TEST(RunScenario, OutcomeIsConsistent) {
  const ScenarioConfig c = small_config(50);
  for (std::uint64_t i = 0; i < 50; ++i) {
    const ScenarioOutcome o = run_scenario(c, i);
    ASSERT_EQ(o.judges.size(), 3u);
    ASSERT_EQ(o.model_prevalences.size(), 5u);
    ASSERT_EQ(o.golden.size(), 3u);
    ASSERT_EQ(o.selections.size(), c.metrics.size());
    const auto best = std::max_element(o.rank_accuracy.begin(), o.rank_accuracy.end());
    ASSERT_EQ(o.best_judge, static_cast<std::size_t>(best - o.rank_accuracy.begin()));
    for (const MetricSelection& s : o.selections) {
      ASSERT_EQ(s.chosen, select_judge_by_metric(o.golden, s.metric));
      ASSERT_DOUBLE_EQ(s.chosen_rank_accuracy, o.rank_accuracy[s.chosen]);
    }
    for (const auto& g : o.golden) ASSERT_EQ(g.total(), c.n_golden);
  }
}

TEST(RunScenario, SharedModeUsesOneGoldenComposition) {
  ScenarioConfig c = small_config(20);
  c.golden_mode = GoldenMode::kShared;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const ScenarioOutcome o = run_scenario(c, i);
    for (const auto& g : o.golden) ASSERT_EQ(g.positives(), o.golden[0].positives());
  }
}

TEST(RunScenario, ForcedPerfectJudgeIsSelectedByBalancedAccuracy) {
  ScenarioConfig c = small_config(200);
  c.n_golden = 500;
  c.forced_judges = {{1.0, 0.0}};
  for (std::uint64_t i = 0; i < 200; ++i) {
    const ScenarioOutcome o = run_scenario(c, i);
    if (o.degenerate) continue;
    EXPECT_DOUBLE_EQ(binary_metrics(o.golden[0]).balanced_accuracy(), 1.0);
    EXPECT_EQ(o.selections[0].metric, Metric::kBalancedAccuracy);
    EXPECT_EQ(o.selections[0].chosen, 0u);
  }
}

TEST(RunSimulation, SingleJudgeAlwaysSucceeds) {
  ScenarioConfig c = small_config(500);
  c.n_judges = 1;
  for (const MetricAggregate& m : run_simulation(c).metrics) {
    EXPECT_DOUBLE_EQ(m.success_rate, 1.0);
    EXPECT_DOUBLE_EQ(m.avg_rank_gap, 0.0);
    EXPECT_DOUBLE_EQ(m.conditional_rank_gap, 0.0);
  }
}

TEST(RunScenario, IdenticalJudgesHaveNoGap) {
  ScenarioConfig c = small_config(300);
  c.n_judges = 2;
  // Same-profile judges still draw independent estimation noise; perfect
  // judges on a large eval set almost always tie on RankAcc.
  c.forced_judges = {{1.0, 0.0}, {1.0, 0.0}};
  c.n_eval = 100000;
  int tied = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    const ScenarioOutcome o = run_scenario(c, i);
    if (o.rank_accuracy[0] != o.rank_accuracy[1]) continue;
    ++tied;
    for (const MetricSelection& s : o.selections) {
      ASSERT_DOUBLE_EQ(o.best_rank_accuracy - s.chosen_rank_accuracy, 0.0);
    }
  }
  EXPECT_GE(tied, 270);
}

TEST(RunSimulation, PerfectJudgeRanksSeparatedModels) {
  ScenarioConfig c = small_config(1000);
  c.n_judges = 1;
  c.forced_judges = {{1.0, 0.0}};
  c.n_eval = 10000;
  int perfect = 0, eligible = 0;
  for (std::uint64_t i = 0; i < 3000 && eligible < 1000; ++i) {
    const ScenarioOutcome o = run_scenario(c, i);
    double min_gap = 1.0;
    for (std::size_t k = 1; k < o.model_prevalences.size(); ++k) {
      min_gap = std::min(min_gap, o.model_prevalences[k] - o.model_prevalences[k - 1]);
    }
    if (min_gap < 0.02) continue;
    ++eligible;
    if (o.rank_accuracy[0] == 1.0) ++perfect;
  }
  ASSERT_EQ(eligible, 1000);
  EXPECT_GE(perfect, 990);
}

TEST(RunSimulation, BoundsAndThreadInvariance) {
  const ScenarioConfig c = small_config(1500);
  const AggregateResult one = run_simulation(c, {1});
  const AggregateResult three = run_simulation(c, {3});
  const AggregateResult eight = run_simulation(c, {8});
  EXPECT_EQ(one, three);
  EXPECT_EQ(one, eight);
  for (const MetricAggregate& m : one.metrics) {
    EXPECT_GE(m.success_rate, 0.0);
    EXPECT_LE(m.success_rate, 1.0);
    EXPECT_GE(m.avg_rank_gap, 0.0);
    EXPECT_LE(m.avg_rank_gap, 1.0);
    EXPECT_LE(m.avg_rank_gap, m.conditional_rank_gap + 1e-15);
    EXPECT_EQ(m.n_scenarios, 1500);
  }
}

TEST(RunSimulation, BalancedAccuracyDominatesAtScale) {
  ScenarioConfig c;
  c.n_scenarios = 20000;
  const AggregateResult r = run_simulation(c);
  const double ba = r.at(Metric::kBalancedAccuracy).success_rate;
  EXPECT_GT(ba, r.at(Metric::kAccuracy).success_rate + 0.01);
  EXPECT_GT(ba, r.at(Metric::kF1).success_rate + 0.01);
}

TEST(RunSimulation, ValidatesConfig) {
  ScenarioConfig c = small_config(10);
  c.n_judges = 0;
  EXPECT_THROW(run_simulation(c), ValidationError);
  c = small_config(10);
  c.model_prevalence = {0.6, 0.2};
  EXPECT_THROW(run_simulation(c), ValidationError);
  c = small_config(10);
  c.forced_judges = {{1, 0}, {1, 0}, {1, 0}, {1, 0}};
  EXPECT_THROW(run_simulation(c), ValidationError);
  c = small_config(10);
  c.metrics.clear();
  EXPECT_THROW(run_simulation(c), ValidationError);
}

TEST(Ablation, EvalSizeGapsShrink) {
  ScenarioConfig c;
  c.n_scenarios = 4000;
  const std::vector<GridValue> grid = {std::int64_t{25}, std::int64_t{200}, std::int64_t{2000}};
  const AblationTable t = run_ablation(c, AblationAxis::kEvalSize, grid);
  ASSERT_EQ(t.rows.size(), 3u);
  for (Metric m : c.metrics) {
    EXPECT_GT(t.rows[0].result.at(m).avg_rank_gap, t.rows[1].result.at(m).avg_rank_gap);
    EXPECT_GT(t.rows[1].result.at(m).avg_rank_gap, t.rows[2].result.at(m).avg_rank_gap);
  }
}

TEST(Ablation, AxisNamesAndGridLabels) {
  EXPECT_EQ(parse_ablation_axis("golden-prevalence"), AblationAxis::kGoldenPrevalence);
  EXPECT_EQ(parse_ablation_axis("golden_size"), AblationAxis::kGoldenSize);
  EXPECT_EQ(ablation_axis_name(AblationAxis::kEvalSize), "eval_size");
  EXPECT_THROW(parse_ablation_axis("judge_count"), ValidationError);
  EXPECT_EQ(grid_value_label(GridValue{std::int64_t{200}}), "200");
  EXPECT_EQ(grid_value_label(GridValue{PrevalenceRange{0.05, 0.2}}), "0.05:0.2");
}

TEST(Ablation, GridTypeMustMatchAxis) {
  const ScenarioConfig c = small_config(10);
  const std::vector<GridValue> sizes = {std::int64_t{200}};
  const std::vector<GridValue> ranges = {PrevalenceRange{0.1, 0.2}};
  EXPECT_THROW(run_ablation(c, AblationAxis::kGoldenPrevalence, sizes), ValidationError);
  EXPECT_THROW(run_ablation(c, AblationAxis::kGoldenSize, ranges), ValidationError);
  EXPECT_THROW(run_ablation(c, AblationAxis::kEvalSize, {}), ValidationError);
}

TEST(ScenarioConfig, Presets) {
  const ScenarioConfig standard = ScenarioConfig::preset("standard");
  EXPECT_EQ(standard.n_eval, 2000);
  EXPECT_EQ(standard.n_golden, 2000);
  const ScenarioConfig compact = ScenarioConfig::preset("compact");
  EXPECT_EQ(compact.n_eval, 200);
  EXPECT_EQ(compact.n_golden, 800);
  EXPECT_EQ(compact.n_scenarios, 100000);
  EXPECT_THROW(ScenarioConfig::preset("huge"), ValidationError);
}

}  // namespace
}  // namespace judgekit
