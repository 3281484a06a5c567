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
#include <atomic>
#include <thread>

#include <fmt/format.h>

#include "judgekit/error.h"

namespace judgekit {
namespace {

// Phases of a scenario draw from separate streams, so changing n_eval does not
// perturb the golden-set draws (and vice versa) across an ablation grid.
enum Phase : std::uint64_t { kSetupPhase = 1, kEvalPhase = 2, kGoldenPhase = 3 };

void check_range(const PrevalenceRange& r, const char* what) {
  if (!(r.lo > 0.0 && r.lo <= r.hi && r.hi < 1.0)) {
    throw ValidationError(
        fmt::format("{} range must satisfy 0 < lo <= hi < 1, got [{}, {}]", what, r.lo, r.hi));
  }
}

}  // namespace

std::string_view golden_mode_name(GoldenMode mode) {
  return mode == GoldenMode::kPerJudge ? "per_judge" : "shared";
}

GoldenMode parse_golden_mode(std::string_view name) {
  if (name == "per_judge" || name == "per-judge") return GoldenMode::kPerJudge;
  if (name == "shared") return GoldenMode::kShared;
  throw ValidationError(fmt::format("unknown golden mode '{}'", name));
}

void ScenarioConfig::validate() const {
  if (n_models < 2) throw ValidationError("n_models must be >= 2");
  if (n_judges < 1) throw ValidationError("n_judges must be >= 1");
  if (n_eval < 1) throw ValidationError("n_eval must be >= 1");
  if (n_golden < 1) throw ValidationError("n_golden must be >= 1");
  if (n_scenarios < 1) throw ValidationError("n_scenarios must be >= 1");
  check_range(model_prevalence, "model prevalence");
  check_range(golden_prevalence, "golden prevalence");
  if (metrics.empty()) throw ValidationError("at least one selection metric is required");
  if (static_cast<std::int64_t>(forced_judges.size()) > n_judges) {
    throw ValidationError("more forced judges than n_judges");
  }
  for (const JudgeProfile& j : forced_judges) JudgeProfile::make(j.tpr, j.fpr);
}

ScenarioConfig ScenarioConfig::preset(std::string_view name) {
  ScenarioConfig config;
  if (name == "standard") return config;
  if (name == "compact") {
    config.n_eval = 200;
    config.n_golden = 800;
    return config;
  }
  throw ValidationError(fmt::format("unknown preset '{}' (expected standard or compact)", name));
}

std::vector<JudgeProfile> sample_judges(Rng& rng, std::int64_t n) {
  if (n < 1) throw ValidationError("need at least one judge");
  std::vector<JudgeProfile> judges(static_cast<std::size_t>(n));
  for (JudgeProfile& j : judges) {
    j.tpr = rng.uniform(0.0, 1.0);
    j.fpr = rng.uniform(0.0, 1.0);
  }
  return judges;
}

std::vector<double> sample_models(Rng& rng, std::int64_t n, PrevalenceRange range) {
  if (n < 2) throw ValidationError("need at least two models");
  std::vector<double> prevalences(static_cast<std::size_t>(n));
  for (double& p : prevalences) p = rng.uniform(range.lo, range.hi);
  std::sort(prevalences.begin(), prevalences.end());
  return prevalences;
}

std::vector<double> estimate_model_prevalences(Rng& rng, const JudgeProfile& judge,
                                               std::span<const double> prevalences,
                                               std::int64_t n_eval) {
  if (n_eval < 1) throw ValidationError("n_eval must be >= 1");
  std::vector<double> estimates;
  estimates.reserve(prevalences.size());
  const auto n = static_cast<double>(n_eval);
  for (double p : prevalences) {
    const double q = judge_positive_rate(judge, p);
    estimates.push_back(static_cast<double>(rng.binomial(n_eval, q)) / n);
  }
  return estimates;
}

double rank_accuracy(std::span<const double> true_prevalences,
                     std::span<const double> estimated_prevalences) {
  if (true_prevalences.size() != estimated_prevalences.size()) {
    throw ValidationError(fmt::format("rank_accuracy length mismatch: {} true vs {} estimated",
                                      true_prevalences.size(), estimated_prevalences.size()));
  }
  const std::size_t k = true_prevalences.size();
  if (k < 2) throw ValidationError("rank_accuracy needs at least two models");
  auto sign = [](double d) { return (d > 0) - (d < 0); };
  double agree = 0;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const int est = sign(estimated_prevalences[b] - estimated_prevalences[a]);
      if (est == 0) {
        agree += 0.5;
      } else if (est == sign(true_prevalences[b] - true_prevalences[a])) {
        agree += 1;
      }
    }
  }
  return agree / static_cast<double>(k * (k - 1) / 2);
}

GoldenDraw classify_golden_set(Rng& rng, const JudgeProfile& judge, std::int64_t positives,
                               std::int64_t negatives) {
  GoldenDraw draw;
  draw.confusion.tp = rng.binomial(positives, judge.tpr);
  draw.confusion.fn = positives - draw.confusion.tp;
  draw.confusion.tn = rng.binomial(negatives, 1 - judge.fpr);
  draw.confusion.fp = negatives - draw.confusion.tn;
  draw.degenerate = positives == 0 || negatives == 0;
  return draw;
}

GoldenDraw sample_golden_confusion(Rng& rng, const JudgeProfile& judge, std::int64_t n_golden,
                                   double p_golden) {
  if (n_golden < 1) throw ValidationError("n_golden must be >= 1");
  if (!(p_golden > 0.0 && p_golden < 1.0)) {
    throw ValidationError(fmt::format("golden prevalence must lie in (0, 1), got {}", p_golden));
  }
  const std::int64_t positives = rng.binomial(n_golden, p_golden);
  return classify_golden_set(rng, judge, positives, n_golden - positives);
}

std::size_t select_judge_by_metric(std::span<const BinaryConfusion> confusions, Metric metric) {
  if (confusions.empty()) throw ValidationError("no judges to select from");
  std::size_t best = 0;
  double best_value = 0;
  for (std::size_t i = 0; i < confusions.size(); ++i) {
    const double value = binary_metrics(confusions[i], 0.0)[metric];
    if (i == 0 || value > best_value) {
      best = i;
      best_value = value;
    }
  }
  return best;
}

std::size_t select_judge_by_metric(std::span<const BinaryConfusion> confusions,
                                   std::string_view metric) {
  const auto parsed = parse_metric(metric);
  if (!parsed) throw ValidationError(fmt::format("unknown metric '{}'", metric));
  return select_judge_by_metric(confusions, *parsed);
}

ScenarioOutcome run_scenario(const ScenarioConfig& config, std::uint64_t index) {
  ScenarioOutcome out;
  const auto n_judges = static_cast<std::size_t>(config.n_judges);

  Rng setup(config.seed, index, kSetupPhase);
  out.model_prevalences = sample_models(setup, config.n_models, config.model_prevalence);
  out.judges = sample_judges(setup, config.n_judges);
  std::copy(config.forced_judges.begin(), config.forced_judges.end(), out.judges.begin());

  Rng eval(config.seed, index, kEvalPhase);
  out.rank_accuracy.reserve(n_judges);
  for (const JudgeProfile& judge : out.judges) {
    const auto estimates =
        estimate_model_prevalences(eval, judge, out.model_prevalences, config.n_eval);
    out.rank_accuracy.push_back(rank_accuracy(out.model_prevalences, estimates));
  }
  out.best_judge = static_cast<std::size_t>(
      std::max_element(out.rank_accuracy.begin(), out.rank_accuracy.end()) -
      out.rank_accuracy.begin());
  out.best_rank_accuracy = out.rank_accuracy[out.best_judge];

  Rng golden(config.seed, index, kGoldenPhase);
  const PrevalenceRange& gp = config.golden_prevalence;
  out.golden.reserve(n_judges);
  if (config.golden_mode == GoldenMode::kShared) {
    const double p_golden = golden.uniform(gp.lo, gp.hi);
    const std::int64_t positives = golden.binomial(config.n_golden, p_golden);
    for (const JudgeProfile& judge : out.judges) {
      const GoldenDraw draw =
          classify_golden_set(golden, judge, positives, config.n_golden - positives);
      out.golden.push_back(draw.confusion);
      out.degenerate = out.degenerate || draw.degenerate;
    }
  } else {
    for (const JudgeProfile& judge : out.judges) {
      const double p_golden = golden.uniform(gp.lo, gp.hi);
      const GoldenDraw draw = sample_golden_confusion(golden, judge, config.n_golden, p_golden);
      out.golden.push_back(draw.confusion);
      out.degenerate = out.degenerate || draw.degenerate;
    }
  }

  for (Metric metric : config.metrics) {
    const std::size_t chosen = select_judge_by_metric(out.golden, metric);
    out.selections.push_back({metric, chosen, out.rank_accuracy[chosen]});
  }
  return out;
}

const MetricAggregate& AggregateResult::at(Metric m) const {
  for (const MetricAggregate& a : metrics) {
    if (a.metric == m) return a;
  }
  throw ValidationError(fmt::format("metric '{}' not in result", metric_name(m)));
}

AggregateResult run_simulation(const ScenarioConfig& config, SimulationOptions options) {
  config.validate();
  const auto n = static_cast<std::size_t>(config.n_scenarios);
  const std::size_t m = config.metrics.size();

  // Per-scenario slots, reduced in index order afterwards so the floating-point
  // sums do not depend on scheduling.
  std::vector<double> gaps(n * m);
  std::vector<unsigned char> hits(n * m);
  std::vector<unsigned char> flagged(n);

  std::atomic<std::size_t> next{0};
  constexpr std::size_t kChunk = 256;
  auto worker = [&] {
    for (;;) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= n) return;
      const std::size_t end = std::min(n, begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) {
        const ScenarioOutcome outcome = run_scenario(config, i);
        for (std::size_t k = 0; k < m; ++k) {
          const MetricSelection& sel = outcome.selections[k];
          gaps[i * m + k] = outcome.best_rank_accuracy - sel.chosen_rank_accuracy;
          hits[i * m + k] = sel.chosen == outcome.best_judge ? 1 : 0;
        }
        flagged[i] = outcome.degenerate ? 1 : 0;
      }
    }
  };

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>((n + kChunk - 1) / kChunk)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::size_t flagged_count = 0;
  for (unsigned char f : flagged) flagged_count += f;

  AggregateResult result;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t successes = 0;
    double gap_sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      successes += hits[i * m + k];
      gap_sum += gaps[i * m + k];
    }
    MetricAggregate agg;
    agg.metric = config.metrics[k];
    agg.n_scenarios = config.n_scenarios;
    agg.success_rate = static_cast<double>(successes) / static_cast<double>(n);
    agg.avg_rank_gap = gap_sum / static_cast<double>(n);
    // Successful scenarios contribute zero gap, so the conditional mean only
    // needs the miss count.
    const std::size_t misses = n - successes;
    agg.conditional_rank_gap = misses == 0 ? 0.0 : gap_sum / static_cast<double>(misses);
    agg.flagged_fraction = static_cast<double>(flagged_count) / static_cast<double>(n);
    result.metrics.push_back(agg);
  }
  return result;
}

std::string_view ablation_axis_name(AblationAxis axis) {
  switch (axis) {
    case AblationAxis::kGoldenPrevalence:
      return "golden_prevalence";
    case AblationAxis::kGoldenSize:
      return "golden_size";
    case AblationAxis::kEvalSize:
      return "eval_size";
  }
  return "";
}

AblationAxis parse_ablation_axis(std::string_view name) {
  std::string normalized(name);
  std::replace(normalized.begin(), normalized.end(), '-', '_');
  for (AblationAxis axis :
       {AblationAxis::kGoldenPrevalence, AblationAxis::kGoldenSize, AblationAxis::kEvalSize}) {
    if (ablation_axis_name(axis) == normalized) return axis;
  }
  throw ValidationError(fmt::format(
      "unknown ablation axis '{}' (expected golden-prevalence, golden-size or eval-size)", name));
}

std::string grid_value_label(const GridValue& value) {
  if (const auto* range = std::get_if<PrevalenceRange>(&value)) {
    return fmt::format("{}:{}", range->lo, range->hi);
  }
  return fmt::format("{}", std::get<std::int64_t>(value));
}

AblationTable run_ablation(const ScenarioConfig& base, AblationAxis axis,
                           std::span<const GridValue> grid, SimulationOptions options) {
  if (grid.empty()) throw ValidationError("ablation grid is empty");
  AblationTable table;
  table.axis = axis;
  for (const GridValue& value : grid) {
    ScenarioConfig config = base;
    if (axis == AblationAxis::kGoldenPrevalence) {
      const auto* range = std::get_if<PrevalenceRange>(&value);
      if (range == nullptr) throw ValidationError("golden-prevalence grid needs lo:hi ranges");
      config.golden_prevalence = *range;
    } else {
      const auto* count = std::get_if<std::int64_t>(&value);
      if (count == nullptr) throw ValidationError("size grids need integer sample counts");
      (axis == AblationAxis::kGoldenSize ? config.n_golden : config.n_eval) = *count;
    }
    table.rows.push_back({value, run_simulation(config, options)});
  }
  return table;
}

}  // namespace judgekit
