#include "rtlgauge/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "rtlgauge/rank.hpp"

namespace rtlgauge {

namespace {
constexpr double kDelayFloor = 1e-9;
}

HQIScore attempt_hqi(const std::optional<SynthMetrics>& attempt,
                     const std::optional<SynthMetrics>& golden,
                     const WeightConfig& w) {
  HQIScore s;
  if (!golden) {
    s.value = std::numeric_limits<double>::quiet_NaN();
    return s;
  }
  if (!attempt) {
    s.value = 0.0;
    return s;
  }
  s.has_components = true;
  s.area_ratio = attempt->area / golden->area;
  s.delay_ratio = std::max(attempt->delay, kDelayFloor) / std::max(golden->delay, kDelayFloor);
  s.excess_warnings = std::max(0.0, static_cast<double>(attempt->warnings - golden->warnings));
  double cost = w.w_area * s.area_ratio + w.w_delay * s.delay_ratio + w.w_warn * s.excess_warnings;
  s.value = std::min(100.0 / cost, 100.0);
  return s;
}

namespace {

struct PerTask {
  std::vector<double> hqis;  // one per attempt, golden tasks only
  int attempts = 0;
  bool solved = false;  // at least one attempt passed all gates
};

std::map<std::string, PerTask> collect(const std::vector<AttemptScore>& records,
                                       const std::map<std::string, TaskInfo>& tasks,
                                       const WeightConfig& w) {
  std::map<std::string, PerTask> per_task;
  for (const auto& r : records) {
    if (r.infra_failure)
      throw UnresolvedInfraError("unresolved infrastructure failure for task '" + r.task_id +
                                 "' attempt " + std::to_string(r.attempt) +
                                 "; re-run before scoring");
    auto it = tasks.find(r.task_id);
    if (it == tasks.end()) continue;  // stray record, not part of this manifest
    auto& pt = per_task[r.task_id];
    ++pt.attempts;
    if (r.passed_all_gates) pt.solved = true;
    if (it->second.has_valid_golden) {
      auto hqi = attempt_hqi(r.passed_all_gates ? r.metrics : std::nullopt,
                             it->second.golden, w);
      pt.hqis.push_back(hqi.value);
    }
  }
  return per_task;
}

void check_complete(const std::map<std::string, PerTask>& per_task,
                    const std::map<std::string, TaskInfo>& tasks, int k) {
  for (const auto& [id, info] : tasks) {
    auto it = per_task.find(id);
    int have = it == per_task.end() ? 0 : it->second.attempts;
    if (have != k) throw IncompleteCampaignError(id, have, k);
  }
}

}  // namespace

ModelSummary aggregate_model(const std::string& model_id,
                             const std::vector<AttemptScore>& records,
                             const std::map<std::string, TaskInfo>& tasks, int k,
                             const WeightConfig& w) {
  auto per_task = collect(records, tasks, w);
  check_complete(per_task, tasks, k);

  double weight_all = 0, weight_solved = 0;
  double weight_golden = 0, sum_best = 0, sum_mean = 0;
  int tasks_total = 0, tasks_solved = 0;
  for (const auto& [id, info] : tasks) {
    const auto& pt = per_task.at(id);
    weight_all += info.weight;
    ++tasks_total;
    if (pt.solved) {
      weight_solved += info.weight;
      ++tasks_solved;
    }
    if (info.has_valid_golden) {
      double best = 0, mean = 0;
      for (double h : pt.hqis) {
        best = std::max(best, h);
        mean += h;
      }
      mean /= static_cast<double>(k);
      weight_golden += info.weight;
      sum_best += info.weight * best;
      sum_mean += info.weight * mean;
    }
  }

  ModelSummary s;
  s.model_id = model_id;
  s.coverage_pct = weight_all > 0 ? weight_solved / weight_all * 100.0 : 0.0;
  s.global_hqi = weight_golden > 0 ? sum_best / weight_golden : 0.0;
  s.expected_hqi = weight_golden > 0 ? sum_mean / weight_golden : 0.0;
  s.pass_rate_best_of_k = s.coverage_pct;
  s.pass_rate_unweighted =
      tasks_total > 0 ? static_cast<double>(tasks_solved) / tasks_total * 100.0 : 0.0;
  s.gap = s.global_hqi - s.expected_hqi;
  s.per_category = per_category_scores(records, tasks, k, w);
  std::set<std::string> with_goldens;
  for (const auto& [id, info] : tasks)
    if (info.has_valid_golden) with_goldens.insert(info.category);
  for (const auto& [id, info] : tasks)
    if (!with_goldens.count(info.category))
      if (std::find(s.category_notes.begin(), s.category_notes.end(),
                    "category '" + info.category + "' omitted: no golden tasks") ==
          s.category_notes.end())
        s.category_notes.push_back("category '" + info.category + "' omitted: no golden tasks");
  return s;
}

std::map<std::string, CategoryScore> per_category_scores(
    const std::vector<AttemptScore>& records,
    const std::map<std::string, TaskInfo>& tasks, int k, const WeightConfig& w) {
  auto per_task = collect(records, tasks, w);
  std::map<std::string, CategoryScore> out;
  for (const auto& [id, info] : tasks) {
    if (!info.has_valid_golden) continue;
    auto it = per_task.find(id);
    if (it == per_task.end()) continue;
    double best = 0, mean = 0;
    for (double h : it->second.hqis) {
      best = std::max(best, h);
      mean += h;
    }
    mean /= static_cast<double>(k);
    auto& c = out[info.category];
    c.best_of_k += info.weight * best;
    c.per_attempt += info.weight * mean;
    c.weight_mass += info.weight;
    ++c.golden_tasks;
  }
  for (auto& [cat, c] : out) {
    if (c.weight_mass > 0) {
      c.best_of_k /= c.weight_mass;
      c.per_attempt /= c.weight_mass;
    }
  }
  return out;
}

std::vector<WeightConfig> default_sensitivity_configs() {
  return {
      {0.5, 0.5, 0.1},  // default
      {1.0, 0.0, 0.0},  // area-only
      {0.0, 1.0, 0.0},  // delay-only
      {0.5, 0.5, 0.3},  // 3x warning penalty
      {0.3, 0.7, 0.1}, {0.4, 0.6, 0.1}, {0.6, 0.4, 0.1}, {0.7, 0.3, 0.1},
      {0.4, 0.6, 0.3}, {0.6, 0.4, 0.3},
  };
}

SensitivityReport weight_sensitivity(
    const std::map<std::string, std::vector<AttemptScore>>& records_by_model,
    const std::map<std::string, TaskInfo>& tasks, int k,
    const std::vector<WeightConfig>& configs) {
  if (records_by_model.size() < 2)
    throw RankError("sensitivity: need at least 2 models");
  if (configs.size() < 2) throw RankError("sensitivity: need at least 2 configs");

  std::vector<std::string> models;
  for (const auto& [id, _] : records_by_model) models.push_back(id);

  auto ghqi_under = [&](const WeightConfig& w) {
    std::vector<double> scores;
    scores.reserve(models.size());
    for (const auto& id : models)
      scores.push_back(aggregate_model(id, records_by_model.at(id), tasks, k, w).global_hqi);
    return scores;
  };

  SensitivityReport report;
  report.baseline = WeightConfig{};
  auto base_scores = ghqi_under(report.baseline);
  auto base_pos = descending_positions(models, base_scores);

  for (const auto& cfg : configs) {
    auto scores = ghqi_under(cfg);
    SensitivityRow row;
    row.config = cfg;
    // Identical rank vectors (including the all-tied cohort) agree perfectly;
    // spearman itself would reject the constant-vector case.
    if (average_ranks(base_scores) == average_ranks(scores)) row.rho = 1.0;
    else row.rho = spearman_rho(base_scores, scores);
    auto pos = descending_positions(models, scores);
    for (size_t i = 0; i < models.size(); ++i)
      row.max_displacement = std::max(row.max_displacement, std::abs(pos[i] - base_pos[i]));
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace rtlgauge
