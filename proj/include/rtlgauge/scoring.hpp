#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtlgauge/backend.hpp"

namespace rtlgauge {

// Coefficients of the HQI cost. Default (0.5, 0.5, 0.1).
struct WeightConfig {
  double w_area = 0.5;
  double w_delay = 0.5;
  double w_warn = 0.1;
};

struct HQIScore {
  double value = 0.0;  // 0..100; NaN when the task has no valid golden
  double area_ratio = 0.0;
  double delay_ratio = 0.0;
  double excess_warnings = 0.0;
  bool has_components = false;  // false for gate failures
};

struct CategoryScore {
  double best_of_k = 0.0;
  double per_attempt = 0.0;
  double weight_mass = 0.0;  // sum of C_t over the category's golden tasks
  int golden_tasks = 0;
};

struct ModelSummary {
  std::string model_id;
  double coverage_pct = 0.0;
  double global_hqi = 0.0;
  double expected_hqi = 0.0;
  double pass_rate_best_of_k = 0.0;   // complexity-weighted, same denominator as coverage
  double pass_rate_unweighted = 0.0;  // plain fraction of tasks solved, report option
  double gap = 0.0;                   // global_hqi - expected_hqi
  std::map<std::string, CategoryScore> per_category;
  std::vector<std::string> category_notes;  // categories omitted for lack of goldens
};

// Minimal per-attempt facts needed by the aggregates.
struct AttemptScore {
  std::string task_id;
  int attempt = 0;
  bool passed_all_gates = false;
  std::optional<SynthMetrics> metrics;  // default-library metrics when synth succeeded
  bool infra_failure = false;
};

struct TaskInfo {
  double weight = 1.0;
  bool has_valid_golden = false;
  std::string category;
  std::optional<SynthMetrics> golden;  // default-library golden metrics
};

class IncompleteCampaignError : public std::runtime_error {
 public:
  IncompleteCampaignError(const std::string& task, int have, int want)
      : std::runtime_error("incomplete campaign: task '" + task + "' has " +
                           std::to_string(have) + " of " + std::to_string(want) +
                           " attempts"),
        task_(task), have_(have) {}
  const std::string& task() const { return task_; }
  int have() const { return have_; }

 private:
  std::string task_;
  int have_;
};

class UnresolvedInfraError : public std::runtime_error {
 public:
  explicit UnresolvedInfraError(const std::string& what) : std::runtime_error(what) {}
};

// cost = w_area * a/a* + w_delay * d/d* + w_warn * max(0, w - w*);
// HQI = min(100/cost, 100). Gate failure -> 0; no golden -> NaN. Golden delay
// below 1e-9 is floored (both sides) so parity still scores 1.
HQIScore attempt_hqi(const std::optional<SynthMetrics>& attempt,
                     const std::optional<SynthMetrics>& golden,
                     const WeightConfig& w = {});

// Aggregates one model's records. Requires exactly k records per task listed
// in `tasks`; throws IncompleteCampaignError naming the first offender.
// Throws UnresolvedInfraError if any record is an unresolved infrastructure
// failure (those attempts must be re-run, never scored).
ModelSummary aggregate_model(const std::string& model_id,
                             const std::vector<AttemptScore>& records,
                             const std::map<std::string, TaskInfo>& tasks, int k,
                             const WeightConfig& w = {});

// Weighted (best-of-k, per-attempt) HQI means per category over the
// category's golden tasks.
std::map<std::string, CategoryScore> per_category_scores(
    const std::vector<AttemptScore>& records,
    const std::map<std::string, TaskInfo>& tasks, int k, const WeightConfig& w = {});

struct SensitivityRow {
  WeightConfig config;
  double rho = 1.0;
  int max_displacement = 0;
};

struct SensitivityReport {
  WeightConfig baseline;
  std::vector<SensitivityRow> rows;
};

// The ten shipped weight configurations: the default, area-only, delay-only,
// the 3x warning penalty, and a (w_area, w_delay) sweep bracketing the
// default at both warning levels.
std::vector<WeightConfig> default_sensitivity_configs();

// Re-ranks models under each config and reports Spearman rho and maximum
// rank displacement against the default-config ranking. Throws RankError
// via spearman when fewer than 2 models are supplied.
SensitivityReport weight_sensitivity(
    const std::map<std::string, std::vector<AttemptScore>>& records_by_model,
    const std::map<std::string, TaskInfo>& tasks, int k,
    const std::vector<WeightConfig>& configs = default_sensitivity_configs());

}  // namespace rtlgauge
