#pragma once

#include <string>
#include <vector>

#include "rtlgauge/rank.hpp"
#include "rtlgauge/scoring.hpp"
#include "rtlgauge/taxonomy.hpp"

namespace rtlgauge {

// Tier thresholds are presentation defaults, configurable per run.
struct TierThresholds {
  double tier1_min = 71.0;
  double tier3_max = 53.0;  // tier 3 strictly below this
};

int tier_of(double global_hqi, const TierThresholds& t = {});

struct LeaderboardRow {
  std::string model;
  double coverage = 0.0;
  double global_hqi = 0.0;
  double expected_hqi = 0.0;
  double gap = 0.0;
  double pass_rate = 0.0;
  int tier = 2;
};

// Sorted by GlobalHQI descending (ties by model id).
std::vector<LeaderboardRow> leaderboard(const std::vector<ModelSummary>& summaries,
                                        const TierThresholds& tiers = {});
std::string render_leaderboard_text(const std::vector<LeaderboardRow>& rows);
std::string render_leaderboard_csv(const std::vector<LeaderboardRow>& rows);

struct HeatmapMatrix {
  std::vector<std::string> models;      // columns, GlobalHQI descending
  std::vector<std::string> categories;  // rows, ordered per the tiering rule
  // cell[row][col]; negative = category has no golden tasks for that model
  std::vector<std::vector<double>> best_of_k;
  std::vector<std::vector<double>> per_attempt;
};

// Column order: models by GlobalHQI descending. Row order: categories by
// mean tier-1 score descending when any tier-1 model exists, else by
// overall mean.
HeatmapMatrix heatmap(const std::vector<ModelSummary>& summaries,
                      const TierThresholds& tiers = {});
std::string heatmap_csv(const HeatmapMatrix& m, bool best_of_k);

std::string render_breakdown_text(const Breakdown& b);
std::string render_breakdown_csv(const Breakdown& b);

// Per-model signatures: the dominant subtype per model.
std::string render_failure_signatures(const std::vector<TaggedFailure>& tags);

std::string render_sensitivity_text(const SensitivityReport& report);
std::string render_sensitivity_csv(const SensitivityReport& report);

std::string render_xlib_text(const XlibReport& report);
std::string render_xlib_csv(const XlibReport& report);

}  // namespace rtlgauge
