#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rtlgauge {

class RankError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Average ranks (1-based, ascending by score); ties get the mean of the
// positions they occupy. Sum of ranks is always n(n+1)/2.
std::vector<double> average_ranks(std::span<const double> scores);

// Tie-aware Spearman: Pearson correlation of the average-rank vectors.
// Throws RankError when n < 2, sizes differ, or either vector is constant.
double spearman_rho(std::span<const double> a, std::span<const double> b);

// Leaderboard positions (1 = highest score), ties broken by subject id so
// displacement figures are deterministic.
std::vector<int> descending_positions(const std::vector<std::string>& ids,
                                      const std::vector<double>& scores);

struct XlibMetricRow {
  std::string library;
  std::string metric;  // "area" or "delay"
  int n = 0;           // designs with metrics under both libraries
  double rho = 0.0;
  int attrition = 0;   // passed default but missing/failed under this library
  bool rho_defined = true;
};

struct XlibModelRow {
  std::string library;
  int n_models = 0;
  double rho = 0.0;
  bool rho_defined = true;
};

struct XlibReport {
  std::string default_library;
  std::vector<XlibMetricRow> per_metric;
  std::vector<XlibModelRow> model_ranking;
};

// Per-design metric values for one design under several libraries.
struct DesignLibraryMetrics {
  std::string design_id;  // model/task/attempt
  std::map<std::string, double> area_by_library;
  std::map<std::string, double> delay_by_library;
};

// Rank-agreement of per-design area and delay between the default library
// and each alternate. Designs lacking an alternate-library result are
// excluded from that library's rho and counted as attrition.
std::vector<XlibMetricRow> cross_library_metric_rows(
    const std::vector<DesignLibraryMetrics>& designs,
    const std::string& default_library,
    const std::vector<std::string>& alternate_libraries);

// Rank-agreement of model scores (e.g. GlobalHQI recomputed per library).
// `scores_by_library[lib][model]` must cover the same model set per library.
std::vector<XlibModelRow> cross_library_model_rows(
    const std::map<std::string, std::map<std::string, double>>& scores_by_library,
    const std::string& default_library,
    const std::vector<std::string>& alternate_libraries);

}  // namespace rtlgauge
