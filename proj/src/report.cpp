#include "rtlgauge/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rtlgauge/util.hpp"

namespace rtlgauge {

namespace {

std::string pad(const std::string& s, size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string pad_left(const std::string& s, size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

int tier_of(double global_hqi, const TierThresholds& t) {
  if (global_hqi >= t.tier1_min) return 1;
  if (global_hqi < t.tier3_max) return 3;
  return 2;
}

std::vector<LeaderboardRow> leaderboard(const std::vector<ModelSummary>& summaries,
                                        const TierThresholds& tiers) {
  std::vector<LeaderboardRow> rows;
  for (const auto& s : summaries) {
    LeaderboardRow r;
    r.model = s.model_id;
    r.coverage = s.coverage_pct;
    r.global_hqi = s.global_hqi;
    r.expected_hqi = s.expected_hqi;
    r.gap = s.gap;
    r.pass_rate = s.pass_rate_best_of_k;
    r.tier = tier_of(s.global_hqi, tiers);
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end(), [](const LeaderboardRow& a, const LeaderboardRow& b) {
    if (a.global_hqi != b.global_hqi) return a.global_hqi > b.global_hqi;
    return a.model < b.model;
  });
  return rows;
}

std::string render_leaderboard_text(const std::vector<LeaderboardRow>& rows) {
  std::ostringstream out;
  size_t name_w = 5;
  for (const auto& r : rows) name_w = std::max(name_w, r.model.size());
  out << pad("model", name_w) << "  " << pad_left("cov%", 6) << "  " << pad_left("g.hqi", 6)
      << "  " << pad_left("e.hqi", 6) << "  " << pad_left("gap", 6) << "  "
      << pad_left("pass%", 6) << "  tier\n";
  for (const auto& r : rows) {
    out << pad(r.model, name_w) << "  " << pad_left(format_fixed(r.coverage, 1), 6) << "  "
        << pad_left(format_fixed(r.global_hqi, 1), 6) << "  "
        << pad_left(format_fixed(r.expected_hqi, 1), 6) << "  "
        << pad_left(format_fixed(r.gap, 1), 6) << "  "
        << pad_left(format_fixed(r.pass_rate, 1), 6) << "  " << r.tier << "\n";
  }
  return out.str();
}

std::string render_leaderboard_csv(const std::vector<LeaderboardRow>& rows) {
  std::string out = "model,coverage,global_hqi,expected_hqi,gap,pass_rate,tier\n";
  for (const auto& r : rows) {
    out += r.model + "," + format_fixed(r.coverage, 1) + "," + format_fixed(r.global_hqi, 1) +
           "," + format_fixed(r.expected_hqi, 1) + "," + format_fixed(r.gap, 1) + "," +
           format_fixed(r.pass_rate, 1) + "," + std::to_string(r.tier) + "\n";
  }
  return out;
}

HeatmapMatrix heatmap(const std::vector<ModelSummary>& summaries, const TierThresholds& tiers) {
  HeatmapMatrix m;
  auto rows = leaderboard(summaries, tiers);
  std::map<std::string, const ModelSummary*> by_id;
  for (const auto& s : summaries) by_id[s.model_id] = &s;
  for (const auto& r : rows) m.models.push_back(r.model);

  std::map<std::string, std::pair<double, int>> tier1_mean, overall_mean;
  for (const auto& r : rows) {
    const auto& summary = *by_id.at(r.model);
    for (const auto& [cat, score] : summary.per_category) {
      auto& om = overall_mean[cat];
      om.first += score.best_of_k;
      om.second += 1;
      if (r.tier == 1) {
        auto& tm = tier1_mean[cat];
        tm.first += score.best_of_k;
        tm.second += 1;
      }
    }
  }
  bool have_tier1 = !tier1_mean.empty();
  std::vector<std::pair<std::string, double>> cat_order;
  for (const auto& [cat, om] : overall_mean) {
    double key;
    if (have_tier1 && tier1_mean.count(cat) && tier1_mean[cat].second > 0)
      key = tier1_mean[cat].first / tier1_mean[cat].second;
    else
      key = om.second > 0 ? om.first / om.second : 0.0;
    cat_order.emplace_back(cat, key);
  }
  std::sort(cat_order.begin(), cat_order.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  for (const auto& [cat, _] : cat_order) m.categories.push_back(cat);

  auto fill = [&](bool best) {
    std::vector<std::vector<double>> grid;
    for (const auto& cat : m.categories) {
      std::vector<double> row;
      for (const auto& model : m.models) {
        const auto& summary = *by_id.at(model);
        auto it = summary.per_category.find(cat);
        if (it == summary.per_category.end()) row.push_back(-1.0);
        else row.push_back(best ? it->second.best_of_k : it->second.per_attempt);
      }
      grid.push_back(std::move(row));
    }
    return grid;
  };
  m.best_of_k = fill(true);
  m.per_attempt = fill(false);
  return m;
}

std::string heatmap_csv(const HeatmapMatrix& m, bool best_of_k) {
  const auto& grid = best_of_k ? m.best_of_k : m.per_attempt;
  std::string out = "category";
  for (const auto& model : m.models) out += "," + model;
  out += "\n";
  for (size_t r = 0; r < m.categories.size(); ++r) {
    out += m.categories[r];
    for (size_t c = 0; c < m.models.size(); ++c)
      out += "," + (grid[r][c] < 0 ? std::string() : format_fixed(grid[r][c], 1));
    out += "\n";
  }
  return out;
}

std::string render_breakdown_text(const Breakdown& b) {
  std::ostringstream out;
  out << "total failure tags: " << b.total << "\n";
  std::string current_group;
  for (const auto& cell : b.cells) {
    if (cell.group != current_group) {
      current_group = cell.group;
      out << current_group << " (" << b.group_totals.at(current_group) << " tags)\n";
    }
    out << "  " << pad(std::string(to_string(cell.subtype)), 28) << " "
        << pad_left(std::to_string(cell.count), 5) << "  "
        << pad_left(format_fixed(cell.pct_of_group, 1), 6) << "%\n";
  }
  return out.str();
}

// Wide format: one row per group, one column per subtype.
std::string render_breakdown_csv(const Breakdown& b) {
  std::string out = "group,total";
  for (auto s : all_subtypes()) out += "," + std::string(to_string(s));
  out += "\n";
  std::map<std::string, std::map<FailureSubtype, int>> by_group;
  for (const auto& cell : b.cells) by_group[cell.group][cell.subtype] = cell.count;
  for (const auto& [group, counts] : by_group) {
    out += group + "," + std::to_string(b.group_totals.at(group));
    for (auto s : all_subtypes()) {
      auto it = counts.find(s);
      out += "," + std::to_string(it == counts.end() ? 0 : it->second);
    }
    out += "\n";
  }
  return out;
}

std::string render_failure_signatures(const std::vector<TaggedFailure>& tags) {
  std::map<std::string, std::map<FailureSubtype, int>> per_model;
  for (const auto& t : tags) per_model[t.model][t.tag.subtype]++;
  std::ostringstream out;
  out << "per-model failure signatures (dominant subtype)\n";
  for (const auto& [model, counts] : per_model) {
    FailureSubtype top = FailureSubtype::unclassified;
    int best = -1, total = 0;
    for (auto subtype : all_subtypes()) {
      auto it = counts.find(subtype);
      int n = it == counts.end() ? 0 : it->second;
      total += n;
      if (n > best) {
        best = n;
        top = subtype;
      }
    }
    out << "  " << pad(model, 24) << " " << pad_left(std::to_string(total), 4) << " tags, top: "
        << to_string(top) << " (" << best << ")\n";
  }
  return out.str();
}

std::string render_sensitivity_text(const SensitivityReport& report) {
  std::ostringstream out;
  out << "weight sensitivity vs default (w_area=" << format_fixed(report.baseline.w_area, 2)
      << ", w_delay=" << format_fixed(report.baseline.w_delay, 2)
      << ", w_warn=" << format_fixed(report.baseline.w_warn, 2) << ")\n";
  out << pad("config", 22) << "  " << pad_left("rho", 8) << "  max_displacement\n";
  for (const auto& row : report.rows) {
    std::string cfg = "(" + format_fixed(row.config.w_area, 2) + "," +
                      format_fixed(row.config.w_delay, 2) + "," +
                      format_fixed(row.config.w_warn, 2) + ")";
    out << pad(cfg, 22) << "  " << pad_left(format_fixed(row.rho, 4), 8) << "  "
        << row.max_displacement << "\n";
  }
  return out.str();
}

std::string render_sensitivity_csv(const SensitivityReport& report) {
  std::string out = "w_area,w_delay,w_warn,rho,max_displacement\n";
  for (const auto& row : report.rows) {
    out += format_fixed(row.config.w_area, 2) + "," + format_fixed(row.config.w_delay, 2) + "," +
           format_fixed(row.config.w_warn, 2) + "," + format_fixed(row.rho, 4) + "," +
           std::to_string(row.max_displacement) + "\n";
  }
  return out;
}

std::string render_xlib_text(const XlibReport& report) {
  std::ostringstream out;
  out << "cross-library rank agreement (default: " << report.default_library << ")\n";
  out << pad("library", 16) << pad("metric", 8) << pad_left("n", 5) << "  " << pad_left("rho", 8)
      << "  attrition\n";
  for (const auto& r : report.per_metric) {
    out << pad(r.library, 16) << pad(r.metric, 8) << pad_left(std::to_string(r.n), 5) << "  "
        << pad_left(r.rho_defined ? format_fixed(r.rho, 4) : "undef", 8) << "  " << r.attrition
        << "\n";
  }
  out << "model-ranking agreement (GlobalHQI recomputed per library)\n";
  for (const auto& r : report.model_ranking) {
    out << pad(r.library, 16) << pad("models", 8) << pad_left(std::to_string(r.n_models), 5)
        << "  " << pad_left(r.rho_defined ? format_fixed(r.rho, 4) : "undef", 8) << "\n";
  }
  return out.str();
}

std::string render_xlib_csv(const XlibReport& report) {
  std::string out = "library,metric,n,rho,attrition\n";
  for (const auto& r : report.per_metric) {
    out += r.library + "," + r.metric + "," + std::to_string(r.n) + "," +
           (r.rho_defined ? format_fixed(r.rho, 4) : "") + "," + std::to_string(r.attrition) +
           "\n";
  }
  for (const auto& r : report.model_ranking) {
    out += r.library + ",model_ranking," + std::to_string(r.n_models) + "," +
           (r.rho_defined ? format_fixed(r.rho, 4) : "") + ",0\n";
  }
  return out;
}

}  // namespace rtlgauge
