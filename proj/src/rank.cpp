#include "rtlgauge/rank.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rtlgauge {

std::vector<double> average_ranks(std::span<const double> scores) {
  const size_t n = scores.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return scores[a] < scores[b]; });
  std::vector<double> ranks(n, 0.0);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) ++j;
    double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

double spearman_rho(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw RankError("spearman: size mismatch");
  const size_t n = a.size();
  if (n < 2) throw RankError("spearman: need at least 2 subjects");
  auto ra = average_ranks(a);
  auto rb = average_ranks(b);
  double ma = 0, mb = 0;
  for (size_t i = 0; i < n; ++i) {
    ma += ra[i];
    mb += rb[i];
  }
  ma /= static_cast<double>(n);
  mb /= static_cast<double>(n);
  double cov = 0, va = 0, vb = 0;
  for (size_t i = 0; i < n; ++i) {
    double da = ra[i] - ma, db = rb[i] - mb;
    cov += da * db;
    va += da * da;
    vb += db * db;
  }
  if (va == 0.0 || vb == 0.0)
    throw RankError("spearman: correlation undefined for a constant vector");
  return cov / std::sqrt(va * vb);
}

std::vector<int> descending_positions(const std::vector<std::string>& ids,
                                      const std::vector<double>& scores) {
  const size_t n = ids.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    if (scores[x] != scores[y]) return scores[x] > scores[y];
    return ids[x] < ids[y];
  });
  std::vector<int> pos(n, 0);
  for (size_t p = 0; p < n; ++p) pos[order[p]] = static_cast<int>(p + 1);
  return pos;
}

std::vector<XlibMetricRow> cross_library_metric_rows(
    const std::vector<DesignLibraryMetrics>& designs,
    const std::string& default_library,
    const std::vector<std::string>& alternate_libraries) {
  std::vector<XlibMetricRow> rows;
  for (const auto& lib : alternate_libraries) {
    for (const char* metric : {"area", "delay"}) {
      XlibMetricRow row;
      row.library = lib;
      row.metric = metric;
      std::vector<double> def, alt;
      for (const auto& d : designs) {
        const auto& by_lib = std::string(metric) == "area" ? d.area_by_library : d.delay_by_library;
        auto itd = by_lib.find(default_library);
        if (itd == by_lib.end()) continue;  // never passed the default gate
        auto ita = by_lib.find(lib);
        if (ita == by_lib.end()) {
          ++row.attrition;
          continue;
        }
        def.push_back(itd->second);
        alt.push_back(ita->second);
      }
      row.n = static_cast<int>(def.size());
      try {
        row.rho = spearman_rho(def, alt);
      } catch (const RankError&) {
        row.rho_defined = false;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<XlibModelRow> cross_library_model_rows(
    const std::map<std::string, std::map<std::string, double>>& scores_by_library,
    const std::string& default_library,
    const std::vector<std::string>& alternate_libraries) {
  std::vector<XlibModelRow> rows;
  auto it_def = scores_by_library.find(default_library);
  if (it_def == scores_by_library.end())
    throw RankError("library absent from scores: " + default_library);
  for (const auto& lib : alternate_libraries) {
    auto it_alt = scores_by_library.find(lib);
    if (it_alt == scores_by_library.end())
      throw RankError("library absent from scores: " + lib);
    std::vector<double> def, alt;
    for (const auto& [model, score] : it_def->second) {
      auto it = it_alt->second.find(model);
      if (it == it_alt->second.end()) continue;
      def.push_back(score);
      alt.push_back(it->second);
    }
    XlibModelRow row;
    row.library = lib;
    row.n_models = static_cast<int>(def.size());
    try {
      row.rho = spearman_rho(def, alt);
    } catch (const RankError&) {
      row.rho_defined = false;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace rtlgauge
