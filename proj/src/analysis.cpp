#include "rtlgauge/analysis.hpp"

#include <set>

namespace rtlgauge {

std::map<std::string, TaskInfo> build_task_infos(const Manifest& manifest,
                                                 const GoldenCache& goldens,
                                                 const std::string& library) {
  std::map<std::string, TaskInfo> out;
  for (const auto& task : manifest.tasks) {
    TaskInfo info;
    info.weight = task.weight.weight;
    info.category = task.category;
    info.golden = goldens.metrics_for(task.id, library);
    info.has_valid_golden = info.golden.has_value();
    out[task.id] = std::move(info);
  }
  return out;
}

std::map<std::string, std::vector<AttemptScore>> build_attempt_scores(
    const std::vector<AttemptRecord>& records, const std::string& library) {
  std::map<std::string, std::vector<AttemptScore>> out;
  for (const auto& r : records) {
    AttemptScore s;
    s.task_id = r.task;
    s.attempt = r.attempt;
    s.passed_all_gates = r.passed_all_gates();
    s.infra_failure = r.infra;
    auto it = r.metrics_by_library.find(library);
    if (it != r.metrics_by_library.end()) s.metrics = it->second;
    out[r.model].push_back(std::move(s));
  }
  return out;
}

std::vector<ModelSummary> score_journal(const std::vector<AttemptRecord>& records,
                                        const Manifest& manifest, const GoldenCache& goldens,
                                        const std::string& library, int k,
                                        const WeightConfig& w) {
  auto tasks = build_task_infos(manifest, goldens, library);
  auto by_model = build_attempt_scores(records, library);
  std::vector<ModelSummary> out;
  for (const auto& [model, scores] : by_model)
    out.push_back(aggregate_model(model, scores, tasks, k, w));
  return out;
}

std::vector<TaggedFailure> collect_failures(
    const std::vector<AttemptRecord>& records, const Manifest& manifest,
    const std::map<std::string, std::string>& access_type_by_model, const RuleSet& rules) {
  std::vector<TaggedFailure> out;
  for (const auto& r : records) {
    if (r.infra) continue;  // infrastructure errors never enter the taxonomy
    if (!r.trace.syntax_passed()) continue;
    if (!r.trace.synth) continue;
    if (r.trace.synth->status == SynthOutcome::Status::ok ||
        r.trace.synth->status == SynthOutcome::Status::infra)
      continue;
    TaggedFailure t;
    t.tag = classify_failure(*r.trace.synth, rules);
    t.model = r.model;
    t.task = r.task;
    const Task* task = manifest.find(r.task);
    t.benchmark = task ? task->benchmark : "";
    auto it = access_type_by_model.find(r.model);
    t.access_type = it != access_type_by_model.end() ? it->second : "";
    out.push_back(std::move(t));
  }
  return out;
}

XlibReport cross_library_report(const std::vector<AttemptRecord>& records,
                                const Manifest& manifest, const GoldenCache& goldens,
                                const std::string& default_library,
                                const std::vector<std::string>& alternate_libraries, int k,
                                const WeightConfig& w) {
  // verify the journal actually carries the requested libraries
  std::set<std::string> seen;
  for (const auto& r : records)
    for (const auto& [lib, _] : r.metrics_by_library) seen.insert(lib);
  if (!seen.count(default_library))
    throw RankError("library absent from journal: " + default_library);
  for (const auto& lib : alternate_libraries)
    if (!seen.count(lib)) throw RankError("library absent from journal: " + lib);

  XlibReport report;
  report.default_library = default_library;

  std::vector<DesignLibraryMetrics> designs;
  for (const auto& r : records) {
    if (!r.passed_all_gates()) continue;
    DesignLibraryMetrics d;
    d.design_id = r.model + "/" + r.task + "/" + std::to_string(r.attempt);
    for (const auto& [lib, m] : r.metrics_by_library) {
      d.area_by_library[lib] = m.area;
      d.delay_by_library[lib] = m.delay;
    }
    designs.push_back(std::move(d));
  }
  report.per_metric = cross_library_metric_rows(designs, default_library, alternate_libraries);

  std::map<std::string, std::map<std::string, double>> scores_by_library;
  std::vector<std::string> all_libs = {default_library};
  all_libs.insert(all_libs.end(), alternate_libraries.begin(), alternate_libraries.end());
  for (const auto& lib : all_libs) {
    auto tasks = build_task_infos(manifest, goldens, lib);
    auto by_model = build_attempt_scores(records, lib);
    for (const auto& [model, scores] : by_model)
      scores_by_library[lib][model] = aggregate_model(model, scores, tasks, k, w).global_hqi;
  }
  report.model_ranking =
      cross_library_model_rows(scores_by_library, default_library, alternate_libraries);
  return report;
}

}  // namespace rtlgauge
