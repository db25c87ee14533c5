#include <cstdio>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rtlgauge/analysis.hpp"
#include "rtlgauge/config.hpp"
#include "rtlgauge/report.hpp"
#include "rtlgauge/runner.hpp"
#include "rtlgauge/util.hpp"

using namespace rtlgauge;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIncomplete = 2;
constexpr int kExitInfra = 3;

std::vector<ModelSpec> load_model_specs(const std::string& models_path, bool pregen_mode) {
  auto cfg = ModelsConfig::load(models_path);
  std::vector<ModelSpec> specs;
  for (const auto& e : cfg.models) {
    ModelSpec s;
    s.id = e.id;
    s.access_type = e.access_type;
    if (!pregen_mode) s.endpoint = e;
    specs.push_back(std::move(s));
  }
  return specs;
}

std::map<std::string, std::string> access_types(const std::vector<ModelSpec>& specs) {
  std::map<std::string, std::string> out;
  for (const auto& s : specs) out[s.id] = s.access_type;
  return out;
}

std::filesystem::path summary_path(const std::filesystem::path& journal) {
  auto p = journal;
  p += ".summary.json";
  return p;
}

void write_summaries(const std::filesystem::path& path, const std::vector<ModelSummary>& summaries,
                     int k, const std::string& library) {
  json j;
  j["schema"] = 1;
  j["k"] = k;
  j["library"] = library;
  json models = json::array();
  for (const auto& s : summaries) {
    json m;
    m["model"] = s.model_id;
    m["coverage_pct"] = s.coverage_pct;
    m["global_hqi"] = s.global_hqi;
    m["expected_hqi"] = s.expected_hqi;
    m["gap"] = s.gap;
    m["pass_rate_best_of_k"] = s.pass_rate_best_of_k;
    m["pass_rate_unweighted"] = s.pass_rate_unweighted;
    json cats;
    for (const auto& [cat, c] : s.per_category)
      cats[cat] = {{"best_of_k", c.best_of_k},
                   {"per_attempt", c.per_attempt},
                   {"weight_mass", c.weight_mass},
                   {"golden_tasks", c.golden_tasks}};
    m["per_category"] = cats;
    if (!s.category_notes.empty()) m["category_notes"] = s.category_notes;
    models.push_back(std::move(m));
  }
  j["models"] = models;
  write_text_file(path, j.dump(2) + "\n");
}

std::vector<ModelSummary> read_summaries(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path))
    throw ConfigError("no scored summary at " + path.string() + "; run `rtlgauge score` first");
  json j = json::parse(read_text_file(path));
  std::vector<ModelSummary> out;
  for (const auto& m : j["models"]) {
    ModelSummary s;
    s.model_id = m.value("model", "");
    s.coverage_pct = m.value("coverage_pct", 0.0);
    s.global_hqi = m.value("global_hqi", 0.0);
    s.expected_hqi = m.value("expected_hqi", 0.0);
    s.gap = m.value("gap", 0.0);
    s.pass_rate_best_of_k = m.value("pass_rate_best_of_k", 0.0);
    s.pass_rate_unweighted = m.value("pass_rate_unweighted", 0.0);
    if (m.contains("per_category")) {
      for (auto& [cat, c] : m["per_category"].items()) {
        CategoryScore cs;
        cs.best_of_k = c.value("best_of_k", 0.0);
        cs.per_attempt = c.value("per_attempt", 0.0);
        cs.weight_mass = c.value("weight_mass", 0.0);
        cs.golden_tasks = c.value("golden_tasks", 0);
        s.per_category[cat] = cs;
      }
    }
    if (m.contains("category_notes"))
      s.category_notes = m["category_notes"].get<std::vector<std::string>>();
    out.push_back(std::move(s));
  }
  return out;
}

RuleSet load_rules(const std::string& rules_path) {
  if (!rules_path.empty()) return RuleSet::load(rules_path);
  return RuleSet::builtin();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rtlgauge - synthesis-in-the-loop evaluation harness for generated RTL"};
  app.require_subcommand(1);

  std::string config_path, journal_path, manifest_path, models_path, rules_path;
  int workers = 0;
  bool keep_artifacts = false, force_mock = false;
  app.add_option("--config", config_path, "harness config file (JSON)");
  app.add_option("--journal", journal_path, "journal path (JSONL)");
  app.add_option("--workers", workers, "worker pool size override");
  app.add_flag("--keep-artifacts", keep_artifacts, "retain scratch dirs of failing stages");
  app.add_flag("--mock", force_mock, "force the deterministic mock backend");

  // run
  auto* run = app.add_subcommand("run", "run a generation campaign");
  std::string pregen_dir;
  int k_override = 0;
  long limit = 0;
  std::vector<std::string> libraries;
  run->add_option("--manifest", manifest_path, "task manifest")->required();
  run->add_option("--models", models_path, "models config (ids, access types, endpoints)")
      ->required();
  run->add_option("--pregen", pregen_dir, "pre-generated attempts directory");
  run->add_option("-k,--attempts", k_override, "attempts per (model, task)");
  run->add_option("--limit", limit, "stop after N new records (testing/ops)");
  run->add_option("--libraries", libraries, "libraries to synthesize (first = default)");

  // golden
  auto* golden = app.add_subcommand("golden", "compute the golden reference cache");
  std::string golden_out;
  golden->add_option("--manifest", manifest_path, "task manifest")->required();
  golden->add_option("--out", golden_out, "golden cache output path")->required();
  golden->add_option("--libraries", libraries, "libraries to synthesize (first = default)");

  // score
  auto* score = app.add_subcommand("score", "aggregate model summaries from a journal");
  std::string golden_cache_path;
  score->add_option("--manifest", manifest_path, "task manifest")->required();
  score->add_option("--golden-cache", golden_cache_path, "golden cache")->required();
  score->add_option("-k,--attempts", k_override, "attempts per (model, task)");

  // classify
  auto* classify = app.add_subcommand("classify", "classify genuine synthesis failures");
  classify->add_option("--manifest", manifest_path, "task manifest")->required();
  classify->add_option("--models", models_path, "models config (for access types)")->required();
  classify->add_option("--rules", rules_path, "taxonomy rule file");

  // report
  auto* report = app.add_subcommand("report", "emit reports from a scored journal");
  std::string what, csv_out, out_dir, group_by = "subtype";
  report->add_option("kind", what, "leaderboard|heatmap|failures|inference")->required();
  report->add_option("--csv", csv_out, "also write CSV here");
  report->add_option("--out-dir", out_dir, "directory for multi-file outputs");
  report->add_option("--group-by", group_by, "failures grouping: model|benchmark|access_type|subtype");
  report->add_option("--manifest", manifest_path, "task manifest (failures)");
  report->add_option("--models", models_path, "models config (failures)");
  report->add_option("--rules", rules_path, "taxonomy rule file (failures)");

  // sensitivity
  auto* sensitivity = app.add_subcommand("sensitivity", "weight-sensitivity analysis");
  std::string configs_path;
  sensitivity->add_option("--manifest", manifest_path, "task manifest")->required();
  sensitivity->add_option("--golden-cache", golden_cache_path, "golden cache")->required();
  sensitivity->add_option("-k,--attempts", k_override, "attempts per (model, task)");
  sensitivity->add_option("--configs", configs_path, "JSON list of weight configs");
  sensitivity->add_option("--csv", csv_out, "also write CSV here");

  // xlib
  auto* xlib = app.add_subcommand("xlib", "cross-library rank agreement");
  std::vector<std::string> alt_libs;
  xlib->add_option("--manifest", manifest_path, "task manifest")->required();
  xlib->add_option("--golden-cache", golden_cache_path, "golden cache")->required();
  xlib->add_option("--libraries", alt_libs, "alternate libraries")->required();
  xlib->add_option("-k,--attempts", k_override, "attempts per (model, task)");
  xlib->add_option("--csv", csv_out, "also write CSV here");

  CLI11_PARSE(app, argc, argv);

  try {
    Config cfg = config_path.empty() ? Config::defaults() : Config::load(config_path);
    if (workers > 0) cfg.workers = workers;
    if (k_override > 0) cfg.k = k_override;
    cfg.external.keep_artifacts = keep_artifacts;
    if (!libraries.empty()) {
      cfg.libraries = libraries;
      cfg.toolchain.default_library = libraries.front();
    }

    if (run->parsed()) {
      if (journal_path.empty()) throw ConfigError("run: --journal is required");
      auto manifest = Manifest::load(manifest_path);
      auto specs = load_model_specs(models_path, !pregen_dir.empty());
      auto backend = cfg.make_backend(force_mock);
      CampaignOptions opts;
      opts.k = cfg.k;
      opts.workers = cfg.workers;
      opts.max_jobs = limit;
      opts.libraries = cfg.libraries;
      opts.pregen_dir = pregen_dir;
      opts.deterministic_clock = force_mock || cfg.mode == "mock";
      opts.retry = cfg.retry;
      auto stats = run_campaign(manifest, specs, *backend, cfg.toolchain, opts, journal_path);
      std::printf("executed %ld attempt(s), skipped %ld (resume), %ld infrastructure failure(s)\n",
                  stats.executed, stats.skipped_resume, stats.infra_failures);
      if (stats.infra_failures > 0) {
        std::fprintf(stderr, "infrastructure failures present; re-run to resolve before scoring\n");
        return kExitInfra;
      }
      return kExitOk;
    }

    if (golden->parsed()) {
      auto manifest = Manifest::load(manifest_path);
      auto backend = cfg.make_backend(force_mock);
      std::vector<std::string> extra(cfg.libraries.begin(), cfg.libraries.end());
      auto cache = compute_golden_metrics(manifest, *backend, cfg.toolchain, extra);
      cache.save(golden_out);
      int valid = 0;
      for (const auto& [id, e] : cache.tasks) valid += e.valid ? 1 : 0;
      std::printf("golden cache: %d valid, %zu coverage-only\n", valid,
                  cache.tasks.size() - static_cast<size_t>(valid));
      return kExitOk;
    }

    if (score->parsed()) {
      if (journal_path.empty()) throw ConfigError("score: --journal is required");
      auto manifest = Manifest::load(manifest_path);
      auto goldens = GoldenCache::load(golden_cache_path);
      auto records = Journal::effective_records(Journal::read(journal_path));
      auto summaries = score_journal(records, manifest, goldens, cfg.toolchain.default_library,
                                     cfg.k, cfg.weights);
      write_summaries(summary_path(journal_path), summaries, cfg.k,
                      cfg.toolchain.default_library);
      std::printf("scored %zu model(s) -> %s\n", summaries.size(),
                  summary_path(journal_path).string().c_str());
      return kExitOk;
    }

    if (classify->parsed()) {
      if (journal_path.empty()) throw ConfigError("classify: --journal is required");
      auto manifest = Manifest::load(manifest_path);
      auto specs = load_model_specs(models_path, true);
      auto rules = load_rules(rules_path);
      auto records = Journal::effective_records(Journal::read(journal_path));
      auto tags = collect_failures(records, manifest, access_types(specs), rules);
      for (const auto& t : tags)
        std::printf("%s %s -> %s%s%s\n", t.model.c_str(), t.task.c_str(),
                    std::string(to_string(t.tag.subtype)).c_str(),
                    t.tag.evidence.empty() ? "" : " | ", t.tag.evidence.c_str());
      auto breakdown = taxonomy_breakdown(tags, GroupBy::subtype);
      std::fputs(render_breakdown_text(breakdown).c_str(), stdout);
      return kExitOk;
    }

    if (report->parsed()) {
      if (journal_path.empty()) throw ConfigError("report: --journal is required");
      if (what == "leaderboard") {
        auto summaries = read_summaries(summary_path(journal_path));
        if (summaries.empty()) std::fprintf(stderr, "warning: empty journal summary\n");
        auto rows = leaderboard(summaries, cfg.tiers);
        std::fputs(render_leaderboard_text(rows).c_str(), stdout);
        if (!csv_out.empty()) write_text_file(csv_out, render_leaderboard_csv(rows));
      } else if (what == "heatmap") {
        auto summaries = read_summaries(summary_path(journal_path));
        auto m = heatmap(summaries, cfg.tiers);
        std::filesystem::path dir = out_dir.empty() ? "." : out_dir;
        write_text_file(dir / "heatmap_best_of_k.csv", heatmap_csv(m, true));
        write_text_file(dir / "heatmap_per_attempt.csv", heatmap_csv(m, false));
        std::printf("wrote %s and %s\n", (dir / "heatmap_best_of_k.csv").string().c_str(),
                    (dir / "heatmap_per_attempt.csv").string().c_str());
        if (!summaries.empty())
          for (const auto& note : summaries.front().category_notes)
            std::printf("note: %s\n", note.c_str());
      } else if (what == "failures") {
        if (manifest_path.empty() || models_path.empty())
          throw ConfigError("report failures: --manifest and --models are required");
        auto manifest = Manifest::load(manifest_path);
        auto specs = load_model_specs(models_path, true);
        auto rules = load_rules(rules_path);
        auto records = Journal::effective_records(Journal::read(journal_path));
        auto tags = collect_failures(records, manifest, access_types(specs), rules);
        auto breakdown = taxonomy_breakdown(tags, group_by_from_string(group_by));
        std::fputs(render_breakdown_text(breakdown).c_str(), stdout);
        std::fputs(render_failure_signatures(tags).c_str(), stdout);
        if (!csv_out.empty()) write_text_file(csv_out, render_breakdown_csv(breakdown));
      } else if (what == "inference") {
        auto records = Journal::effective_records(Journal::read(journal_path));
        auto rows = summarize_inference(records);
        std::printf("%-24s %5s %12s %10s %10s %10s %22s\n", "model", "n", "med_cost", "reason",
                    "med_tok/s", "med_ttft", "completion p25/50/75");
        for (const auto& r : rows) {
          std::printf("%-24s %5d %12.6f %9.2f%s %10.1f %10.3f %7.0f/%.0f/%.0f\n",
                      r.model.c_str(), r.n, r.median_cost_usd, r.reasoning_ratio,
                      r.non_reasoning ? "*" : " ", r.median_throughput_tok_s, r.median_ttft_s,
                      r.completion_tokens_p25, r.completion_tokens_p50, r.completion_tokens_p75);
        }
        if (!rows.empty()) std::printf("(* = non-reasoning model)\n");
      } else {
        throw ConfigError("unknown report kind: " + what);
      }
      return kExitOk;
    }

    if (sensitivity->parsed()) {
      if (journal_path.empty()) throw ConfigError("sensitivity: --journal is required");
      auto manifest = Manifest::load(manifest_path);
      auto goldens = GoldenCache::load(golden_cache_path);
      auto records = Journal::effective_records(Journal::read(journal_path));
      auto tasks = build_task_infos(manifest, goldens, cfg.toolchain.default_library);
      auto by_model = build_attempt_scores(records, cfg.toolchain.default_library);
      std::vector<WeightConfig> configs = default_sensitivity_configs();
      if (!configs_path.empty()) {
        json j = json::parse(read_text_file(configs_path));
        configs.clear();
        for (const auto& e : j)
          configs.push_back(WeightConfig{e.value("area", 0.5), e.value("delay", 0.5),
                                         e.value("warn", 0.1)});
      }
      auto rep = weight_sensitivity(by_model, tasks, cfg.k, configs);
      std::fputs(render_sensitivity_text(rep).c_str(), stdout);
      if (!csv_out.empty()) write_text_file(csv_out, render_sensitivity_csv(rep));
      return kExitOk;
    }

    if (xlib->parsed()) {
      if (journal_path.empty()) throw ConfigError("xlib: --journal is required");
      auto manifest = Manifest::load(manifest_path);
      auto goldens = GoldenCache::load(golden_cache_path);
      auto records = Journal::effective_records(Journal::read(journal_path));
      auto rep = cross_library_report(records, manifest, goldens,
                                      cfg.toolchain.default_library, alt_libs, cfg.k,
                                      cfg.weights);
      std::fputs(render_xlib_text(rep).c_str(), stdout);
      if (!csv_out.empty()) write_text_file(csv_out, render_xlib_csv(rep));
      return kExitOk;
    }
  } catch (const IncompleteCampaignError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIncomplete;
  } catch (const UnresolvedInfraError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInfra;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
