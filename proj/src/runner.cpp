#include "rtlgauge/runner.hpp"

#include <atomic>
#include <chrono>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "rtlgauge/extract.hpp"
#include "rtlgauge/util.hpp"

namespace rtlgauge {

namespace {

using nlohmann::json;

long now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

struct Job {
  const ModelSpec* model;
  const Task* task;
  int attempt;
};

InferenceMeta read_meta_sidecar(const std::filesystem::path& path) {
  InferenceMeta meta;
  if (!std::filesystem::exists(path)) return meta;
  json j = json::parse(read_text_file(path));
  meta.present = true;
  meta.cost_usd = j.value("cost_usd", 0.0);
  meta.reasoning_tokens = j.value("reasoning_tokens", 0L);
  meta.completion_tokens = j.value("completion_tokens", 0L);
  meta.throughput_tok_s = j.value("throughput_tok_s", 0.0);
  meta.ttft_s = j.value("ttft_s", 0.0);
  return meta;
}

}  // namespace

CampaignStats run_campaign(const Manifest& manifest, const std::vector<ModelSpec>& models,
                           Backend& backend, const ToolchainConfig& toolchain,
                           const CampaignOptions& options,
                           const std::filesystem::path& journal_path) {
  CampaignStats stats;

  // resume: completed (non-infra) keys are never re-executed
  auto existing = Journal::read(journal_path);
  std::set<std::string> done;
  for (const auto& r : Journal::effective_records(existing))
    if (!r.infra) done.insert(r.key());

  std::vector<Job> jobs;
  for (const auto& m : models)
    for (const auto& t : manifest.tasks)
      for (int a = 1; a <= options.k; ++a) {
        AttemptRecord probe;
        probe.model = m.id;
        probe.task = t.id;
        probe.attempt = a;
        if (done.count(probe.key())) {
          ++stats.skipped_resume;
          continue;
        }
        jobs.push_back(Job{&m, &t, a});
      }
  if (options.max_jobs > 0 && static_cast<long>(jobs.size()) > options.max_jobs)
    jobs.resize(static_cast<size_t>(options.max_jobs));

  Journal::Writer writer(journal_path);
  std::atomic<size_t> next{0};
  std::atomic<long> infra_count{0};

  auto execute = [&](const Job& job) {
    AttemptRecord rec;
    rec.model = job.model->id;
    rec.task = job.task->id;
    rec.attempt = job.attempt;
    rec.started_ms = options.deterministic_clock ? 0 : now_ms();
    auto t0 = std::chrono::steady_clock::now();
    const std::string origin =
        job.model->id + "/" + job.task->id + "/attempt_" + std::to_string(job.attempt);

    // 1. obtain the generation
    if (!options.pregen_dir.empty()) {
      auto base = options.pregen_dir / job.model->id / job.task->id;
      auto v_path = base / ("attempt_" + std::to_string(job.attempt) + ".v");
      if (!std::filesystem::exists(v_path)) {
        rec.infra = true;
        rec.infra_reason = "pregen file missing: " + v_path.string();
      } else {
        rec.gen.raw_response = read_text_file(v_path);
        rec.gen.inference =
            read_meta_sidecar(base / ("attempt_" + std::to_string(job.attempt) + ".meta"));
      }
    } else if (job.model->endpoint) {
      auto prompt = read_text_file(job.task->prompt_path);
      auto chat = chat_complete(*job.model->endpoint, prompt, options.retry);
      rec.gen.sampling_temperature = job.model->endpoint->temperature;
      if (job.model->endpoint->max_tokens)
        rec.gen.sampling_max_tokens = *job.model->endpoint->max_tokens;
      if (!chat.ok) {
        rec.infra = true;
        rec.infra_reason = "endpoint failure after " + std::to_string(chat.attempts_used) +
                           " attempt(s): " + chat.error;
      } else {
        rec.gen.raw_response = chat.content;
        rec.gen.inference = chat.inference;
      }
    } else {
      rec.infra = true;
      rec.infra_reason = "no generation source (neither pregen nor endpoint)";
    }

    // 2. extract + gates
    if (!rec.infra) {
      auto extracted = extract_code(rec.gen.raw_response, origin);
      if (!extracted.source) {
        rec.gen.extraction_error = extracted.error;
        SyntaxOutcome fail;
        fail.status = SyntaxOutcome::Status::fail;
        fail.diagnostics = "[rtlgauge] extraction failure: " + extracted.error;
        rec.trace.syntax = fail;
      } else {
        rec.gen.extracted = extracted.source;
        GateJob gate_job;
        gate_job.expected_top = job.task->expected_top;
        gate_job.testbench = VerilogSource{read_text_file(job.task->testbench_path),
                                           "testbench:" + job.task->id};
        gate_job.pass_patterns = job.task->pass_patterns;
        gate_job.fail_patterns = job.task->fail_patterns;
        rec.trace = run_gates(*extracted.source, gate_job, backend, toolchain);
        if (rec.trace.infra_failure()) {
          rec.infra = true;
          rec.infra_reason = "backend infrastructure failure";
        }
        if (rec.trace.syntax_passed() && rec.trace.synth &&
            (rec.trace.synth->status == SynthOutcome::Status::error ||
             rec.trace.synth->status == SynthOutcome::Status::timeout)) {
          rec.failure_tag = classify_failure(*rec.trace.synth, RuleSet::builtin());
          rec.failure_rules_version = RuleSet::builtin().version;
        }
        if (rec.trace.synth_ok()) {
          rec.metrics_by_library[toolchain.default_library] = *rec.trace.synth->metrics;
          if (rec.trace.passed_all()) {
            std::vector<std::string> extra;
            for (const auto& lib : options.libraries)
              if (lib != toolchain.default_library) extra.push_back(lib);
            auto more = synthesize_all_libraries(*extracted.source, rec.trace.top_module, extra,
                                                 backend, toolchain.synth_timeout_s);
            for (const auto& [lib, outcome] : more)
              if (outcome.status == SynthOutcome::Status::ok)
                rec.metrics_by_library[lib] = *outcome.metrics;
          }
        }
      }
    }

    if (options.deterministic_clock) {
      double nominal = 0;
      if (rec.trace.synth) nominal += rec.trace.synth->wall_s;
      if (rec.trace.sim) nominal += rec.trace.sim->wall_s;
      rec.elapsed_ms = static_cast<long>(nominal * 1000.0);
    } else {
      rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    }
    if (rec.infra) infra_count.fetch_add(1);
    writer.append(rec);
  };

  int workers = std::max(1, options.workers);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        size_t idx = next.fetch_add(1);
        if (idx >= jobs.size()) return;
        execute(jobs[idx]);
      }
    });
  }
  for (auto& th : pool) th.join();

  stats.executed = static_cast<long>(jobs.size());
  stats.infra_failures = infra_count.load();

  // canonicalize once the run is complete (no pending jobs were truncated)
  if (options.max_jobs == 0 || stats.executed < options.max_jobs)
    Journal::write_canonical(journal_path, Journal::read(journal_path));
  return stats;
}

GoldenCache compute_golden_metrics(const Manifest& manifest, Backend& backend,
                                   const ToolchainConfig& toolchain,
                                   const std::vector<std::string>& extra_libraries) {
  GoldenCache cache;
  for (const auto& task : manifest.tasks) {
    GoldenEntry entry;
    if (!task.golden_rtl_path) {
      entry.valid = false;
      entry.reason = "no golden reference";
      cache.tasks[task.id] = std::move(entry);
      continue;
    }
    VerilogSource golden{read_text_file(*task.golden_rtl_path), "golden:" + task.id};
    GateJob job;
    job.expected_top = task.expected_top;
    job.testbench = VerilogSource{read_text_file(task.testbench_path), "testbench:" + task.id};
    job.pass_patterns = task.pass_patterns;
    job.fail_patterns = task.fail_patterns;
    auto trace = run_gates(golden, job, backend, toolchain);
    if (!trace.passed_all()) {
      entry.valid = false;
      if (!trace.syntax_passed()) entry.reason = "golden failed syntax gate";
      else if (!trace.synth_ok()) entry.reason = "golden failed synthesis gate";
      else entry.reason = "golden failed simulation gate";
      cache.tasks[task.id] = std::move(entry);
      continue;
    }
    entry.valid = true;
    entry.by_library[toolchain.default_library] = *trace.synth->metrics;
    std::vector<std::string> extra;
    for (const auto& lib : extra_libraries)
      if (lib != toolchain.default_library) extra.push_back(lib);
    auto more = synthesize_all_libraries(golden, trace.top_module, extra, backend,
                                         toolchain.synth_timeout_s);
    for (const auto& [lib, outcome] : more) {
      if (outcome.status == SynthOutcome::Status::ok) entry.by_library[lib] = *outcome.metrics;
    }
    cache.tasks[task.id] = std::move(entry);
  }
  return cache;
}

std::vector<InferenceSummary> summarize_inference(const std::vector<AttemptRecord>& records) {
  std::map<std::string, std::vector<const AttemptRecord*>> by_model;
  for (const auto& r : records)
    if (r.gen.inference.present) by_model[r.model].push_back(&r);

  std::vector<InferenceSummary> out;
  for (const auto& [model, recs] : by_model) {
    InferenceSummary s;
    s.model = model;
    s.n = static_cast<int>(recs.size());
    std::vector<double> costs, throughputs, ttfts, tokens;
    long sum_reasoning = 0, sum_completion = 0;
    for (const auto* r : recs) {
      costs.push_back(r->gen.inference.cost_usd);
      throughputs.push_back(r->gen.inference.throughput_tok_s);
      ttfts.push_back(r->gen.inference.ttft_s);
      tokens.push_back(static_cast<double>(r->gen.inference.completion_tokens));
      sum_reasoning += r->gen.inference.reasoning_tokens;
      sum_completion += r->gen.inference.completion_tokens;
    }
    s.median_cost_usd = median(costs);
    s.median_throughput_tok_s = median(throughputs);
    s.median_ttft_s = median(ttfts);
    s.completion_tokens_p25 = quantile(tokens, 0.25);
    s.completion_tokens_p50 = quantile(tokens, 0.50);
    s.completion_tokens_p75 = quantile(tokens, 0.75);
    long denom = sum_reasoning + sum_completion;
    s.reasoning_ratio = denom > 0 ? static_cast<double>(sum_reasoning) / denom : 0.0;
    s.non_reasoning = sum_reasoning == 0;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace rtlgauge
