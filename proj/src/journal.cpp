#include "rtlgauge/journal.hpp"

#include <algorithm>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "rtlgauge/util.hpp"

namespace rtlgauge {

using nlohmann::json;

namespace {

json metrics_to_json(const SynthMetrics& m) {
  return {{"area", m.area}, {"delay", m.delay}, {"warnings", m.warnings}, {"library", m.library_id}};
}

SynthMetrics metrics_from_json(const json& j) {
  SynthMetrics m;
  m.area = j.value("area", 0.0);
  m.delay = j.value("delay", 0.0);
  m.warnings = j.value("warnings", 0L);
  m.library_id = j.value("library", "");
  return m;
}

const char* syntax_status_str(SyntaxOutcome::Status s) {
  switch (s) {
    case SyntaxOutcome::Status::pass: return "pass";
    case SyntaxOutcome::Status::fail: return "fail";
    case SyntaxOutcome::Status::infra: return "infra";
  }
  return "fail";
}

SyntaxOutcome::Status syntax_status_from(const std::string& s) {
  if (s == "pass") return SyntaxOutcome::Status::pass;
  if (s == "infra") return SyntaxOutcome::Status::infra;
  return SyntaxOutcome::Status::fail;
}

const char* synth_status_str(SynthOutcome::Status s) {
  switch (s) {
    case SynthOutcome::Status::ok: return "ok";
    case SynthOutcome::Status::error: return "error";
    case SynthOutcome::Status::timeout: return "timeout";
    case SynthOutcome::Status::infra: return "infra";
  }
  return "error";
}

SynthOutcome::Status synth_status_from(const std::string& s) {
  if (s == "ok") return SynthOutcome::Status::ok;
  if (s == "timeout") return SynthOutcome::Status::timeout;
  if (s == "infra") return SynthOutcome::Status::infra;
  return SynthOutcome::Status::error;
}

}  // namespace

std::string attempt_to_json_line(const AttemptRecord& r) {
  json j;
  j["schema"] = kJournalSchemaVersion;
  j["kind"] = "attempt";
  j["model"] = r.model;
  j["task"] = r.task;
  j["attempt"] = r.attempt;

  json gen;
  gen["raw_response"] = r.gen.raw_response;
  if (r.gen.extracted) {
    gen["extracted"] = {{"text", r.gen.extracted->text}, {"origin", r.gen.extracted->origin}};
  } else {
    gen["extracted"] = nullptr;
    gen["extraction_error"] = r.gen.extraction_error;
  }
  if (r.gen.inference.present) {
    gen["inference"] = {{"cost_usd", r.gen.inference.cost_usd},
                        {"reasoning_tokens", r.gen.inference.reasoning_tokens},
                        {"completion_tokens", r.gen.inference.completion_tokens},
                        {"throughput_tok_s", r.gen.inference.throughput_tok_s},
                        {"ttft_s", r.gen.inference.ttft_s}};
  }
  if (r.gen.sampling_temperature) gen["sampling_temperature"] = *r.gen.sampling_temperature;
  if (r.gen.sampling_max_tokens) gen["sampling_max_tokens"] = *r.gen.sampling_max_tokens;
  j["gen"] = gen;

  json trace;
  trace["top_module"] = r.trace.top_module;
  if (r.trace.syntax) {
    trace["syntax"] = {{"status", syntax_status_str(r.trace.syntax->status)},
                       {"diagnostics", r.trace.syntax->diagnostics},
                       {"command", r.trace.syntax->command},
                       {"exit_code", r.trace.syntax->exit_code}};
  }
  if (r.trace.synth) {
    json s = {{"status", synth_status_str(r.trace.synth->status)},
              {"diagnostics", r.trace.synth->diagnostics},
              {"command", r.trace.synth->command},
              {"wall_s", r.trace.synth->wall_s}};
    if (r.trace.synth->metrics) s["metrics"] = metrics_to_json(*r.trace.synth->metrics);
    trace["synth"] = s;
  }
  if (r.trace.sim) {
    trace["sim"] = {{"stdout", r.trace.sim->stdout_text},
                    {"exit_ok", r.trace.sim->exit_ok},
                    {"timed_out", r.trace.sim->timed_out},
                    {"infra", r.trace.sim->infra},
                    {"wall_s", r.trace.sim->wall_s},
                    {"command", r.trace.sim->command}};
  }
  if (r.trace.sim_verdict) {
    trace["verdict"] = {{"pass", r.trace.sim_verdict->pass},
                        {"reason", r.trace.sim_verdict->reason}};
  }
  j["trace"] = trace;

  if (!r.metrics_by_library.empty()) {
    json libs;
    for (const auto& [lib, m] : r.metrics_by_library) libs[lib] = metrics_to_json(m);
    j["metrics"] = libs;
  }
  if (r.failure_tag) {
    j["failure_tag"] = {{"subtype", std::string(to_string(r.failure_tag->subtype))},
                        {"evidence", r.failure_tag->evidence},
                        {"note", r.failure_tag->rule_note},
                        {"rules_version", r.failure_rules_version}};
  }
  j["infra"] = r.infra;
  if (!r.infra_reason.empty()) j["infra_reason"] = r.infra_reason;
  j["started_ms"] = r.started_ms;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

AttemptRecord attempt_from_json_line(const std::string& line) {
  json j = json::parse(line);
  AttemptRecord r;
  r.model = j.value("model", "");
  r.task = j.value("task", "");
  r.attempt = j.value("attempt", 0);

  if (j.contains("gen")) {
    const auto& gen = j["gen"];
    r.gen.raw_response = gen.value("raw_response", "");
    if (gen.contains("extracted") && !gen["extracted"].is_null()) {
      r.gen.extracted = VerilogSource{gen["extracted"].value("text", ""),
                                      gen["extracted"].value("origin", "")};
    } else {
      r.gen.extraction_error = gen.value("extraction_error", "");
    }
    if (gen.contains("inference")) {
      const auto& inf = gen["inference"];
      r.gen.inference.present = true;
      r.gen.inference.cost_usd = inf.value("cost_usd", 0.0);
      r.gen.inference.reasoning_tokens = inf.value("reasoning_tokens", 0L);
      r.gen.inference.completion_tokens = inf.value("completion_tokens", 0L);
      r.gen.inference.throughput_tok_s = inf.value("throughput_tok_s", 0.0);
      r.gen.inference.ttft_s = inf.value("ttft_s", 0.0);
    }
    if (gen.contains("sampling_temperature"))
      r.gen.sampling_temperature = gen["sampling_temperature"].get<double>();
    if (gen.contains("sampling_max_tokens"))
      r.gen.sampling_max_tokens = gen["sampling_max_tokens"].get<long>();
  }

  if (j.contains("trace")) {
    const auto& trace = j["trace"];
    r.trace.top_module = trace.value("top_module", "");
    if (trace.contains("syntax")) {
      SyntaxOutcome s;
      s.status = syntax_status_from(trace["syntax"].value("status", "fail"));
      s.diagnostics = trace["syntax"].value("diagnostics", "");
      s.command = trace["syntax"].value("command", "");
      s.exit_code = trace["syntax"].value("exit_code", 0);
      r.trace.syntax = s;
    }
    if (trace.contains("synth")) {
      SynthOutcome s;
      s.status = synth_status_from(trace["synth"].value("status", "error"));
      s.diagnostics = trace["synth"].value("diagnostics", "");
      s.command = trace["synth"].value("command", "");
      s.wall_s = trace["synth"].value("wall_s", 0.0);
      if (trace["synth"].contains("metrics"))
        s.metrics = metrics_from_json(trace["synth"]["metrics"]);
      r.trace.synth = s;
    }
    if (trace.contains("sim")) {
      SimTranscript t;
      t.stdout_text = trace["sim"].value("stdout", "");
      t.exit_ok = trace["sim"].value("exit_ok", false);
      t.timed_out = trace["sim"].value("timed_out", false);
      t.infra = trace["sim"].value("infra", false);
      t.wall_s = trace["sim"].value("wall_s", 0.0);
      t.command = trace["sim"].value("command", "");
      r.trace.sim = t;
    }
    if (trace.contains("verdict")) {
      Verdict v;
      v.pass = trace["verdict"].value("pass", false);
      v.reason = trace["verdict"].value("reason", "");
      r.trace.sim_verdict = v;
    }
  }

  if (j.contains("metrics")) {
    for (auto& [lib, m] : j["metrics"].items())
      r.metrics_by_library[lib] = metrics_from_json(m);
  }
  if (j.contains("failure_tag")) {
    FailureTag tag;
    tag.subtype = subtype_from_string(j["failure_tag"].value("subtype", "unclassified"));
    tag.evidence = j["failure_tag"].value("evidence", "");
    tag.rule_note = j["failure_tag"].value("note", "");
    r.failure_tag = tag;
    r.failure_rules_version = j["failure_tag"].value("rules_version", "");
  }
  r.infra = j.value("infra", false);
  r.infra_reason = j.value("infra_reason", "");
  r.started_ms = j.value("started_ms", 0L);
  r.elapsed_ms = j.value("elapsed_ms", 0L);
  return r;
}

std::vector<AttemptRecord> Journal::read(const std::filesystem::path& path) {
  std::vector<AttemptRecord> out;
  if (!std::filesystem::exists(path)) return out;
  auto text = read_text_file(path);
  size_t start = 0;
  while (start < text.size()) {
    size_t nl = text.find('\n', start);
    bool last_and_partial = nl == std::string::npos;
    std::string line = last_and_partial ? text.substr(start) : text.substr(start, nl - start);
    start = last_and_partial ? text.size() : nl + 1;
    if (trim(line).empty()) continue;
    try {
      out.push_back(attempt_from_json_line(line));
    } catch (const json::parse_error&) {
      if (last_and_partial) break;  // torn final line from an interrupted run
      throw;
    }
  }
  return out;
}

std::vector<AttemptRecord> Journal::effective_records(std::vector<AttemptRecord> all) {
  std::map<std::string, size_t> last;
  for (size_t i = 0; i < all.size(); ++i) last[all[i].key()] = i;
  std::vector<AttemptRecord> out;
  out.reserve(last.size());
  for (size_t i = 0; i < all.size(); ++i)
    if (last[all[i].key()] == i) out.push_back(std::move(all[i]));
  return out;
}

void Journal::write_canonical(const std::filesystem::path& path,
                              std::vector<AttemptRecord> records) {
  records = effective_records(std::move(records));
  std::sort(records.begin(), records.end(), [](const AttemptRecord& a, const AttemptRecord& b) {
    if (a.model != b.model) return a.model < b.model;
    if (a.task != b.task) return a.task < b.task;
    return a.attempt < b.attempt;
  });
  std::string out;
  for (const auto& r : records) {
    out += attempt_to_json_line(r);
    out += '\n';
  }
  write_text_file(path, out);
}

Journal::Writer::Writer(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  f_ = std::fopen(path.string().c_str(), "ab");
  if (!f_) throw std::runtime_error("cannot open journal for append: " + path.string());
}

Journal::Writer::~Writer() {
  if (f_) std::fclose(f_);
}

void Journal::Writer::append(const AttemptRecord& r) {
  auto line = attempt_to_json_line(r);
  line += '\n';
  std::lock_guard<std::mutex> lock(mu_);
  std::fwrite(line.data(), 1, line.size(), f_);
  std::fflush(f_);
}

void GoldenCache::save(const std::filesystem::path& path) const {
  json j;
  j["schema"] = schema_version;
  json tasks_json;
  for (const auto& [id, e] : tasks) {
    json libs;
    for (const auto& [lib, m] : e.by_library) libs[lib] = metrics_to_json(m);
    tasks_json[id] = {{"valid", e.valid}, {"reason", e.reason}, {"by_library", libs}};
  }
  j["tasks"] = tasks_json;
  write_text_file(path, j.dump(2) + "\n");
}

GoldenCache GoldenCache::load(const std::filesystem::path& path) {
  json j = json::parse(read_text_file(path));
  GoldenCache c;
  c.schema_version = j.value("schema", 1);
  if (j.contains("tasks")) {
    for (auto& [id, e] : j["tasks"].items()) {
      GoldenEntry entry;
      entry.valid = e.value("valid", false);
      entry.reason = e.value("reason", "");
      if (e.contains("by_library"))
        for (auto& [lib, m] : e["by_library"].items())
          entry.by_library[lib] = metrics_from_json(m);
      c.tasks[id] = std::move(entry);
    }
  }
  return c;
}

std::optional<SynthMetrics> GoldenCache::metrics_for(const std::string& task_id,
                                                     const std::string& library_id) const {
  auto it = tasks.find(task_id);
  if (it == tasks.end() || !it->second.valid) return std::nullopt;
  auto lib = it->second.by_library.find(library_id);
  if (lib == it->second.by_library.end()) return std::nullopt;
  return lib->second;
}

}  // namespace rtlgauge
