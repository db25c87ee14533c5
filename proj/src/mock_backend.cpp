#include "rtlgauge/mock_backend.hpp"

#include <chrono>
#include <thread>

#include <nlohmann/json.hpp>

#include "rtlgauge/util.hpp"

namespace rtlgauge {

namespace {

using nlohmann::json;

// Collects `// mock: <stage> ...` directive lines for one stage.
std::vector<std::string> directives_for(const std::string& text, const std::string& stage) {
  std::vector<std::string> out;
  for (const auto& line : split(text, '\n')) {
    auto t = trim(line);
    if (!starts_with(t, "// mock:")) continue;
    auto rest = trim(t.substr(8));
    if (starts_with(rest, stage)) out.emplace_back(trim(rest.substr(stage.size())));
  }
  return out;
}

std::optional<std::string> kv_value(const std::string& directive, const std::string& key) {
  for (const auto& tok : split(directive, ' ')) {
    if (starts_with(tok, key + "="))
      return std::string(tok.substr(key.size() + 1));
  }
  return std::nullopt;
}

std::string unescape_newlines(std::string s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size() && s[i + 1] == 'n') {
      out += '\n';
      ++i;
    } else {
      out += s[i];
    }
  }
  return out;
}

void apply_sleep(double sleep_s, double timeout_s, bool* timed_out, double* wall_s) {
  if (sleep_s <= 0) {
    *timed_out = false;
    *wall_s = 0.01;
    return;
  }
  double actual = std::min(sleep_s, timeout_s);
  std::this_thread::sleep_for(std::chrono::duration<double>(actual));
  *timed_out = sleep_s > timeout_s;
  // nominal, not measured: keeps journals byte-identical across runs
  *wall_s = *timed_out ? timeout_s : sleep_s;
}

}  // namespace

std::string MockBackend::design_key(const VerilogSource& design) {
  for (const auto& line : split(design.text, '\n')) {
    auto t = trim(line);
    if (starts_with(t, "// mock-key:")) return std::string(trim(t.substr(12)));
  }
  return fnv1a64_hex(design.text);
}

double MockBackend::library_scale(const std::string& library_id) const {
  auto it = tables_.library_scale.find(library_id);
  if (it != tables_.library_scale.end()) return it->second;
  // deterministic mild spread per library, monotone across designs
  return 1.0 + static_cast<double>(fnv1a64(library_id) % 100) / 100.0;
}

SyntaxOutcome MockBackend::check_syntax(const VerilogSource& design) {
  SyntaxOutcome out;
  out.command = "mock-syntax " + design_key(design);
  for (const auto& d : directives_for(design.text, "syntax")) {
    if (starts_with(d, "error")) {
      out.status = SyntaxOutcome::Status::fail;
      out.diagnostics = std::string(trim(d.substr(5)));
      out.exit_code = 1;
      return out;
    }
  }
  auto it = tables_.syntax_fail.find(design_key(design));
  if (it != tables_.syntax_fail.end()) {
    out.status = SyntaxOutcome::Status::fail;
    out.diagnostics = it->second;
    out.exit_code = 1;
  }
  return out;
}

SynthOutcome MockBackend::synthesize(const VerilogSource& design, const std::string& top,
                                     const std::string& library_id, double timeout_s) {
  SynthOutcome out;
  const std::string key = design_key(design);
  out.command = "mock-synth " + key + " top=" + top + " lib=" + library_id;

  double sleep_s = 0;
  std::optional<SynthEntry> entry;
  for (const auto& d : directives_for(design.text, "synth")) {
    if (auto ms = kv_value(d, "sleep_ms")) sleep_s = std::stod(*ms) / 1000.0;
    if (d == "timeout" || starts_with(d, "timeout")) {
      SynthEntry e;
      e.status = "timeout";
      entry = e;
    } else if (starts_with(d, "error")) {
      SynthEntry e;
      e.status = "error";
      e.diagnostics = unescape_newlines(std::string(trim(d.substr(5))));
      entry = e;
    } else if (auto lib = kv_value(d, "lib")) {
      if (*lib == library_id || *lib == "*") {
        SynthEntry e;
        if (auto v = kv_value(d, "area")) e.area = std::stod(*v);
        if (auto v = kv_value(d, "delay")) e.delay = std::stod(*v);
        if (auto v = kv_value(d, "warnings")) e.warnings = std::stol(*v);
        if (*lib == "*") {
          e.area *= library_scale(library_id);
          e.delay *= library_scale(library_id);
        }
        entry = e;
      }
    }
  }
  if (!entry) {
    auto itk = tables_.synth.find(key);
    if (itk != tables_.synth.end()) {
      auto itl = itk->second.find(library_id);
      if (itl == itk->second.end()) itl = itk->second.find("*");
      if (itl != itk->second.end()) {
        entry = itl->second;
        if (itk->second.find(library_id) == itk->second.end()) {
          entry->area *= library_scale(library_id);
          entry->delay *= library_scale(library_id);
        }
      }
    }
  }

  bool timed_out = false;
  apply_sleep(sleep_s, timeout_s, &timed_out, &out.wall_s);
  if (timed_out) {
    out.status = SynthOutcome::Status::timeout;
    return out;
  }

  if (entry) {
    if (entry->status == "timeout") {
      out.status = SynthOutcome::Status::timeout;
      out.wall_s = timeout_s;
      return out;
    }
    if (entry->status == "error") {
      out.status = SynthOutcome::Status::error;
      out.diagnostics = entry->diagnostics;
      return out;
    }
    out.status = SynthOutcome::Status::ok;
    out.metrics = SynthMetrics{entry->area, entry->delay, entry->warnings, library_id};
    return out;
  }

  // hash-derived defaults: stable per (design, library)
  std::uint64_t h = fnv1a64(design.text);
  double scale = library_scale(library_id);
  SynthMetrics m;
  m.area = (100.0 + static_cast<double>(h % 9000) / 10.0) * scale;
  m.delay = (0.5 + static_cast<double>((h >> 16) % 2000) / 1000.0) * scale;
  m.warnings = static_cast<long>((h >> 32) % 3);
  m.library_id = library_id;
  out.status = SynthOutcome::Status::ok;
  out.metrics = m;
  return out;
}

SimTranscript MockBackend::simulate(const VerilogSource& design, const VerilogSource& testbench,
                                    double timeout_s) {
  (void)testbench;
  SimTranscript out;
  const std::string key = design_key(design);
  out.command = "mock-sim " + key;

  SimEntry entry;
  auto it = tables_.sim.find(key);
  if (it != tables_.sim.end()) entry = it->second;

  double sleep_s = 0;
  for (const auto& d : directives_for(design.text, "sim")) {
    // stdout= consumes the rest of the line, so it must be the line's only key
    auto pos = d.find("stdout=");
    if (pos != std::string::npos) entry.stdout_text = unescape_newlines(d.substr(pos + 7));
    if (auto v = kv_value(d, "exit")) entry.exit_ok = *v == "0";
    if (auto v = kv_value(d, "sleep_ms")) sleep_s = std::stod(*v) / 1000.0;
  }

  bool timed_out = false;
  double wall = entry.wall_s;
  if (sleep_s > 0) apply_sleep(sleep_s, timeout_s, &timed_out, &wall);
  out.stdout_text = entry.stdout_text;
  out.exit_ok = entry.exit_ok && !timed_out;
  out.timed_out = timed_out;
  out.wall_s = wall;
  return out;
}

MockBackend MockBackend::from_table_file(const std::filesystem::path& path) {
  json j = json::parse(read_text_file(path));
  Tables t;
  if (j.contains("syntax")) {
    for (auto& [key, v] : j["syntax"].items())
      t.syntax_fail[key] = v.value("diagnostics", "syntax error");
  }
  if (j.contains("synth")) {
    for (auto& [key, libs] : j["synth"].items()) {
      for (auto& [lib, e] : libs.items()) {
        SynthEntry entry;
        entry.status = e.value("status", "ok");
        entry.area = e.value("area", 0.0);
        entry.delay = e.value("delay", 0.0);
        entry.warnings = e.value("warnings", 0L);
        entry.diagnostics = e.value("diagnostics", "");
        t.synth[key][lib] = entry;
      }
    }
  }
  if (j.contains("sim")) {
    for (auto& [key, e] : j["sim"].items()) {
      SimEntry entry;
      entry.stdout_text = e.value("stdout", "ALL TESTS PASSED\n");
      entry.exit_ok = e.value("exit_ok", true);
      entry.wall_s = e.value("wall_s", 0.01);
      t.sim[key] = entry;
    }
  }
  if (j.contains("library_scale")) {
    for (auto& [lib, f] : j["library_scale"].items()) t.library_scale[lib] = f.get<double>();
  }
  return MockBackend(std::move(t));
}

}  // namespace rtlgauge
