#include "rtlgauge/config.hpp"

#include <nlohmann/json.hpp>

#include "rtlgauge/mock_backend.hpp"
#include "rtlgauge/util.hpp"

namespace rtlgauge {

using nlohmann::json;

Config Config::load(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const std::exception& e) {
    throw ConfigError("config parse error: " + std::string(e.what()));
  }
  Config c;
  c.schema_version = j.value("schema_version", 0);
  if (c.schema_version != 1) throw ConfigError("unsupported config schema_version (want 1)");

  if (j.contains("toolchain")) {
    const auto& t = j["toolchain"];
    c.mode = t.value("mode", c.mode);
    if (c.mode != "mock" && c.mode != "external")
      throw ConfigError("toolchain.mode must be mock or external");
    if (t.contains("libraries")) c.libraries = t["libraries"].get<std::vector<std::string>>();
    if (!c.libraries.empty()) c.toolchain.default_library = c.libraries.front();
    c.toolchain.default_library = t.value("default_library", c.toolchain.default_library);
    c.toolchain.synth_timeout_s = t.value("synth_timeout_s", c.toolchain.synth_timeout_s);
    c.toolchain.sim_timeout_s = t.value("sim_timeout_s", c.toolchain.sim_timeout_s);
    if (t.contains("pass_patterns"))
      c.toolchain.pass_patterns = t["pass_patterns"].get<std::vector<std::string>>();
    if (t.contains("fail_patterns"))
      c.toolchain.fail_patterns = t["fail_patterns"].get<std::vector<std::string>>();
    if (t.contains("mock") && t["mock"].contains("table"))
      c.mock_table = t["mock"]["table"].get<std::string>();
    if (t.contains("external")) {
      const auto& e = t["external"];
      c.external.syntax_cmd = e.value("syntax_cmd", c.external.syntax_cmd);
      c.external.synth_exe = e.value("synth_exe", c.external.synth_exe);
      c.external.synth_script_template =
          e.value("synth_script_template", c.external.synth_script_template);
      c.external.sim_cmd = e.value("sim_cmd", c.external.sim_cmd);
      if (e.contains("liberty"))
        c.external.liberty = e["liberty"].get<std::map<std::string, std::string>>();
      c.external.area_pattern = e.value("area_pattern", c.external.area_pattern);
      c.external.delay_pattern = e.value("delay_pattern", c.external.delay_pattern);
      c.external.delay_scale = e.value("delay_scale", c.external.delay_scale);
      if (e.contains("warning_prefixes"))
        c.external.warning_prefixes = e["warning_prefixes"].get<std::vector<std::string>>();
      if (e.contains("scratch_root"))
        c.external.scratch_root = e["scratch_root"].get<std::string>();
    }
  }
  if (c.libraries.empty()) c.libraries = {c.toolchain.default_library};

  if (j.contains("scoring")) {
    const auto& s = j["scoring"];
    if (s.contains("weights")) {
      c.weights.w_area = s["weights"].value("area", c.weights.w_area);
      c.weights.w_delay = s["weights"].value("delay", c.weights.w_delay);
      c.weights.w_warn = s["weights"].value("warn", c.weights.w_warn);
      if (c.weights.w_area < 0 || c.weights.w_delay < 0 || c.weights.w_warn < 0 ||
          c.weights.w_area + c.weights.w_delay <= 0)
        throw ConfigError("scoring.weights: need w_area,w_delay,w_warn >= 0 and w_area+w_delay > 0");
    }
    c.tiers.tier1_min = s.value("tier1_min", c.tiers.tier1_min);
    c.tiers.tier3_max = s.value("tier3_max", c.tiers.tier3_max);
  }

  if (j.contains("campaign")) {
    const auto& cj = j["campaign"];
    c.k = cj.value("k", c.k);
    c.workers = cj.value("workers", c.workers);
    if (c.k < 1) throw ConfigError("campaign.k must be >= 1");
    if (cj.contains("retry")) {
      c.retry.max_attempts = cj["retry"].value("max_attempts", c.retry.max_attempts);
      if (cj["retry"].contains("backoff_s"))
        c.retry.backoff_s = cj["retry"]["backoff_s"].get<std::vector<double>>();
    }
  }
  return c;
}

std::unique_ptr<Backend> Config::make_backend(bool force_mock) const {
  if (force_mock || mode == "mock") {
    if (!mock_table.empty()) return std::make_unique<MockBackend>(MockBackend::from_table_file(mock_table));
    return std::make_unique<MockBackend>();
  }
  return std::make_unique<ExternalToolsBackend>(external);
}

}  // namespace rtlgauge
