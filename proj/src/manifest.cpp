#include "rtlgauge/manifest.hpp"

#include <set>

#include <nlohmann/json.hpp>

#include "rtlgauge/util.hpp"

namespace rtlgauge {

using nlohmann::json;

Manifest Manifest::load(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw ManifestError("manifest parse error: " + std::string(e.what()));
  }
  Manifest m;
  m.root = path.has_parent_path() ? path.parent_path() : ".";
  m.schema_version = j.value("schema_version", 0);
  if (m.schema_version != 1)
    throw ManifestError("unsupported manifest schema_version (want 1)");
  if (!j.contains("tasks") || !j["tasks"].is_array() || j["tasks"].empty())
    throw ManifestError("manifest has no tasks");

  std::set<std::string> seen;
  std::map<std::string, long> edges;
  for (const auto& jt : j["tasks"]) {
    Task t;
    t.id = jt.value("id", "");
    if (t.id.empty()) throw ManifestError("task with empty id");
    if (!seen.insert(t.id).second) throw ManifestError("duplicate task id: " + t.id);
    t.benchmark = jt.value("benchmark", "");
    if (t.benchmark != "verilogeval" && t.benchmark != "rtllm")
      throw ManifestError("task '" + t.id + "': benchmark must be verilogeval or rtllm");
    t.category = jt.value("category", "");
    if (t.category.empty()) throw ManifestError("task '" + t.id + "': missing category");
    t.expected_top = jt.value("expected_top", "");
    if (!is_verilog_identifier(t.expected_top))
      throw ManifestError("task '" + t.id + "': expected_top is not a Verilog identifier");

    auto resolve = [&](const std::string& rel) { return m.root / rel; };
    if (!jt.contains("prompt")) throw ManifestError("task '" + t.id + "': missing prompt");
    t.prompt_path = resolve(jt["prompt"].get<std::string>());
    if (!std::filesystem::exists(t.prompt_path))
      throw ManifestError("task '" + t.id + "': prompt file missing: " + t.prompt_path.string());
    if (!jt.contains("testbench")) throw ManifestError("task '" + t.id + "': missing testbench");
    t.testbench_path = resolve(jt["testbench"].get<std::string>());
    if (!std::filesystem::exists(t.testbench_path))
      throw ManifestError("task '" + t.id + "': testbench file missing: " +
                          t.testbench_path.string());
    if (jt.contains("golden_rtl")) {
      t.golden_rtl_path = resolve(jt["golden_rtl"].get<std::string>());
      if (!std::filesystem::exists(*t.golden_rtl_path))
        throw ManifestError("task '" + t.id + "': golden file missing: " +
                            t.golden_rtl_path->string());
    }
    if (jt.contains("pass_patterns"))
      t.pass_patterns = jt["pass_patterns"].get<std::vector<std::string>>();
    if (jt.contains("fail_patterns"))
      t.fail_patterns = jt["fail_patterns"].get<std::vector<std::string>>();

    long raw = 0;
    if (jt.contains("raw_edges")) {
      raw = jt["raw_edges"].get<long>();
      if (raw < 0) throw ManifestError("task '" + t.id + "': raw_edges must be >= 0");
    } else if (t.golden_rtl_path) {
      raw = count_dependency_edges(read_text_file(*t.golden_rtl_path));
    }
    edges[t.id] = raw;
    m.tasks.push_back(std::move(t));
  }

  auto weights = normalize_complexity(edges);
  for (auto& t : m.tasks) t.weight = weights.at(t.id);
  return m;
}

const Task* Manifest::find(const std::string& id) const {
  for (const auto& t : tasks)
    if (t.id == id) return &t;
  return nullptr;
}

}  // namespace rtlgauge
