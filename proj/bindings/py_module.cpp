#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rtlgauge/extract.hpp"
#include "rtlgauge/frontend.hpp"
#include "rtlgauge/gates.hpp"
#include "rtlgauge/rank.hpp"
#include "rtlgauge/scoring.hpp"
#include "rtlgauge/taxonomy.hpp"

namespace py = pybind11;
using namespace rtlgauge;

PYBIND11_MODULE(_core, m) {
  m.doc() = "rtlgauge core operations";

  // frontend
  m.def("strip_comments", [](const std::string& text) { return strip_comments(text); },
        py::arg("text"));
  m.def("strip_attributes", [](const std::string& text) { return strip_attributes(text); },
        py::arg("text"));
  m.def(
      "list_modules",
      [](const std::string& stripped) {
        std::vector<std::tuple<std::string, size_t, size_t>> out;
        for (const auto& d : list_modules(stripped)) out.emplace_back(d.name, d.begin, d.end);
        return out;
      },
      py::arg("stripped_text"), "Module declarations as (name, begin, end) tuples");
  m.def("resolve_top_module",
        [](const std::string& text, const std::string& expected) {
          return resolve_top_module(text, expected);
        },
        py::arg("text"), py::arg("expected"));
  m.def("count_dependency_edges",
        [](const std::string& text) { return count_dependency_edges(text); }, py::arg("text"));
  m.def(
      "normalize_complexity",
      [](const std::map<std::string, long>& edges) {
        std::map<std::string, double> out;
        for (const auto& [id, w] : normalize_complexity(edges)) out[id] = w.weight;
        return out;
      },
      py::arg("raw_edges"), "Task id -> weight in [1, 24]");

  // scoring
  m.def(
      "attempt_hqi",
      [](double area, double delay, long warnings, double g_area, double g_delay,
         long g_warnings, double w_area, double w_delay, double w_warn) {
        SynthMetrics a{area, delay, warnings, ""};
        SynthMetrics g{g_area, g_delay, g_warnings, ""};
        return attempt_hqi(a, g, WeightConfig{w_area, w_delay, w_warn}).value;
      },
      py::arg("area"), py::arg("delay"), py::arg("warnings"), py::arg("golden_area"),
      py::arg("golden_delay"), py::arg("golden_warnings"), py::arg("w_area") = 0.5,
      py::arg("w_delay") = 0.5, py::arg("w_warn") = 0.1);

  // gates
  m.def(
      "judge_simulation",
      [](const std::string& stdout_text, bool exit_ok, bool timed_out,
         const std::vector<std::string>& pass_patterns,
         const std::vector<std::string>& fail_patterns) {
        SimTranscript t;
        t.stdout_text = stdout_text;
        t.exit_ok = exit_ok;
        t.timed_out = timed_out;
        auto v = judge_simulation(t, pass_patterns, fail_patterns);
        return std::make_pair(v.pass, v.reason);
      },
      py::arg("stdout_text"), py::arg("exit_ok") = true, py::arg("timed_out") = false,
      py::arg("pass_patterns") = std::vector<std::string>{"ALL TESTS PASSED", "Test passed", "PASS"},
      py::arg("fail_patterns") = std::vector<std::string>{"FAIL", "Mismatch", "Error", "assertion failed"});

  // rank
  m.def(
      "spearman_rho",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        return spearman_rho(a, b);
      },
      py::arg("a"), py::arg("b"));

  // taxonomy
  m.def(
      "classify_failure",
      [](const std::string& diagnostics, bool timeout) {
        SynthOutcome o;
        o.status = timeout ? SynthOutcome::Status::timeout : SynthOutcome::Status::error;
        o.diagnostics = diagnostics;
        auto tag = classify_failure(o, RuleSet::builtin());
        return std::string(to_string(tag.subtype));
      },
      py::arg("diagnostics"), py::arg("timeout") = false);

  // extraction
  m.def(
      "extract_code",
      [](const std::string& raw) -> py::object {
        auto res = extract_code(raw, "py");
        if (!res.source) return py::none();
        return py::str(res.source->text);
      },
      py::arg("raw_response"));
}
