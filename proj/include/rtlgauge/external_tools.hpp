#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "rtlgauge/backend.hpp"

namespace rtlgauge {

// Spawns the configured external executables. Command templates and report
// patterns are config-file content so tool-version drift never requires a
// rebuild. Placeholders: {design} {top} {liberty} {testbench} {workdir}.
struct ExternalToolsConfig {
  std::string syntax_cmd = "iverilog -t null -o /dev/null {design}";
  std::string synth_exe = "yosys";
  std::string synth_script_template =
      "read_verilog {design}\n"
      "hierarchy -check -top {top}\n"
      "proc; flatten; opt; fsm; opt; memory; opt\n"
      "techmap; opt\n"
      "dfflibmap -liberty {liberty}\n"
      "abc -liberty {liberty}\n"
      "stat -liberty {liberty}\n";
  std::string sim_cmd =
      "iverilog -g2012 -o {workdir}/sim.vvp {design} {testbench} && vvp {workdir}/sim.vvp";
  std::map<std::string, std::string> liberty;  // library id -> liberty file path
  std::string area_pattern = R"(Chip area for (?:top )?module .*: *([0-9][0-9.eE+-]*))";
  std::string delay_pattern = R"(Delay *= *([0-9][0-9.eE+-]*) *ps)";
  double delay_scale = 0.001;  // report unit -> ns
  std::vector<std::string> warning_prefixes = {"Warning"};
  std::filesystem::path scratch_root = "scratch";
  bool keep_artifacts = false;
};

class ExternalToolsBackend : public Backend {
 public:
  explicit ExternalToolsBackend(ExternalToolsConfig cfg) : cfg_(std::move(cfg)) {}

  SyntaxOutcome check_syntax(const VerilogSource& design) override;
  SynthOutcome synthesize(const VerilogSource& design, const std::string& top,
                          const std::string& library_id, double timeout_s) override;
  SimTranscript simulate(const VerilogSource& design, const VerilogSource& testbench,
                         double timeout_s) override;

  // Number of diagnostic lines starting with a configured warning prefix.
  static long count_warnings(const std::string& diagnostics,
                             const std::vector<std::string>& prefixes);

 private:
  std::filesystem::path make_scratch(const std::string& stage, const std::string& origin) const;
  void cleanup(const std::filesystem::path& dir, bool failed) const;

  ExternalToolsConfig cfg_;
};

// Probes whether the configured executables exist on PATH (or as given).
bool tool_available(const std::string& exe_or_cmd);

}  // namespace rtlgauge
