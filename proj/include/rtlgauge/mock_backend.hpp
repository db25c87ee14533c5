#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "rtlgauge/backend.hpp"

namespace rtlgauge {

// Fully deterministic table-driven backend. Behavior is looked up by a
// design key: an explicit `// mock-key: NAME` line in the source wins,
// otherwise the FNV-1a hash of the source text. Designs may also embed
// per-stage directives which take precedence over the table:
//
//   // mock: syntax error <diagnostics...>
//   // mock: synth timeout
//   // mock: synth sleep_ms=<n>
//   // mock: synth error <diagnostics...>
//   // mock: synth lib=<id|*> area=<f> delay=<f> warnings=<n>
//   // mock: sim stdout=<text, \n escaped>
//   // mock: sim exit=<0|1>
//   // mock: sim sleep_ms=<n>
//
// Unconfigured designs pass every stage with metrics derived from the key
// hash, scaled per library, so identical sources always score identically.
class MockBackend : public Backend {
 public:
  struct SynthEntry {
    std::string status = "ok";  // ok | error | timeout
    double area = 0, delay = 0;
    long warnings = 0;
    std::string diagnostics;
  };
  struct SimEntry {
    std::string stdout_text = "ALL TESTS PASSED\n";
    bool exit_ok = true;
    double wall_s = 0.01;
  };
  struct Tables {
    std::map<std::string, std::string> syntax_fail;              // key -> diagnostics
    std::map<std::string, std::map<std::string, SynthEntry>> synth;  // key -> lib -> entry
    std::map<std::string, SimEntry> sim;
    std::map<std::string, double> library_scale;  // lib -> area/delay factor
  };

  MockBackend() = default;
  explicit MockBackend(Tables tables) : tables_(std::move(tables)) {}
  static MockBackend from_table_file(const std::filesystem::path& path);

  SyntaxOutcome check_syntax(const VerilogSource& design) override;
  SynthOutcome synthesize(const VerilogSource& design, const std::string& top,
                          const std::string& library_id, double timeout_s) override;
  SimTranscript simulate(const VerilogSource& design, const VerilogSource& testbench,
                         double timeout_s) override;

  static std::string design_key(const VerilogSource& design);
  double library_scale(const std::string& library_id) const;

 private:
  Tables tables_;
};

}  // namespace rtlgauge
