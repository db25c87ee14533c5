#pragma once

#include <map>
#include <string>
#include <vector>

#include "rtlgauge/backend.hpp"

namespace rtlgauge {

struct ToolchainConfig {
  std::string default_library = "nangate45";
  double synth_timeout_s = 30.0;
  double sim_timeout_s = 60.0;
  std::vector<std::string> pass_patterns = {"ALL TESTS PASSED", "Test passed", "PASS"};
  std::vector<std::string> fail_patterns = {"FAIL", "Mismatch", "Error", "assertion failed"};
};

// Everything run_gates needs to know about the task.
struct GateJob {
  std::string expected_top;
  VerilogSource testbench;
  std::vector<std::string> pass_patterns;  // empty -> config defaults
  std::vector<std::string> fail_patterns;
};

// Pass requires an explicit pass string; any fail signal anywhere in the
// transcript fails (stricter than fail-before-pass only), as does a nonzero
// exit or a timeout. Case-sensitive substring matching.
Verdict judge_simulation(const SimTranscript& transcript,
                         const std::vector<std::string>& pass_patterns,
                         const std::vector<std::string>& fail_patterns);

// Executes the three gates in order with early exit on the first failure.
// The top module is resolved lexically before synthesis; a source with no
// module declaration is recorded as a syntax-stage structural failure.
GateTrace run_gates(const VerilogSource& design, const GateJob& job, Backend& backend,
                    const ToolchainConfig& cfg);

// One outcome per library, independent; a failure under one library never
// aborts the others.
std::map<std::string, SynthOutcome> synthesize_all_libraries(
    const VerilogSource& design, const std::string& top,
    const std::vector<std::string>& libraries, Backend& backend, double timeout_s);

}  // namespace rtlgauge
