#include "rtlgauge/gates.hpp"

#include "rtlgauge/frontend.hpp"

namespace rtlgauge {

Verdict judge_simulation(const SimTranscript& transcript,
                         const std::vector<std::string>& pass_patterns,
                         const std::vector<std::string>& fail_patterns) {
  if (transcript.timed_out) return {false, "simulation timed out"};
  if (!transcript.exit_ok) return {false, "nonzero exit status"};
  for (const auto& p : fail_patterns) {
    auto pos = transcript.stdout_text.find(p);
    if (pos != std::string::npos)
      return {false, "fail signal '" + p + "' at offset " + std::to_string(pos)};
  }
  for (const auto& p : pass_patterns) {
    if (transcript.stdout_text.find(p) != std::string::npos) return {true, ""};
  }
  return {false, "no pass string in transcript"};
}

GateTrace run_gates(const VerilogSource& design, const GateJob& job, Backend& backend,
                    const ToolchainConfig& cfg) {
  GateTrace trace;
  trace.syntax = backend.check_syntax(design);
  if (trace.syntax->status != SyntaxOutcome::Status::pass) return trace;

  try {
    trace.top_module = resolve_top_module(design.text, job.expected_top);
  } catch (const FrontendError& e) {
    // structural failure at the syntax stage: the tool accepted the text but
    // there is nothing to synthesize
    trace.syntax->status = SyntaxOutcome::Status::fail;
    trace.syntax->diagnostics += std::string(trace.syntax->diagnostics.empty() ? "" : "\n") +
                                 "[rtlgauge] " + e.what();
    return trace;
  }

  trace.synth = backend.synthesize(design, trace.top_module, cfg.default_library,
                                   cfg.synth_timeout_s);
  if (trace.synth->status != SynthOutcome::Status::ok) return trace;

  trace.sim = backend.simulate(design, job.testbench, cfg.sim_timeout_s);
  if (trace.sim->infra) return trace;
  const auto& pass = job.pass_patterns.empty() ? cfg.pass_patterns : job.pass_patterns;
  const auto& fail = job.fail_patterns.empty() ? cfg.fail_patterns : job.fail_patterns;
  trace.sim_verdict = judge_simulation(*trace.sim, pass, fail);
  return trace;
}

std::map<std::string, SynthOutcome> synthesize_all_libraries(
    const VerilogSource& design, const std::string& top,
    const std::vector<std::string>& libraries, Backend& backend, double timeout_s) {
  std::map<std::string, SynthOutcome> out;
  for (const auto& lib : libraries) {
    try {
      out[lib] = backend.synthesize(design, top, lib, timeout_s);
    } catch (const std::exception& e) {
      SynthOutcome o;
      o.status = SynthOutcome::Status::infra;
      o.diagnostics = e.what();
      out[lib] = o;
    }
  }
  return out;
}

}  // namespace rtlgauge
