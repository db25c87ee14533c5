#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rtlgauge/frontend.hpp"

namespace rtlgauge {

// Post-synthesis figures of merit for one (design, library) pair.
struct SynthMetrics {
  double area = 0.0;     // library area units, > 0 for a non-empty design
  double delay = 0.0;    // ns, critical path
  long warnings = 0;
  std::string library_id;
};

struct SyntaxOutcome {
  enum class Status { pass, fail, infra };
  Status status = Status::pass;
  std::string diagnostics;
  std::string command;  // exact invocation, for audit
  int exit_code = 0;
};

struct SynthOutcome {
  enum class Status { ok, error, timeout, infra };
  Status status = Status::ok;
  std::optional<SynthMetrics> metrics;  // set iff status == ok
  std::string diagnostics;              // preserved verbatim for the taxonomy
  double wall_s = 0.0;
  std::string command;
};

struct SimTranscript {
  std::string stdout_text;  // retained verbatim
  bool exit_ok = false;
  bool timed_out = false;
  bool infra = false;
  double wall_s = 0.0;
  std::string command;
};

struct Verdict {
  bool pass = false;
  std::string reason;
};

// Three sequential gates; a later stage is populated only if every earlier
// stage passed.
struct GateTrace {
  std::optional<SyntaxOutcome> syntax;
  std::optional<SynthOutcome> synth;
  std::optional<SimTranscript> sim;
  std::optional<Verdict> sim_verdict;
  std::string top_module;

  bool syntax_passed() const {
    return syntax && syntax->status == SyntaxOutcome::Status::pass;
  }
  bool synth_ok() const { return synth && synth->status == SynthOutcome::Status::ok; }
  bool passed_all() const { return syntax_passed() && synth_ok() && sim_verdict && sim_verdict->pass; }
  bool infra_failure() const {
    return (syntax && syntax->status == SyntaxOutcome::Status::infra) ||
           (synth && synth->status == SynthOutcome::Status::infra) ||
           (sim && sim->infra);
  }
};

// Pluggable gate executor. Implementations must be callable from concurrent
// workers; no shared mutable state across invocations.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual SyntaxOutcome check_syntax(const VerilogSource& design) = 0;
  virtual SynthOutcome synthesize(const VerilogSource& design, const std::string& top,
                                  const std::string& library_id, double timeout_s) = 0;
  virtual SimTranscript simulate(const VerilogSource& design, const VerilogSource& testbench,
                                 double timeout_s) = 0;
};

}  // namespace rtlgauge
