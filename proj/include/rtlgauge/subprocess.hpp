#pragma once

#include <string>
#include <vector>

namespace rtlgauge {

struct RunResult {
  int exit_code = -1;
  bool timed_out = false;
  bool spawn_failed = false;
  std::string spawn_error;
  std::string output;  // stdout and stderr merged
  double wall_s = 0.0;
  std::string command_line;
};

// Runs argv with stderr merged into stdout, killing the process group after
// timeout_s. workdir may be empty (inherit cwd).
RunResult run_command(const std::vector<std::string>& argv, const std::string& workdir,
                      double timeout_s);

// Convenience: run a shell command line via /bin/sh -c.
RunResult run_shell(const std::string& command, const std::string& workdir, double timeout_s);

std::string shell_quote(const std::string& s);

}  // namespace rtlgauge
