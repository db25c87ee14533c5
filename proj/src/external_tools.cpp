#include "rtlgauge/external_tools.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <regex>

#include "rtlgauge/subprocess.hpp"
#include "rtlgauge/util.hpp"

namespace rtlgauge {

namespace {

std::string substitute(std::string tmpl, const std::map<std::string, std::string>& vars) {
  for (const auto& [key, value] : vars) {
    std::string placeholder = "{" + key + "}";
    size_t pos = 0;
    while ((pos = tmpl.find(placeholder, pos)) != std::string::npos) {
      tmpl.replace(pos, placeholder.size(), value);
      pos += value.size();
    }
  }
  return tmpl;
}

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s)
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') ? c : '_';
  return out.empty() ? "x" : out;
}

std::atomic<unsigned long> g_scratch_seq{0};

bool infra_exit(const RunResult& r) {
  // 126/127: command not found / not executable via sh
  return r.spawn_failed || r.exit_code == 126 || r.exit_code == 127;
}

}  // namespace

long ExternalToolsBackend::count_warnings(const std::string& diagnostics,
                                          const std::vector<std::string>& prefixes) {
  long n = 0;
  for (const auto& line : split(diagnostics, '\n')) {
    auto t = trim(line);
    for (const auto& p : prefixes) {
      if (starts_with(t, p)) {
        ++n;
        break;
      }
    }
  }
  return n;
}

std::filesystem::path ExternalToolsBackend::make_scratch(const std::string& stage,
                                                         const std::string& origin) const {
  auto dir = cfg_.scratch_root / (sanitize(origin) + "_" + stage + "_" +
                                  std::to_string(g_scratch_seq.fetch_add(1)));
  std::filesystem::create_directories(dir);
  return dir;
}

void ExternalToolsBackend::cleanup(const std::filesystem::path& dir, bool failed) const {
  if (cfg_.keep_artifacts && failed) return;  // retain failures for audit
  std::error_code ec;
  std::filesystem::remove_all(dir, ec);
}

SyntaxOutcome ExternalToolsBackend::check_syntax(const VerilogSource& design) {
  SyntaxOutcome out;
  auto dir = make_scratch("syntax", design.origin);
  auto design_path = dir / "design.v";
  write_text_file(design_path, design.text);
  auto cmd = substitute(cfg_.syntax_cmd, {{"design", shell_quote(design_path.string())},
                                          {"workdir", shell_quote(dir.string())}});
  auto r = run_shell(cmd, dir.string(), 30.0);
  out.command = r.command_line;
  out.exit_code = r.exit_code;
  out.diagnostics = r.output;
  if (infra_exit(r)) {
    out.status = SyntaxOutcome::Status::infra;
    out.diagnostics = r.spawn_failed ? r.spawn_error : r.output;
  } else {
    out.status = r.exit_code == 0 ? SyntaxOutcome::Status::pass : SyntaxOutcome::Status::fail;
  }
  cleanup(dir, out.status != SyntaxOutcome::Status::pass);
  return out;
}

SynthOutcome ExternalToolsBackend::synthesize(const VerilogSource& design, const std::string& top,
                                              const std::string& library_id, double timeout_s) {
  SynthOutcome out;
  auto it = cfg_.liberty.find(library_id);
  if (it == cfg_.liberty.end()) {
    out.status = SynthOutcome::Status::infra;
    out.diagnostics = "no liberty file configured for library '" + library_id + "'";
    return out;
  }
  auto dir = make_scratch("synth_" + sanitize(library_id), design.origin);
  auto design_path = dir / "design.v";
  write_text_file(design_path, design.text);
  auto script = substitute(cfg_.synth_script_template, {{"design", design_path.string()},
                                                        {"top", top},
                                                        {"liberty", it->second},
                                                        {"workdir", dir.string()}});
  auto script_path = dir / "synth.ys";
  write_text_file(script_path, script);
  auto r = run_command({cfg_.synth_exe, "-s", script_path.string()}, dir.string(), timeout_s);
  out.command = r.command_line;
  out.wall_s = r.wall_s;
  out.diagnostics = r.output;
  if (infra_exit(r)) {
    out.status = SynthOutcome::Status::infra;
    if (r.spawn_failed) out.diagnostics = r.spawn_error;
  } else if (r.timed_out) {
    out.status = SynthOutcome::Status::timeout;
  } else if (r.exit_code != 0) {
    out.status = SynthOutcome::Status::error;
  } else {
    std::smatch m;
    SynthMetrics metrics;
    metrics.library_id = library_id;
    std::regex area_re(cfg_.area_pattern);
    std::regex delay_re(cfg_.delay_pattern);
    // last area figure wins: with flattened hierarchy the final stat block
    // describes the mapped top module
    double area = -1;
    auto begin = std::sregex_iterator(r.output.begin(), r.output.end(), area_re);
    for (auto i = begin; i != std::sregex_iterator(); ++i) area = std::stod((*i)[1].str());
    if (area <= 0) {
      out.status = SynthOutcome::Status::error;
      out.diagnostics += "\n[rtlgauge] no area figure found in synthesis report";
      cleanup(dir, true);
      return out;
    }
    metrics.area = area;
    if (std::regex_search(r.output, m, delay_re))
      metrics.delay = std::stod(m[1].str()) * cfg_.delay_scale;
    metrics.warnings = count_warnings(r.output, cfg_.warning_prefixes);
    out.status = SynthOutcome::Status::ok;
    out.metrics = metrics;
  }
  cleanup(dir, out.status != SynthOutcome::Status::ok);
  return out;
}

SimTranscript ExternalToolsBackend::simulate(const VerilogSource& design,
                                             const VerilogSource& testbench, double timeout_s) {
  SimTranscript out;
  auto dir = make_scratch("sim", design.origin);
  auto design_path = dir / "design.v";
  auto tb_path = dir / "tb.v";
  write_text_file(design_path, design.text);
  write_text_file(tb_path, testbench.text);
  auto cmd = substitute(cfg_.sim_cmd, {{"design", shell_quote(design_path.string())},
                                       {"testbench", shell_quote(tb_path.string())},
                                       {"workdir", shell_quote(dir.string())}});
  auto r = run_shell(cmd, dir.string(), timeout_s);
  out.command = r.command_line;
  out.stdout_text = r.output;
  out.wall_s = r.wall_s;
  out.timed_out = r.timed_out;
  out.infra = infra_exit(r);
  out.exit_ok = !r.timed_out && r.exit_code == 0;
  cleanup(dir, !out.exit_ok);
  return out;
}

bool tool_available(const std::string& exe_or_cmd) {
  auto first = exe_or_cmd.substr(0, exe_or_cmd.find(' '));
  std::string cmd = "command -v " + shell_quote(first) + " >/dev/null 2>&1";
  auto r = run_shell(cmd, "", 10.0);
  return !r.spawn_failed && r.exit_code == 0;
}

}  // namespace rtlgauge
