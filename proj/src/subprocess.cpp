#include "rtlgauge/subprocess.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>

namespace rtlgauge {

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  out += "'";
  return out;
}

RunResult run_command(const std::vector<std::string>& argv, const std::string& workdir,
                      double timeout_s) {
  RunResult res;
  for (size_t i = 0; i < argv.size(); ++i) {
    if (i) res.command_line += ' ';
    res.command_line += argv[i];
  }

  int pipefd[2];
  if (pipe(pipefd) != 0) {
    res.spawn_failed = true;
    res.spawn_error = std::strerror(errno);
    return res;
  }

  auto t0 = std::chrono::steady_clock::now();
  pid_t pid = fork();
  if (pid < 0) {
    res.spawn_failed = true;
    res.spawn_error = std::strerror(errno);
    close(pipefd[0]);
    close(pipefd[1]);
    return res;
  }
  if (pid == 0) {
    setpgid(0, 0);  // own process group so the whole tree can be killed
    if (!workdir.empty() && chdir(workdir.c_str()) != 0) _exit(127);
    dup2(pipefd[1], STDOUT_FILENO);
    dup2(pipefd[1], STDERR_FILENO);
    close(pipefd[0]);
    close(pipefd[1]);
    std::vector<char*> cargv;
    cargv.reserve(argv.size() + 1);
    for (const auto& a : argv) cargv.push_back(const_cast<char*>(a.c_str()));
    cargv.push_back(nullptr);
    execvp(cargv[0], cargv.data());
    _exit(127);
  }

  close(pipefd[1]);
  fcntl(pipefd[0], F_SETFL, O_NONBLOCK);

  const auto deadline = t0 + std::chrono::duration<double>(timeout_s);
  bool exited = false;
  int status = 0;
  char buf[4096];
  while (true) {
    pollfd pfd{pipefd[0], POLLIN, 0};
    auto now = std::chrono::steady_clock::now();
    if (!res.timed_out && now >= deadline) {
      res.timed_out = true;
      kill(-pid, SIGKILL);
    }
    int wait_ms = res.timed_out
                      ? 50
                      : static_cast<int>(std::min(
                            200.0, std::chrono::duration<double>(deadline - now).count() * 1000.0) + 1);
    int pr = poll(&pfd, 1, wait_ms);
    if (pr > 0) {
      ssize_t got;
      while ((got = read(pipefd[0], buf, sizeof(buf))) > 0)
        res.output.append(buf, static_cast<size_t>(got));
      if (got == 0) {  // writer closed
        break;
      }
    }
    pid_t w = waitpid(pid, &status, WNOHANG);
    if (w == pid) {
      exited = true;
      // drain any remainder
      ssize_t got;
      while ((got = read(pipefd[0], buf, sizeof(buf))) > 0)
        res.output.append(buf, static_cast<size_t>(got));
      break;
    }
  }
  close(pipefd[0]);
  if (!exited) waitpid(pid, &status, 0);
  res.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
  else if (WIFSIGNALED(status)) res.exit_code = 128 + WTERMSIG(status);
  return res;
}

RunResult run_shell(const std::string& command, const std::string& workdir, double timeout_s) {
  auto res = run_command({"/bin/sh", "-c", command}, workdir, timeout_s);
  res.command_line = command;
  return res;
}

}  // namespace rtlgauge
