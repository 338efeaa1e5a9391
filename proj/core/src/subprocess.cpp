#include "codemorph/subprocess.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <string.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <thread>

namespace codemorph {

ExecResult run_command(const std::vector<std::string>& argv, double timeout_s,
                       const std::optional<std::filesystem::path>& cwd,
                       std::size_t max_capture) {
  ExecResult result;
  if (argv.empty()) {
    result.spawn_failed = true;
    result.error = "empty argv";
    return result;
  }

  int out_pipe[2];
  int err_pipe[2];  // exec errno channel
  if (pipe(out_pipe) != 0 || pipe2(err_pipe, O_CLOEXEC) != 0) {
    result.spawn_failed = true;
    result.error = "pipe failed";
    return result;
  }

  pid_t pid = fork();
  if (pid < 0) {
    result.spawn_failed = true;
    result.error = "fork failed";
    return result;
  }

  if (pid == 0) {
    setpgid(0, 0);
    dup2(out_pipe[1], STDOUT_FILENO);
    dup2(out_pipe[1], STDERR_FILENO);
    close(out_pipe[0]);
    close(out_pipe[1]);
    close(err_pipe[0]);
    if (cwd && chdir(cwd->c_str()) != 0) {
      int err = errno;
      (void)!write(err_pipe[1], &err, sizeof(err));
      _exit(127);
    }
    std::vector<char*> cargv;
    cargv.reserve(argv.size() + 1);
    for (const std::string& a : argv) cargv.push_back(const_cast<char*>(a.c_str()));
    cargv.push_back(nullptr);
    execvp(cargv[0], cargv.data());
    int err = errno;
    (void)!write(err_pipe[1], &err, sizeof(err));
    _exit(127);
  }

  close(out_pipe[1]);
  close(err_pipe[1]);

  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(timeout_s));

  bool out_open = true;
  char buf[4096];
  while (out_open) {
    auto now = std::chrono::steady_clock::now();
    if (now >= deadline) {
      result.timed_out = true;
      kill(-pid, SIGKILL);
      kill(pid, SIGKILL);
      break;
    }
    int wait_ms = static_cast<int>(
        std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now)
            .count());
    wait_ms = std::max(1, std::min(wait_ms, 200));
    struct pollfd pfd{out_pipe[0], POLLIN, 0};
    int rc = poll(&pfd, 1, wait_ms);
    if (rc > 0) {
      ssize_t n = read(out_pipe[0], buf, sizeof(buf));
      if (n <= 0) {
        out_open = false;
      } else if (result.output.size() < max_capture) {
        result.output.append(buf, static_cast<std::size_t>(
                                      std::min<ssize_t>(n, static_cast<ssize_t>(
                                                               max_capture -
                                                               result.output.size()))));
      }
    }
  }
  close(out_pipe[0]);

  int status = 0;
  waitpid(pid, &status, 0);

  int exec_errno = 0;
  ssize_t n = read(err_pipe[0], &exec_errno, sizeof(exec_errno));
  close(err_pipe[0]);
  if (n == static_cast<ssize_t>(sizeof(exec_errno))) {
    result.spawn_failed = true;
    result.error = std::string("exec failed: ") + strerror(exec_errno);
    return result;
  }

  if (result.timed_out) return result;

  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  } else if (WIFSIGNALED(status)) {
    result.exit_code = 128 + WTERMSIG(status);
  }
  return result;
}

}  // namespace codemorph
