#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace codemorph {

struct ExecResult {
  int exit_code = -1;
  bool timed_out = false;
  bool spawn_failed = false;
  std::string output;  // combined stdout+stderr, capped
  std::string error;   // spawn failure description

  bool ok() const { return !timed_out && !spawn_failed && exit_code == 0; }
};

// Runs argv directly (no shell). On timeout the process group is killed
// with SIGKILL. Output capture is capped at `max_capture` bytes.
ExecResult run_command(const std::vector<std::string>& argv, double timeout_s,
                       const std::optional<std::filesystem::path>& cwd = {},
                       std::size_t max_capture = 16384);

}  // namespace codemorph
