#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "codemorph/harness.hpp"
#include "codemorph/mr.hpp"

namespace codemorph {

// Campaign configuration: a JSON file plus command-line overrides. The
// seed is mandatory — a campaign without pinned randomness is not
// reproducible, so there is no wall-clock default.
struct CampaignConfig {
  std::string campaign = "default";
  std::vector<std::filesystem::path> dataset_roots;
  std::vector<MrId> mr_subset;  // empty -> all nine
  int pd_min = 1;
  int pd_max = 9;
  int cap = 20;
  std::optional<std::uint64_t> seed;
  std::filesystem::path out_root = "out";
  ModelEndpointConfig model;
  double oracle_timeout_s = 120.0;
  int oracle_parallelism = 2;
  std::string prompt_template;  // empty -> built-in default
  double max_error_fraction = 0.25;
  bool keep_going = false;

  std::vector<MrId> effective_mrs() const {
    return mr_subset.empty() ? all_mrs() : mr_subset;
  }
};

// Throws ConfigError on unreadable or invalid files.
CampaignConfig load_config(const std::filesystem::path& path);

// Parses "a..b" (or a single "k") into a pd range.
std::pair<int, int> parse_pd_range(const std::string& text);

// Parses "m1,m3,m9" (codes or rule names).
std::vector<MrId> parse_mr_list(const std::string& text);

}  // namespace codemorph
