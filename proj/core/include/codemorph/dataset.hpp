#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "codemorph/mutant.hpp"

namespace codemorph {

// Loads base samples from a dataset root. Layout: one directory per
// sample containing source.java plus meta.json with
//   {"repair_pattern": "...", "oracle": ["cmd", "{patch_file}", ...],
//    "dataset": "..."}
// The directory name is the sample id. Sources are newline-normalized at
// ingestion. Throws IoError when the root is unreadable.
std::vector<BaseSample> load_samples(const std::filesystem::path& root);

std::optional<BaseSample> find_sample(const std::vector<BaseSample>& samples,
                                      const std::string& id);

}  // namespace codemorph
