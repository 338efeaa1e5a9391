#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "codemorph/mutant.hpp"

namespace codemorph {

// On-disk mutant store:
//   <root>/<sample-id>/pd<k>/<combo>-<seed>.java
//   <root>/<sample-id>/pd<k>/<combo>-<seed>.meta.json
class MutantStore {
 public:
  explicit MutantStore(std::filesystem::path root) : root_(std::move(root)) {}

  const std::filesystem::path& root() const { return root_; }

  std::filesystem::path java_path(const Mutant& m) const;

  // Writes mutant text and metadata. Throws IoError.
  void write(const Mutant& m) const;

  // Loads every stored mutant, sorted by id. Throws IoError on a
  // malformed store.
  std::vector<Mutant> load_all() const;

  std::optional<Mutant> load(const std::filesystem::path& meta_path) const;

 private:
  std::filesystem::path root_;
};

}  // namespace codemorph
