#include "codemorph/dataset.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "codemorph/edits.hpp"
#include "codemorph/errors.hpp"

namespace codemorph {

using nlohmann::json;

std::vector<BaseSample> load_samples(const std::filesystem::path& root) {
  if (!std::filesystem::is_directory(root)) {
    throw IoError("dataset root is not a directory: " + root.string());
  }
  std::vector<BaseSample> out;
  for (const auto& entry : std::filesystem::directory_iterator(root)) {
    if (!entry.is_directory()) continue;
    std::filesystem::path source_path = entry.path() / "source.java";
    if (!std::filesystem::exists(source_path)) continue;

    BaseSample sample;
    sample.id = entry.path().filename().string();
    sample.oracle_ref = sample.id;

    std::ifstream in(source_path, std::ios::binary);
    if (!in) throw IoError("cannot read " + source_path.string());
    std::string raw(std::istreambuf_iterator<char>(in),
                    std::istreambuf_iterator<char>{});
    sample.source = normalize_newlines(raw);

    std::filesystem::path meta_path = entry.path() / "meta.json";
    if (std::filesystem::exists(meta_path)) {
      std::ifstream meta_in(meta_path);
      json meta;
      try {
        meta_in >> meta;
      } catch (const json::exception& e) {
        throw IoError("malformed " + meta_path.string() + ": " + e.what());
      }
      sample.repair_pattern = meta.value("repair_pattern", "unknown");
      sample.dataset = meta.value("dataset", root.filename().string());
      if (meta.contains("oracle")) {
        for (const json& arg : meta["oracle"]) {
          sample.oracle_command.push_back(arg.get<std::string>());
        }
      }
      sample.oracle_ref = meta.value("oracle_ref", sample.id);
    } else {
      sample.dataset = root.filename().string();
    }
    out.push_back(std::move(sample));
  }
  std::sort(out.begin(), out.end(),
            [](const BaseSample& a, const BaseSample& b) { return a.id < b.id; });
  return out;
}

std::optional<BaseSample> find_sample(const std::vector<BaseSample>& samples,
                                      const std::string& id) {
  for (const BaseSample& s : samples) {
    if (s.id == id) return s;
  }
  return std::nullopt;
}

}  // namespace codemorph
