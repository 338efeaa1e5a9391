#include "codemorph/store.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "codemorph/errors.hpp"

namespace codemorph {

namespace {

using nlohmann::json;

json rename_map_to_json(const RenameMap& map) {
  json vars = json::array();
  for (const RenameEntry& e : map.variables) {
    vars.push_back({{"old", e.old_name}, {"new", e.new_name}});
  }
  json meths = json::array();
  for (const RenameEntry& e : map.methods) {
    meths.push_back({{"old", e.old_name}, {"new", e.new_name}});
  }
  return json{{"variables", vars}, {"methods", meths}};
}

RenameMap rename_map_from_json(const json& j) {
  RenameMap map;
  if (j.contains("variables")) {
    for (const json& e : j["variables"]) {
      map.variables.push_back(RenameEntry{e.at("old").get<std::string>(),
                                          e.at("new").get<std::string>()});
    }
  }
  if (j.contains("methods")) {
    for (const json& e : j["methods"]) {
      map.methods.push_back(RenameEntry{e.at("old").get<std::string>(),
                                        e.at("new").get<std::string>()});
    }
  }
  return map;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("short write to " + path.string());
}

}  // namespace

std::filesystem::path MutantStore::java_path(const Mutant& m) const {
  return root_ / m.base_id / ("pd" + std::to_string(m.pd)) /
         (m.combo.code() + "-" + std::to_string(m.seed) + ".java");
}

void MutantStore::write(const Mutant& m) const {
  std::filesystem::path java = java_path(m);
  std::error_code ec;
  std::filesystem::create_directories(java.parent_path(), ec);
  if (ec) throw IoError("cannot create " + java.parent_path().string());

  write_file(java, m.text);

  json flags = json::array();
  for (bool b : m.step_applied) flags.push_back(b);
  json combo = json::array();
  for (MrId id : m.combo.mr_ids) combo.push_back(mr_code(id));
  json meta{{"id", m.id},
            {"base_id", m.base_id},
            {"combo", combo},
            {"pd", m.pd},
            {"rename_map", rename_map_to_json(m.rename_map)},
            {"seed", m.seed},
            {"flags", flags},
            {"degenerate", m.degenerate},
            {"interaction", m.interaction}};
  std::filesystem::path meta_path = java;
  meta_path.replace_extension(".meta.json");
  write_file(meta_path, meta.dump(2) + "\n");
}

std::optional<Mutant> MutantStore::load(
    const std::filesystem::path& meta_path) const {
  json meta;
  try {
    meta = json::parse(read_file(meta_path));
  } catch (const json::exception& e) {
    throw IoError("malformed meta " + meta_path.string() + ": " + e.what());
  }
  Mutant m;
  m.id = meta.at("id").get<std::string>();
  m.base_id = meta.at("base_id").get<std::string>();
  for (const json& c : meta.at("combo")) {
    auto id = mr_from_code(c.get<std::string>());
    if (!id) throw IoError("bad combo code in " + meta_path.string());
    m.combo.mr_ids.push_back(*id);
  }
  m.pd = meta.at("pd").get<int>();
  m.rename_map = rename_map_from_json(meta.at("rename_map"));
  m.seed = meta.at("seed").get<std::uint64_t>();
  for (const json& f : meta.at("flags")) m.step_applied.push_back(f.get<bool>());
  m.degenerate = meta.value("degenerate", false);
  m.interaction = meta.value("interaction", false);

  std::filesystem::path java = meta_path;
  java.replace_extension();       // drops .json
  java.replace_extension(".java");  // replaces .meta
  m.text = read_file(java);
  return m;
}

std::vector<Mutant> MutantStore::load_all() const {
  std::vector<Mutant> out;
  if (!std::filesystem::exists(root_)) return out;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(root_)) {
    if (!entry.is_regular_file()) continue;
    const std::filesystem::path& p = entry.path();
    if (p.filename().string().ends_with(".meta.json")) {
      if (auto m = load(p)) out.push_back(std::move(*m));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Mutant& a, const Mutant& b) { return a.id < b.id; });
  return out;
}

}  // namespace codemorph
