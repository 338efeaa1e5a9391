#include "codemorph/records.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "codemorph/errors.hpp"

namespace codemorph {

using nlohmann::json;

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kValid: return "valid";
    case Outcome::kInvalid: return "invalid";
    case Outcome::kError: return "error";
  }
  return "error";
}

std::optional<Outcome> outcome_from_name(std::string_view name) {
  if (name == "valid") return Outcome::kValid;
  if (name == "invalid") return Outcome::kInvalid;
  if (name == "error") return Outcome::kError;
  return std::nullopt;
}

std::string record_to_json_line(const AttemptRecord& r) {
  json j{{"mutant_id", r.mutant_id},
         {"base_id", r.base_id},
         {"model", r.model},
         {"dataset", r.dataset},
         {"repair_pattern", r.repair_pattern},
         {"combo", r.combo},
         {"pd", r.pd},
         {"outcome", std::string(outcome_name(r.outcome))},
         {"detail", r.detail},
         {"prompt_hash", r.prompt_hash},
         {"response_hash", r.response_hash},
         {"latency_ms", r.latency_ms},
         {"timestamp", r.timestamp}};
  return j.dump();
}

AttemptRecord record_from_json_line(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed record: ") + e.what());
  }
  AttemptRecord r;
  r.mutant_id = j.at("mutant_id").get<std::string>();
  r.base_id = j.value("base_id", "");
  r.model = j.value("model", "");
  r.dataset = j.value("dataset", "");
  r.repair_pattern = j.value("repair_pattern", "unknown");
  r.combo = j.value("combo", "");
  r.pd = j.value("pd", 0);
  auto o = outcome_from_name(j.at("outcome").get<std::string>());
  if (!o) throw IoError("unknown outcome in record");
  r.outcome = *o;
  r.detail = j.value("detail", "");
  r.prompt_hash = j.value("prompt_hash", "");
  r.response_hash = j.value("response_hash", "");
  r.latency_ms = j.value("latency_ms", 0L);
  r.timestamp = j.value("timestamp", "");
  return r;
}

std::vector<AttemptRecord> read_records(const std::filesystem::path& path) {
  std::vector<AttemptRecord> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(record_from_json_line(line));
  }
  return out;
}

void append_record(const std::filesystem::path& path, const AttemptRecord& r) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::app);
  if (!out) throw IoError("cannot append to " + path.string());
  out << record_to_json_line(r) << "\n";
  if (!out) throw IoError("short write to " + path.string());
}

std::vector<AttemptRecord> read_all_runs(const std::filesystem::path& runs_root) {
  std::vector<AttemptRecord> out;
  if (!std::filesystem::exists(runs_root)) return out;
  std::vector<std::filesystem::path> files;
  for (const auto& entry :
       std::filesystem::recursive_directory_iterator(runs_root)) {
    if (entry.is_regular_file() && entry.path().filename() == "attempts.jsonl") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::vector<AttemptRecord> part = read_records(f);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace codemorph
