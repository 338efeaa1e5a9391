#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace codemorph {

// Oracle outcome. Errors are infrastructure failures and are excluded
// from R-score by default; they never count as model fragility.
enum class Outcome { kValid, kInvalid, kError };

std::string_view outcome_name(Outcome o);
std::optional<Outcome> outcome_from_name(std::string_view name);

// One line of runs/<campaign>/attempts.jsonl.
struct AttemptRecord {
  std::string mutant_id;
  std::string base_id;
  std::string model;
  std::string dataset;
  std::string repair_pattern;
  std::string combo;  // e.g. "m1m4"
  int pd = 0;
  Outcome outcome = Outcome::kError;
  std::string detail;
  std::string prompt_hash;
  std::string response_hash;
  long latency_ms = 0;
  std::string timestamp;  // ISO-8601 UTC
};

std::string record_to_json_line(const AttemptRecord& r);
AttemptRecord record_from_json_line(const std::string& line);  // throws IoError

std::vector<AttemptRecord> read_records(const std::filesystem::path& path);
void append_record(const std::filesystem::path& path, const AttemptRecord& r);

// All attempts.jsonl files under a runs directory, merged; campaigns are
// visited in lexicographic order.
std::vector<AttemptRecord> read_all_runs(const std::filesystem::path& runs_root);

}  // namespace codemorph
