#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "codemorph/mutant.hpp"
#include "codemorph/records.hpp"

namespace codemorph {

// Deterministic chat-completion endpoint settings. Temperature is pinned
// to 0 so output variation is attributable to code perturbation alone.
struct ModelEndpointConfig {
  std::string base_url;
  std::string model_name;
  double temperature = 0.0;
  int max_tokens = 4096;
  std::string auth_env;  // environment variable holding the bearer token
  double request_timeout_s = 60.0;
  int max_concurrency = 1;
};

class ModelClient {
 public:
  virtual ~ModelClient() = default;
  // Throws TransportError / AuthError.
  virtual std::string complete(const std::string& prompt) = 0;
};

// Chat-completions HTTP client with bounded retry on transport errors.
std::unique_ptr<ModelClient> make_http_client(const ModelEndpointConfig& config);

// Scripted mock: a JSON object mapping prompt-hash keys (see
// prompt_hash_key) to canned responses; the "default" key matches
// anything.
std::unique_ptr<ModelClient> make_mock_client(const std::filesystem::path& fixture);
std::unique_ptr<ModelClient> make_mock_client_from_json(const std::string& json_text);

// Fixture key for a prompt (FNV-1a 64 hex); also recorded per attempt.
std::string prompt_hash_key(const std::string& prompt);

struct OracleConfig {
  std::vector<std::string> command_template;  // argv; {patch_file} {workdir}
  double timeout_s = 120.0;
};

struct RepairAttempt {
  std::string mutant_id;
  std::string prompt;
  std::string raw_response;
  std::optional<std::string> extracted_patch;
  std::optional<std::string> reversed_patch;
  long latency_ms = 0;
};

struct Verdict {
  std::string mutant_id;
  Outcome outcome = Outcome::kError;
  std::string detail;
};

std::string default_prompt_template();

// Replaces every {code} placeholder. Throws TemplateError when the
// placeholder is missing.
std::string build_prompt(const std::string& mutant_text, const std::string& tmpl);

// First fenced code block; failing that, the longest region that parses
// as a Java method or class. Absent when neither exists.
std::optional<std::string> extract_patch(const std::string& raw_response);

// Token-aware inversion of MR1/MR2 renames: identifier tokens equal to a
// new name are replaced by the old name; string literals and comments are
// untouched.
std::string reverse_rename(const std::string& patch, const RenameMap& map);

// Materializes the patch in a fresh scratch directory, substitutes the
// placeholders and runs the command without a shell. Exit 0 -> valid,
// nonzero -> invalid, timeout/spawn failure -> error.
Verdict run_oracle(const OracleConfig& config, const std::string& patch,
                   const BaseSample& sample,
                   const std::filesystem::path& scratch_root);

struct RepairResult {
  RepairAttempt attempt;
  Verdict verdict;
};

// build_prompt -> invoke model -> extract_patch -> reverse_rename ->
// run_oracle. Missing patch yields invalid/"no patch"; infrastructure
// failures yield error verdicts. Artifacts (prompt, response, patches)
// are persisted under artifacts_dir when given.
RepairResult repair_mutant(
    const Mutant& mutant, ModelClient& model, const OracleConfig& oracle,
    const std::string& prompt_template, const BaseSample& sample,
    const std::filesystem::path& scratch_root,
    const std::optional<std::filesystem::path>& artifacts_dir = {});

struct CampaignOptions {
  std::string campaign = "default";
  std::string model_name;
  std::string prompt_template;  // empty -> default template
  int max_concurrency = 1;
  int oracle_parallelism = 2;
  std::filesystem::path out_root;
};

struct CampaignStats {
  long attempted = 0;
  long valid = 0;
  long invalid = 0;
  long errors = 0;
  long skipped = 0;  // already present in the records (resume)
};

// Runs every (mutant, sample) pair through repair_mutant with a bounded
// worker pool, appending one record per attempt to
// out_root/runs/<campaign>/attempts.jsonl. Mutants already recorded are
// skipped, making interrupted campaigns resumable.
CampaignStats run_campaign(
    const std::vector<std::pair<Mutant, BaseSample>>& work, ModelClient& model,
    const OracleConfig& oracle, const CampaignOptions& options);

}  // namespace codemorph
