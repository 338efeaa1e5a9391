#include "codemorph/harness.hpp"

#include <atomic>
#include <cctype>
#include <chrono>
#include <condition_variable>
#include <csignal>
#include <ctime>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "codemorph/edits.hpp"
#include "codemorph/errors.hpp"
#include "codemorph/hash.hpp"
#include "codemorph/lexer.hpp"
#include "codemorph/parser.hpp"
#include "codemorph/subprocess.hpp"

namespace codemorph {

std::string default_prompt_template() {
  return
      "You are an automated program repair assistant. The Java function below "
      "contains a bug.\n"
      "Fix the bug and return only the complete fixed function in a single "
      "fenced code block.\n"
      "\n"
      "```java\n"
      "{code}\n"
      "```\n";
}

std::string build_prompt(const std::string& mutant_text, const std::string& tmpl) {
  static constexpr std::string_view kPlaceholder = "{code}";
  std::size_t pos = tmpl.find(kPlaceholder);
  if (pos == std::string::npos) {
    throw TemplateError("prompt template lacks the {code} placeholder");
  }
  std::string out;
  out.reserve(tmpl.size() + mutant_text.size());
  std::size_t cursor = 0;
  while (pos != std::string::npos) {
    out.append(tmpl, cursor, pos - cursor);
    out.append(mutant_text);
    cursor = pos + kPlaceholder.size();
    pos = tmpl.find(kPlaceholder, cursor);
  }
  out.append(tmpl, cursor, std::string::npos);
  return out;
}

namespace {

std::optional<std::string> first_fenced_block(const std::string& text) {
  std::size_t open = text.find("```");
  if (open == std::string::npos) return std::nullopt;
  std::size_t content = open + 3;
  // optional language tag up to end of line
  std::size_t eol = text.find('\n', content);
  if (eol == std::string::npos) return std::nullopt;
  bool tag_only = true;
  for (std::size_t i = content; i < eol; ++i) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
    if (!std::isalnum(static_cast<unsigned char>(text[i])) && text[i] != '+' &&
        text[i] != '-' && text[i] != '#') {
      tag_only = false;
      break;
    }
  }
  std::size_t body_start = tag_only ? eol + 1 : content;
  std::size_t close = text.find("```", body_start);
  if (close == std::string::npos) return std::nullopt;
  std::string body = text.substr(body_start, close - body_start);
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r'))
    body.pop_back();
  if (body.empty()) return std::nullopt;
  return body;
}

bool parses_as_java_decl(const std::string& candidate) {
  try {
    SyntaxTree tree = parse_java(candidate);
    if (tree.has_error_nodes()) return false;
    return !find_nodes(tree, NodeKind::kMethodDeclaration).empty() ||
           !find_nodes(tree, NodeKind::kConstructorDeclaration).empty() ||
           !find_nodes(tree, NodeKind::kClassDeclaration).empty();
  } catch (const ParseFatal&) {
    return false;
  }
}

// Longest region that parses as a Java method/class: for each '{', match
// its closing brace, extend the start back to the previous statement/member
// boundary and parse-check the region.
std::optional<std::string> longest_parsing_region(const std::string& text) {
  std::vector<Token> toks;
  for (const Token& t : lex_java(text)) {
    if (!is_trivia(t.kind)) toks.push_back(t);
  }
  std::optional<std::string> best;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (slice(text, toks[i].span) != "{") continue;
    int depth = 0;
    std::size_t j = i;
    for (; j < toks.size(); ++j) {
      std::string_view t = slice(text, toks[j].span);
      if (t == "{") ++depth;
      else if (t == "}") {
        if (--depth == 0) break;
      }
    }
    if (j >= toks.size()) continue;
    // walk back to a boundary
    std::size_t k = i;
    while (k > 0) {
      std::string_view t = slice(text, toks[k - 1].span);
      if (t == ";" || t == "{" || t == "}" || t == "`") break;
      --k;
    }
    std::string candidate = text.substr(
        toks[k].span.start, toks[j].span.end - toks[k].span.start);
    if (!best || candidate.size() > best->size()) {
      if (parses_as_java_decl(candidate)) best = candidate;
    }
  }
  return best;
}

}  // namespace

std::optional<std::string> extract_patch(const std::string& raw_response) {
  if (auto fenced = first_fenced_block(raw_response)) return fenced;
  return longest_parsing_region(raw_response);
}

std::string reverse_rename(const std::string& patch, const RenameMap& map) {
  if (map.empty()) return patch;
  std::map<std::string, std::string, std::less<>> back;
  for (const RenameEntry& e : map.inverse()) {
    back.emplace(e.old_name, e.new_name);  // inverse(): old=new_name here
  }
  std::vector<TextEdit> edits;
  for (const Token& t : lex_java(patch)) {
    if (t.kind != TokenKind::kIdentifier) continue;
    auto it = back.find(slice(patch, t.span));
    if (it == back.end()) continue;
    edits.push_back(TextEdit{t.span, it->second});
  }
  return apply_edits(patch, std::move(edits));
}

namespace {

std::string sanitize_for_path(std::string_view id) {
  std::string out;
  out.reserve(id.size());
  for (char c : id) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ||
        c == '.')
      out.push_back(c);
    else
      out.push_back('_');
  }
  return out;
}

void substitute_placeholder(std::string& s, std::string_view key,
                            const std::string& value) {
  std::size_t pos = 0;
  while ((pos = s.find(key, pos)) != std::string::npos) {
    s.replace(pos, key.size(), value);
    pos += value.size();
  }
}

std::atomic<std::uint64_t> g_scratch_counter{0};

void write_artifact(const std::filesystem::path& dir, const std::string& name,
                    const std::string& content) {
  std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

}  // namespace

Verdict run_oracle(const OracleConfig& config, const std::string& patch,
                   const BaseSample& sample,
                   const std::filesystem::path& scratch_root) {
  Verdict verdict;
  verdict.mutant_id = sample.id;

  std::uint64_t stamp = g_scratch_counter.fetch_add(1);
  std::filesystem::path workdir =
      scratch_root / (sanitize_for_path(sample.id) + "-" + std::to_string(stamp));
  std::error_code ec;
  std::filesystem::create_directories(workdir, ec);
  if (ec) {
    verdict.outcome = Outcome::kError;
    verdict.detail = "cannot create scratch dir " + workdir.string();
    return verdict;
  }

  std::filesystem::path patch_file = workdir / "patch.java";
  {
    std::ofstream out(patch_file, std::ios::binary | std::ios::trunc);
    out.write(patch.data(), static_cast<std::streamsize>(patch.size()));
    if (!out) {
      verdict.outcome = Outcome::kError;
      verdict.detail = "cannot write patch file";
      return verdict;
    }
  }

  // The sample's own suite command takes precedence; the config template
  // is the fallback for datasets without per-sample commands.
  std::vector<std::string> argv =
      sample.oracle_command.empty() ? config.command_template
                                    : sample.oracle_command;
  if (argv.empty()) {
    verdict.outcome = Outcome::kError;
    verdict.detail = "no oracle command for sample " + sample.id;
    std::error_code cleanup_ec;
    std::filesystem::remove_all(workdir, cleanup_ec);
    return verdict;
  }
  for (std::string& arg : argv) {
    substitute_placeholder(arg, "{patch_file}", patch_file.string());
    substitute_placeholder(arg, "{workdir}", workdir.string());
  }

  ExecResult exec = run_command(argv, config.timeout_s, workdir);
  if (exec.timed_out) {
    verdict.outcome = Outcome::kError;
    verdict.detail = "timeout";
  } else if (exec.spawn_failed) {
    verdict.outcome = Outcome::kError;
    verdict.detail = exec.error;
  } else if (exec.exit_code == 0) {
    verdict.outcome = Outcome::kValid;
    verdict.detail = "suite passed";
  } else {
    verdict.outcome = Outcome::kInvalid;
    verdict.detail = "exit code " + std::to_string(exec.exit_code);
    if (!exec.output.empty()) {
      std::string tail = exec.output.size() > 400
                             ? exec.output.substr(exec.output.size() - 400)
                             : exec.output;
      verdict.detail += ": " + tail;
    }
  }
  std::filesystem::remove_all(workdir, ec);
  return verdict;
}

RepairResult repair_mutant(
    const Mutant& mutant, ModelClient& model, const OracleConfig& oracle,
    const std::string& prompt_template, const BaseSample& sample,
    const std::filesystem::path& scratch_root,
    const std::optional<std::filesystem::path>& artifacts_dir) {
  RepairResult result;
  result.attempt.mutant_id = mutant.id;
  result.verdict.mutant_id = mutant.id;

  const std::string& tmpl =
      prompt_template.empty() ? default_prompt_template() : prompt_template;
  result.attempt.prompt = build_prompt(mutant.text, tmpl);

  std::filesystem::path art;
  if (artifacts_dir) {
    art = *artifacts_dir / sanitize_for_path(mutant.id);
    std::error_code ec;
    std::filesystem::create_directories(art, ec);
    if (!ec) write_artifact(art, "prompt.txt", result.attempt.prompt);
  }

  auto start = std::chrono::steady_clock::now();
  try {
    result.attempt.raw_response = model.complete(result.attempt.prompt);
  } catch (const std::runtime_error& e) {
    result.attempt.latency_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count();
    result.verdict.outcome = Outcome::kError;
    result.verdict.detail = e.what();
    return result;
  }
  result.attempt.latency_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count();
  if (artifacts_dir) write_artifact(art, "response.txt", result.attempt.raw_response);

  result.attempt.extracted_patch = extract_patch(result.attempt.raw_response);
  if (!result.attempt.extracted_patch) {
    result.verdict.outcome = Outcome::kInvalid;
    result.verdict.detail = "no patch";
    return result;
  }
  if (artifacts_dir) write_artifact(art, "patch.java", *result.attempt.extracted_patch);

  result.attempt.reversed_patch =
      reverse_rename(*result.attempt.extracted_patch, mutant.rename_map);
  if (artifacts_dir) write_artifact(art, "reversed.java", *result.attempt.reversed_patch);

  Verdict v = run_oracle(oracle, *result.attempt.reversed_patch, sample, scratch_root);
  result.verdict.outcome = v.outcome;
  result.verdict.detail = v.detail;
  return result;
}

namespace {

std::atomic<bool> g_interrupted{false};

std::string utc_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Bounded counting semaphore for oracle parallelism.
class Semaphore {
 public:
  explicit Semaphore(int count) : count_(count) {}
  void acquire() {
    std::unique_lock<std::mutex> lock(m_);
    cv_.wait(lock, [&] { return count_ > 0; });
    --count_;
  }
  void release() {
    std::lock_guard<std::mutex> lock(m_);
    ++count_;
    cv_.notify_one();
  }

 private:
  std::mutex m_;
  std::condition_variable cv_;
  int count_;
};

}  // namespace

CampaignStats run_campaign(
    const std::vector<std::pair<Mutant, BaseSample>>& work, ModelClient& model,
    const OracleConfig& oracle, const CampaignOptions& options) {
  CampaignStats stats;
  g_interrupted = false;

  std::filesystem::path run_dir = options.out_root / "runs" / options.campaign;
  std::filesystem::path records_path = run_dir / "attempts.jsonl";
  std::filesystem::path artifacts_dir = run_dir / "artifacts";
  std::filesystem::path scratch_root = options.out_root / "scratch";

  std::set<std::string> done;
  for (const AttemptRecord& r : read_records(records_path)) {
    done.insert(r.mutant_id);
  }

  std::vector<const std::pair<Mutant, BaseSample>*> tasks;
  for (const auto& item : work) {
    if (done.count(item.first.id)) {
      ++stats.skipped;
      continue;
    }
    tasks.push_back(&item);
  }

  std::mutex sink_mutex;
  std::mutex sample_locks_mutex;
  std::map<std::string, std::unique_ptr<std::mutex>> sample_locks;
  Semaphore oracle_slots(std::max(1, options.oracle_parallelism));
  std::atomic<std::size_t> next{0};

  auto previous_handler = std::signal(SIGINT, [](int) { g_interrupted = true; });

  auto worker = [&]() {
    while (!g_interrupted) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= tasks.size()) break;
      const auto& [mutant, sample] = *tasks[idx];

      std::mutex* sample_lock;
      {
        std::lock_guard<std::mutex> guard(sample_locks_mutex);
        auto& slot = sample_locks[sample.id];
        if (!slot) slot = std::make_unique<std::mutex>();
        sample_lock = slot.get();
      }

      RepairResult result;
      {
        // Oracles for one base sample never run concurrently; the global
        // semaphore bounds total oracle processes.
        std::lock_guard<std::mutex> guard(*sample_lock);
        oracle_slots.acquire();
        result = repair_mutant(mutant, model, oracle, options.prompt_template,
                               sample, scratch_root, artifacts_dir);
        oracle_slots.release();
      }

      AttemptRecord record;
      record.mutant_id = mutant.id;
      record.base_id = mutant.base_id;
      record.model = options.model_name;
      record.dataset = sample.dataset;
      record.repair_pattern = sample.repair_pattern;
      record.combo = mutant.combo.code();
      record.pd = mutant.pd;
      record.outcome = result.verdict.outcome;
      record.detail = result.verdict.detail;
      record.prompt_hash = prompt_hash_key(result.attempt.prompt);
      record.response_hash = hex64(fnv1a64(result.attempt.raw_response));
      record.latency_ms = result.attempt.latency_ms;
      record.timestamp = utc_timestamp();

      std::lock_guard<std::mutex> guard(sink_mutex);
      append_record(records_path, record);
      ++stats.attempted;
      switch (record.outcome) {
        case Outcome::kValid: ++stats.valid; break;
        case Outcome::kInvalid: ++stats.invalid; break;
        case Outcome::kError: ++stats.errors; break;
      }
    }
  };

  int workers = std::max(1, options.max_concurrency);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  std::signal(SIGINT, previous_handler);
  return stats;
}

}  // namespace codemorph
