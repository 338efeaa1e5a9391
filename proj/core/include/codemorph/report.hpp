#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "codemorph/metrics.hpp"
#include "codemorph/store.hpp"

namespace codemorph {

// Markdown + CSV table for one grouping.
std::string summaries_to_markdown(const std::vector<MetricsSummary>& summaries,
                                  std::string_view key_header);
std::string summaries_to_csv(const std::vector<MetricsSummary>& summaries);

// Emits report_<grouping>.{md,csv} for overall/model/mr_id/pd/
// repair_pattern plus pd_series.csv (pd vs R-score, ready for external
// plotting). Throws IoError.
void render_report(const std::vector<AttemptRecord>& records,
                   const GroupOptions& options,
                   const std::filesystem::path& out_dir);

// Readability-repair training pairs: one JSONL line per non-degenerate
// mutant with {x: perturbed, x_prime: original, base_id, combo}. Returns
// the pair count. Deterministic: mutants ordered by id.
long export_pairs(
    const MutantStore& store,
    const std::function<std::optional<std::string>(const std::string& base_id)>&
        base_source,
    const std::filesystem::path& out_path);

}  // namespace codemorph
