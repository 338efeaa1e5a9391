#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "codemorph/records.hpp"

namespace codemorph {

// valid / (valid + invalid). Throws EmptyGroup when both are zero.
double r_score(long valid, long invalid);

// Levenshtein distance over the Java lexer token stream (the default
// measure) and over raw characters (behind a flag at the call sites).
long edit_distance_tokens(std::string_view a, std::string_view b);
long edit_distance_chars(std::string_view a, std::string_view b);
long levenshtein(std::span<const std::string> a, std::span<const std::string> b);

enum class PValueMethod {
  kAuto,         // exact permutation for n <= 10, else t-approximation
  kPermutation,  // exact permutation over all n! orderings
  kTApprox,      // Student t with n-2 degrees of freedom
};

struct SpearmanResult {
  double rho = 0.0;
  double p_value = 1.0;
};

// Spearman rank correlation with average ranks for ties. Throws
// DegenerateInput on length mismatch, n < 3, or a constant list.
SpearmanResult spearman(std::span<const double> xs, std::span<const double> ys,
                        PValueMethod method = PValueMethod::kAuto);

// Average ranks (1-based) with ties sharing their mean rank.
std::vector<double> average_ranks(std::span<const double> values);

struct MetricsSummary {
  std::string scope_key;
  long valid = 0;
  long invalid = 0;
  long errors = 0;
  std::optional<double> r_score;  // absent when valid+invalid == 0
  std::optional<double> avg_edit_distance;
};

enum class GroupKey { kOverall, kModel, kMrId, kPd, kRepairPattern };

std::string_view group_key_name(GroupKey key);

struct GroupOptions {
  // Eq. (12) counts only valid/invalid; errors are infrastructure noise.
  bool errors_as_invalid = false;
  // When set, supplies (base_text, mutant_text) for a mutant id so the
  // per-group average token edit distance can be computed.
  std::function<std::optional<std::pair<std::string, std::string>>(
      const std::string& mutant_id)>
      texts_for;
};

// One summary per distinct key value, sorted by key. Per-MR grouping
// covers single-perturbation records (pd == 1) only, mirroring the
// single-distance analysis.
std::vector<MetricsSummary> group_metrics(const std::vector<AttemptRecord>& records,
                                          GroupKey key,
                                          const GroupOptions& options = {});

}  // namespace codemorph
