#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "codemorph/mr.hpp"

namespace codemorph {

struct BaseSample {
  std::string id;
  std::string source;
  std::string dataset;
  std::string repair_pattern = "unknown";
  std::string oracle_ref;                   // identifier of the oracle command
  std::vector<std::string> oracle_command;  // argv template
};

// MRs that verifiably change this sample's text, ascending.
struct PerturbationList {
  std::string sample_id;
  std::vector<MrId> applicable;
};

// A sorted, non-empty MR subset.
struct ComboSpec {
  std::vector<MrId> mr_ids;

  // Concatenated MR numbers, e.g. "m1m4m5m9".
  std::string code() const;
  bool operator==(const ComboSpec&) const = default;
};

struct Mutant {
  std::string id;       // <base_id>:<combo>:<seed>
  std::string base_id;
  ComboSpec combo;
  std::string text;
  RenameMap rename_map;
  int pd = 0;
  std::vector<bool> step_applied;  // per combo member, ascending
  bool degenerate = false;         // final text equals the original
  bool interaction = false;        // pd < |combo|
  std::uint64_t seed = 0;
};

// Applies each of the nine MRs independently to the original source and
// keeps those that changed it. Deterministic per seed.
PerturbationList detect_applicable(const BaseSample& sample, std::uint64_t seed);

// All C(l, pd) subsets when that count is within `cap`; otherwise a
// seeded uniform sample of exactly `cap` subsets without replacement.
// Output is sorted canonically. Throws RangeError when pd is outside
// 1..len(list).
std::vector<ComboSpec> enumerate_combos(const PerturbationList& list, int pd,
                                        int cap, std::uint64_t seed);

inline constexpr int kDefaultComboCap = 20;

// Applies the combo in ascending MR order, threading the text through and
// recording which steps changed it.
Mutant generate_mutant(const BaseSample& sample, const ComboSpec& combo,
                       std::uint64_t seed);

// Number of steps whose application changed the text.
int perturbation_distance(const std::vector<bool>& step_applied);

// C(n, k) without overflow for n <= 62.
std::uint64_t binomial(int n, int k);

}  // namespace codemorph
