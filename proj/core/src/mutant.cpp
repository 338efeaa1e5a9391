#include "codemorph/mutant.hpp"

#include <algorithm>

#include "codemorph/edits.hpp"
#include "codemorph/errors.hpp"
#include "codemorph/hash.hpp"
#include "codemorph/rng.hpp"

namespace codemorph {

std::string ComboSpec::code() const {
  std::string out;
  for (MrId id : mr_ids) out += mr_code(id);
  return out;
}

PerturbationList detect_applicable(const BaseSample& sample, std::uint64_t seed) {
  PerturbationList list;
  list.sample_id = sample.id;
  for (MrId id : all_mrs()) {
    MrContext ctx;
    ctx.seed = seed;
    MrOutcome out = apply_mr(id, sample.source, ctx);
    if (out.applied) list.applicable.push_back(id);
  }
  return list;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) /
             static_cast<std::uint64_t>(i);
  }
  return result;
}

namespace {

// Subsets of `items` of size k in lexicographic index order.
std::vector<std::vector<MrId>> all_subsets(const std::vector<MrId>& items, int k) {
  std::vector<std::vector<MrId>> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  int n = static_cast<int>(items.size());
  while (true) {
    std::vector<MrId> subset;
    subset.reserve(static_cast<std::size_t>(k));
    for (int i : idx) subset.push_back(items[static_cast<std::size_t>(i)]);
    out.push_back(std::move(subset));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

std::vector<ComboSpec> enumerate_combos(const PerturbationList& list, int pd,
                                        int cap, std::uint64_t seed) {
  const int l = static_cast<int>(list.applicable.size());
  if (pd < 1 || pd > l) {
    throw RangeError("pd " + std::to_string(pd) + " outside 1.." +
                     std::to_string(l));
  }
  if (cap < 1) throw RangeError("cap must be >= 1");

  std::vector<MrId> sorted = list.applicable;
  std::sort(sorted.begin(), sorted.end());

  std::vector<std::vector<MrId>> subsets = all_subsets(sorted, pd);
  if (subsets.size() > static_cast<std::size_t>(cap)) {
    SplitMix64 rng(mix_seed(seed, fnv1a64(list.sample_id) ^
                                      static_cast<std::uint64_t>(pd)));
    rng.shuffle(subsets);
    subsets.resize(static_cast<std::size_t>(cap));
    std::sort(subsets.begin(), subsets.end());
  }

  std::vector<ComboSpec> out;
  out.reserve(subsets.size());
  for (std::vector<MrId>& s : subsets) out.push_back(ComboSpec{std::move(s)});
  return out;
}

int perturbation_distance(const std::vector<bool>& step_applied) {
  int pd = 0;
  for (bool applied : step_applied)
    if (applied) ++pd;
  return pd;
}

Mutant generate_mutant(const BaseSample& sample, const ComboSpec& combo,
                       std::uint64_t seed) {
  Mutant mutant;
  mutant.base_id = sample.id;
  mutant.combo = combo;
  std::sort(mutant.combo.mr_ids.begin(), mutant.combo.mr_ids.end());
  mutant.seed = seed;
  mutant.id = sample.id + ":" + mutant.combo.code() + ":" + std::to_string(seed);

  MrContext ctx;
  ctx.seed = seed;
  std::string text = sample.source;
  for (MrId id : mutant.combo.mr_ids) {
    MrOutcome step = apply_mr(id, text, ctx);
    mutant.step_applied.push_back(step.applied);
    if (step.applied) {
      mutant.rename_map.merge(step.rename_map);
      text = std::move(step.text);
    }
  }
  mutant.text = std::move(text);
  mutant.pd = perturbation_distance(mutant.step_applied);
  mutant.degenerate = !text_differs(sample.source, mutant.text);
  mutant.interaction =
      mutant.pd < static_cast<int>(mutant.combo.mr_ids.size());
  return mutant;
}

}  // namespace codemorph
