#include <benchmark/benchmark.h>

#include <string>

#include "codemorph/metrics.hpp"
#include "codemorph/mr.hpp"
#include "codemorph/mutant.hpp"
#include "codemorph/parser.hpp"

namespace {

const std::string kMediumSource = R"(class Ledger {
  private int balance;
  private int[] history = new int[64];
  private int cursor;

  int helper(int v) { return v + 1; }

  void post(int amount) {
    int next = balance + amount;
    if (next < 0 && cursor > 0) {
      next = 0;
    }
    for (int i = 0; i < cursor; i++) {
      history[i] = history[i] + 1;
    }
    balance = next;
    history[cursor] = amount;
    cursor = cursor + 1;
  }

  int drain() {
    int total = 0;
    for (int i = 0; i < cursor; i++) {
      total = total + history[i];
    }
    cursor = 0;
    return helper(total);
  }
}
)";

void BM_ParseJava(benchmark::State& state) {
  for (auto _ : state) {
    codemorph::SyntaxTree tree = codemorph::parse_java(kMediumSource);
    benchmark::DoNotOptimize(tree.root().children.size());
  }
}
BENCHMARK(BM_ParseJava);

void BM_ApplyMr(benchmark::State& state) {
  codemorph::MrId id = static_cast<codemorph::MrId>(state.range(0));
  for (auto _ : state) {
    codemorph::MrContext ctx;
    ctx.seed = 11;
    codemorph::MrOutcome out = codemorph::apply_mr(id, kMediumSource, ctx);
    benchmark::DoNotOptimize(out.applied);
  }
}
BENCHMARK(BM_ApplyMr)->DenseRange(1, 9);

void BM_GenerateMutant(benchmark::State& state) {
  codemorph::BaseSample sample;
  sample.id = "bench";
  sample.source = kMediumSource;
  codemorph::ComboSpec combo{{codemorph::MrId::kVariableRenaming,
                              codemorph::MrId::kConditionalExpression,
                              codemorph::MrId::kBinaryExpression,
                              codemorph::MrId::kForToWhileLoop}};
  for (auto _ : state) {
    codemorph::Mutant m = codemorph::generate_mutant(sample, combo, 13);
    benchmark::DoNotOptimize(m.pd);
  }
}
BENCHMARK(BM_GenerateMutant);

void BM_EnumerateCombos(benchmark::State& state) {
  codemorph::PerturbationList list{"bench", codemorph::all_mrs()};
  for (auto _ : state) {
    auto combos = codemorph::enumerate_combos(list, 4, 20, 99);
    benchmark::DoNotOptimize(combos.size());
  }
}
BENCHMARK(BM_EnumerateCombos);

void BM_EditDistanceTokens(benchmark::State& state) {
  codemorph::MrContext ctx;
  ctx.seed = 5;
  std::string perturbed =
      codemorph::mr1_variable_renaming(kMediumSource, ctx).text;
  for (auto _ : state) {
    long d = codemorph::edit_distance_tokens(kMediumSource, perturbed);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_EditDistanceTokens);

}  // namespace
