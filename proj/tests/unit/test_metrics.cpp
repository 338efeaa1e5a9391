#include "codemorph/metrics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "codemorph/errors.hpp"
#include "codemorph/lexer.hpp"
#include "../support/oracles.hpp"

namespace codemorph {
namespace {

// ---- R-score ----------------------------------------------------------

TEST(RScore, HeadlineRatios) {
  EXPECT_NEAR(r_score(604, 405), 0.599, 0.0005);
  EXPECT_NEAR(r_score(517, 1568), 0.248, 0.0005);
}

TEST(RScore, AllValidIsOne) {
  EXPECT_DOUBLE_EQ(r_score(1, 0), 1.0);
  EXPECT_DOUBLE_EQ(r_score(12345, 0), 1.0);
}

TEST(RScore, EmptyGroupThrows) {
  EXPECT_THROW(r_score(0, 0), EmptyGroup);
}

TEST(RScore, ComplementSumsToOne) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    long a = static_cast<long>(rng() % 1000);
    long b = static_cast<long>(rng() % 1000);
    if (a + b == 0) continue;
    double r = r_score(a, b);
    EXPECT_GE(r, 0.0);
    EXPECT_LE(r, 1.0);
    EXPECT_DOUBLE_EQ(r + r_score(b, a), 1.0);
  }
}

// ---- edit distance ------------------------------------------------------

TEST(EditDistance, IdenticalIsZero) {
  EXPECT_EQ(edit_distance_tokens("int x = 1;", "int x = 1;"), 0);
  EXPECT_EQ(edit_distance_tokens("int x=1;", "int  x =\n1;"), 0);  // whitespace
}

TEST(EditDistance, SingleTokenSubstitution) {
  EXPECT_EQ(edit_distance_tokens("x = 1", "y = 1"), 1);
}

TEST(EditDistance, CharLevelFlag) {
  EXPECT_EQ(edit_distance_chars("abc", "axc"), 1);
  EXPECT_EQ(edit_distance_chars("", "abc"), 3);
  // char level sees whitespace, token level does not
  EXPECT_GT(edit_distance_chars("int  x", "int x"), 0);
  EXPECT_EQ(edit_distance_tokens("int  x", "int x"), 0);
}

std::vector<std::string> random_tokens(std::mt19937_64& rng, std::size_t max_len) {
  static const std::vector<std::string> pool = {
      "int", "x", "y", "=", "+", ";", "(", ")", "foo", "1", "2", "while"};
  std::vector<std::string> out;
  std::size_t len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i) out.push_back(pool[rng() % pool.size()]);
  return out;
}

TEST(EditDistance, MatchesFullMatrixOracleOnRandomPairs) {
  std::mt19937_64 rng(20240818);
  for (int i = 0; i < 1000; ++i) {
    std::vector<std::string> a = random_tokens(rng, 24);
    std::vector<std::string> b = random_tokens(rng, 24);
    EXPECT_EQ(levenshtein(a, b), testsupport::dp_edit_distance(a, b));
  }
}

TEST(EditDistance, MetricAxioms) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    auto a = random_tokens(rng, 12);
    auto b = random_tokens(rng, 12);
    auto c = random_tokens(rng, 12);
    long dab = levenshtein(a, b);
    long dba = levenshtein(b, a);
    long dac = levenshtein(a, c);
    long dcb = levenshtein(c, b);
    EXPECT_GE(dab, 0);
    EXPECT_EQ(dab == 0, a == b);
    EXPECT_EQ(dab, dba);
    EXPECT_LE(dab, dac + dcb);  // triangle inequality
  }
}

// ---- Spearman -----------------------------------------------------------

TEST(Spearman, MonotoneIsExactlyOne) {
  std::vector<double> xs{1, 2, 3, 4, 5, 6};
  std::vector<double> ys{10, 20, 30, 40, 50, 60};
  SpearmanResult r = spearman(xs, ys);
  EXPECT_EQ(r.rho, 1.0);
}

TEST(Spearman, ReversedIsExactlyMinusOne) {
  std::vector<double> xs{1, 2, 3, 4, 5};
  std::vector<double> ys{5, 4, 3, 2, 1};
  EXPECT_EQ(spearman(xs, ys).rho, -1.0);
}

TEST(Spearman, TiesUseAverageRanks) {
  std::vector<double> xs{1, 2, 2, 3};
  std::vector<double> ys{1, 3, 2, 4};
  SpearmanResult r = spearman(xs, ys);
  EXPECT_NEAR(r.rho, testsupport::oracle_spearman_rho(xs, ys), 1e-12);
}

TEST(Spearman, DegenerateInputs) {
  std::vector<double> constant{2, 2, 2, 2};
  std::vector<double> varying{1, 2, 3, 4};
  EXPECT_THROW(spearman(constant, varying), DegenerateInput);
  EXPECT_THROW(spearman(varying, constant), DegenerateInput);
  std::vector<double> two{1, 2};
  EXPECT_THROW(spearman(two, two), DegenerateInput);
  std::vector<double> three{1, 2, 3};
  std::vector<double> mismatched{1, 2};
  EXPECT_THROW(spearman(three, mismatched), DegenerateInput);
}

TEST(Spearman, MatchesRankThenPearsonOracle) {
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> dist(0.0, 10.0);
  for (int round = 0; round < 100; ++round) {
    std::size_t n = 5 + rng() % 30;
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      // quantized values so ties happen regularly
      xs[i] = std::floor(dist(rng) * 2.0) / 2.0;
      ys[i] = std::floor(dist(rng) * 2.0) / 2.0;
    }
    bool x_const = std::all_of(xs.begin(), xs.end(),
                               [&](double v) { return v == xs[0]; });
    bool y_const = std::all_of(ys.begin(), ys.end(),
                               [&](double v) { return v == ys[0]; });
    if (x_const || y_const) continue;
    SpearmanResult r = spearman(xs, ys, PValueMethod::kTApprox);
    EXPECT_NEAR(r.rho, testsupport::oracle_spearman_rho(xs, ys), 1e-9);
  }
}

TEST(Spearman, InvariantUnderStrictlyIncreasingTransforms) {
  std::vector<double> xs{3, 1, 4, 1.5, 9, 2.6};
  std::vector<double> ys{2, 7, 1, 8, 2.8, 1.8};
  double base = spearman(xs, ys).rho;
  std::vector<double> tx(xs.size()), ty(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    tx[i] = std::exp(xs[i]);          // strictly increasing
    ty[i] = 3.0 * ys[i] + 7.0;        // affine increasing
  }
  EXPECT_EQ(spearman(tx, ty).rho, base);
}

// The single-perturbation analysis: correlating per-rule edit distances
// with per-rule average R-scores. rho ~= 0.042; the t-approximation gives
// the reported p = 0.914.
TEST(Spearman, PerRuleDistanceVsRScoreAnalysis) {
  std::vector<double> edit_distances{17.09, 6.39, 9.76, 11.67, 11.73,
                                     10.09, 11.42, 11.42, 13.39};
  std::vector<double> avg_r_scores{0.683, 0.667, 0.750, 0.677, 0.650,
                                   0.650, 0.717, 0.717, 0.720};
  SpearmanResult t = spearman(edit_distances, avg_r_scores, PValueMethod::kTApprox);
  EXPECT_NEAR(t.rho, 0.042, 0.0005);
  EXPECT_NEAR(t.p_value, 0.914, 0.0005);
  // the exact permutation p (n = 9 routes through it on kAuto) agrees on
  // the "not significant" call
  SpearmanResult perm = spearman(edit_distances, avg_r_scores);
  EXPECT_EQ(perm.rho, t.rho);
  EXPECT_GT(perm.p_value, 0.05);
}

TEST(Spearman, PermutationAndTApproxAgreeLoosely) {
  // sanity: for a clear correlation both methods call it significant
  std::vector<double> xs{1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<double> ys{1.1, 2.3, 2.9, 4.4, 5.2, 5.9, 7.5, 8.1};
  SpearmanResult perm = spearman(xs, ys, PValueMethod::kPermutation);
  SpearmanResult t = spearman(xs, ys, PValueMethod::kTApprox);
  EXPECT_LT(perm.p_value, 0.01);
  EXPECT_LT(t.p_value, 0.01);
}

// ---- grouping -----------------------------------------------------------

AttemptRecord rec(std::string model, Outcome outcome, int pd = 1,
                  std::string combo = "m1", std::string pattern = "unknown") {
  AttemptRecord r;
  r.mutant_id = model + ":" + combo + ":" + std::to_string(pd);
  r.base_id = "b";
  r.model = std::move(model);
  r.combo = std::move(combo);
  r.pd = pd;
  r.outcome = outcome;
  r.repair_pattern = std::move(pattern);
  return r;
}

std::vector<AttemptRecord> table_fixture(
    const std::vector<std::tuple<std::string, long, long>>& rows) {
  std::vector<AttemptRecord> records;
  for (const auto& [model, valid, invalid] : rows) {
    for (long i = 0; i < valid; ++i) records.push_back(rec(model, Outcome::kValid));
    for (long i = 0; i < invalid; ++i)
      records.push_back(rec(model, Outcome::kInvalid));
  }
  return records;
}

TEST(GroupMetrics, HeadlineModelTable) {
  // four models, Defects4J-side counts
  std::vector<AttemptRecord> records =
      table_fixture({{"mistral-large", 604, 405},
                     {"llama3-70b", 410, 355},
                     {"llama3-8b", 390, 497},
                     {"codegemma-7b", 245, 296}});
  std::vector<MetricsSummary> out = group_metrics(records, GroupKey::kModel);
  ASSERT_EQ(out.size(), 4u);
  std::map<std::string, double> scores;
  for (const MetricsSummary& s : out) {
    ASSERT_TRUE(s.r_score.has_value());
    scores[s.scope_key] = *s.r_score;
  }
  EXPECT_NEAR(scores["mistral-large"], 0.599, 0.0005);
  EXPECT_NEAR(scores["llama3-70b"], 0.536, 0.0005);
  EXPECT_NEAR(scores["llama3-8b"], 0.440, 0.0005);
  EXPECT_NEAR(scores["codegemma-7b"], 0.453, 0.0005);
}

TEST(GroupMetrics, EmptyStreamGivesEmptyList) {
  EXPECT_TRUE(group_metrics({}, GroupKey::kModel).empty());
  EXPECT_TRUE(group_metrics({}, GroupKey::kOverall).empty());
}

TEST(GroupMetrics, PdGroupsSortNumerically) {
  std::vector<AttemptRecord> records;
  for (int pd = 1; pd <= 9; ++pd) {
    for (int i = 0; i < pd; ++i)
      records.push_back(rec("m", Outcome::kValid, pd, "m1m2"));
    records.push_back(rec("m", Outcome::kInvalid, pd, "m1m2"));
  }
  std::vector<MetricsSummary> out = group_metrics(records, GroupKey::kPd);
  ASSERT_EQ(out.size(), 9u);
  for (int pd = 1; pd <= 9; ++pd) {
    EXPECT_EQ(out[static_cast<std::size_t>(pd - 1)].scope_key, std::to_string(pd));
    EXPECT_EQ(out[static_cast<std::size_t>(pd - 1)].valid, pd);
  }
}

TEST(GroupMetrics, ErrorsExcludedByDefaultCountedWhenAsked) {
  std::vector<AttemptRecord> records{rec("m", Outcome::kValid),
                                     rec("m", Outcome::kError),
                                     rec("m", Outcome::kError)};
  std::vector<MetricsSummary> out = group_metrics(records, GroupKey::kModel);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].errors, 2);
  EXPECT_DOUBLE_EQ(*out[0].r_score, 1.0);

  GroupOptions opts;
  opts.errors_as_invalid = true;
  out = group_metrics(records, GroupKey::kModel, opts);
  EXPECT_NEAR(*out[0].r_score, 1.0 / 3.0, 1e-12);
}

TEST(GroupMetrics, OnlyErrorGroupHasAbsentScore) {
  std::vector<AttemptRecord> records{rec("m", Outcome::kError)};
  std::vector<MetricsSummary> out = group_metrics(records, GroupKey::kModel);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_FALSE(out[0].r_score.has_value());
}

TEST(GroupMetrics, MrKeyCoversSingleDistanceOnly) {
  std::vector<AttemptRecord> records{
      rec("m", Outcome::kValid, 1, "m3"),
      rec("m", Outcome::kInvalid, 1, "m3"),
      rec("m", Outcome::kValid, 2, "m3m4"),  // multi-distance: excluded
  };
  std::vector<MetricsSummary> out = group_metrics(records, GroupKey::kMrId);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].scope_key, "m3");
  EXPECT_EQ(out[0].valid + out[0].invalid, 2);
}

TEST(GroupMetrics, TotalsPartitionNonErrorRecords) {
  std::mt19937_64 rng(5);
  std::vector<AttemptRecord> records;
  long non_error = 0;
  for (int i = 0; i < 500; ++i) {
    Outcome o = static_cast<Outcome>(rng() % 3);
    if (o != Outcome::kError) ++non_error;
    records.push_back(rec("model-" + std::to_string(rng() % 4), o));
  }
  long sum = 0;
  for (const MetricsSummary& s : group_metrics(records, GroupKey::kModel)) {
    sum += s.valid + s.invalid;
  }
  EXPECT_EQ(sum, non_error);
}

TEST(GroupMetrics, EditDistanceLookupFeedsAverages) {
  std::vector<AttemptRecord> records{rec("m", Outcome::kValid)};
  GroupOptions opts;
  opts.texts_for = [](const std::string&)
      -> std::optional<std::pair<std::string, std::string>> {
    return std::make_pair(std::string("int x = 1;"), std::string("int y = 2;"));
  };
  std::vector<MetricsSummary> out = group_metrics(records, GroupKey::kOverall, opts);
  ASSERT_EQ(out.size(), 1u);
  ASSERT_TRUE(out[0].avg_edit_distance.has_value());
  EXPECT_DOUBLE_EQ(*out[0].avg_edit_distance, 2.0);  // x->y, 1->2
}

}  // namespace
}  // namespace codemorph
