#include "codemorph/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "codemorph/errors.hpp"
#include "codemorph/lexer.hpp"

namespace codemorph {

double r_score(long valid, long invalid) {
  if (valid < 0 || invalid < 0) throw RangeError("negative count");
  if (valid + invalid == 0) throw EmptyGroup("no valid/invalid outcomes");
  return static_cast<double>(valid) / static_cast<double>(valid + invalid);
}

long levenshtein(std::span<const std::string> a, std::span<const std::string> b) {
  // Two-row DP with common prefix/suffix trimming.
  std::size_t start = 0;
  std::size_t ea = a.size(), eb = b.size();
  while (start < ea && start < eb && a[start] == b[start]) ++start;
  while (ea > start && eb > start && a[ea - 1] == b[eb - 1]) { --ea; --eb; }
  const std::size_t n = ea - start;
  const std::size_t m = eb - start;
  if (n == 0) return static_cast<long>(m);
  if (m == 0) return static_cast<long>(n);

  std::vector<long> prev(m + 1), cur(m + 1);
  std::iota(prev.begin(), prev.end(), 0L);
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<long>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      long subst = prev[j - 1] + (a[start + i - 1] == b[start + j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, subst});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

long edit_distance_tokens(std::string_view a, std::string_view b) {
  std::vector<std::string> ta = token_texts(a);
  std::vector<std::string> tb = token_texts(b);
  return levenshtein(ta, tb);
}

long edit_distance_chars(std::string_view a, std::string_view b) {
  std::vector<std::string> ca, cb;
  ca.reserve(a.size());
  cb.reserve(b.size());
  for (char c : a) ca.emplace_back(1, c);
  for (char c : b) cb.emplace_back(1, c);
  return levenshtein(ca, cb);
}

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

namespace {

double pearson(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t n = xs.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) { mx += xs[i]; my += ys[i]; }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = xs[i] - mx, dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw DegenerateInput("constant input list");
  return sxy / std::sqrt(sxx * syy);
}

// Regularized incomplete beta via Lentz's continued fraction.
double betacf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 3e-14;
  constexpr double kFpMin = 1e-300;
  double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

double incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                    a * std::log(x) + b * std::log(1.0 - x);
  double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * betacf(a, b, x) / a;
  }
  return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

// Two-sided p for Student t with df degrees of freedom.
double t_two_sided_p(double t, double df) {
  double x = df / (df + t * t);
  return incomplete_beta(df / 2.0, 0.5, x);
}

double permutation_p(std::span<const double> rx, std::span<const double> ry,
                     double observed) {
  const std::size_t n = rx.size();
  std::vector<double> perm(ry.begin(), ry.end());
  std::sort(perm.begin(), perm.end());
  std::uint64_t total = 0, at_least = 0;
  const double threshold = std::fabs(observed) - 1e-12;
  do {
    double rho = pearson(rx, perm);
    if (std::fabs(rho) >= threshold) ++at_least;
    ++total;
  } while (std::next_permutation(perm.begin(), perm.end()));
  (void)n;
  return static_cast<double>(at_least) / static_cast<double>(total);
}

}  // namespace

SpearmanResult spearman(std::span<const double> xs, std::span<const double> ys,
                        PValueMethod method) {
  if (xs.size() != ys.size()) throw DegenerateInput("length mismatch");
  const std::size_t n = xs.size();
  if (n < 3) throw DegenerateInput("need at least 3 pairs");

  std::vector<double> rx = average_ranks(xs);
  std::vector<double> ry = average_ranks(ys);
  double rho = pearson(rx, ry);  // throws DegenerateInput on constant lists

  SpearmanResult result;
  result.rho = rho;

  bool use_permutation = method == PValueMethod::kPermutation ||
                         (method == PValueMethod::kAuto && n <= 10);
  if (use_permutation) {
    result.p_value = permutation_p(rx, ry, rho);
  } else {
    if (std::fabs(rho) >= 1.0) {
      result.p_value = 0.0;
    } else {
      double df = static_cast<double>(n - 2);
      double t = rho * std::sqrt(df / (1.0 - rho * rho));
      result.p_value = t_two_sided_p(t, df);
    }
  }
  return result;
}

std::string_view group_key_name(GroupKey key) {
  switch (key) {
    case GroupKey::kOverall: return "overall";
    case GroupKey::kModel: return "model";
    case GroupKey::kMrId: return "mr_id";
    case GroupKey::kPd: return "pd";
    case GroupKey::kRepairPattern: return "repair_pattern";
  }
  return "overall";
}

std::vector<MetricsSummary> group_metrics(const std::vector<AttemptRecord>& records,
                                          GroupKey key,
                                          const GroupOptions& options) {
  struct Bucket {
    long valid = 0, invalid = 0, errors = 0;
    double distance_sum = 0.0;
    long distance_count = 0;
  };
  std::map<std::string, Bucket> buckets;

  for (const AttemptRecord& r : records) {
    std::string k;
    switch (key) {
      case GroupKey::kOverall: k = "overall"; break;
      case GroupKey::kModel: k = r.model; break;
      case GroupKey::kMrId:
        if (r.pd != 1) continue;  // single-perturbation view
        k = r.combo;
        break;
      case GroupKey::kPd: k = std::to_string(r.pd); break;
      case GroupKey::kRepairPattern: k = r.repair_pattern; break;
    }
    Bucket& b = buckets[k];
    switch (r.outcome) {
      case Outcome::kValid: ++b.valid; break;
      case Outcome::kInvalid: ++b.invalid; break;
      case Outcome::kError:
        if (options.errors_as_invalid) ++b.invalid;
        else ++b.errors;
        break;
    }
    if (options.texts_for) {
      if (auto texts = options.texts_for(r.mutant_id)) {
        b.distance_sum += static_cast<double>(
            edit_distance_tokens(texts->first, texts->second));
        ++b.distance_count;
      }
    }
  }

  std::vector<MetricsSummary> out;
  out.reserve(buckets.size());
  for (auto& [k, b] : buckets) {
    MetricsSummary s;
    s.scope_key = k;
    s.valid = b.valid;
    s.invalid = b.invalid;
    s.errors = b.errors;
    if (b.valid + b.invalid > 0) s.r_score = r_score(b.valid, b.invalid);
    if (b.distance_count > 0)
      s.avg_edit_distance = b.distance_sum / static_cast<double>(b.distance_count);
    out.push_back(std::move(s));
  }
  // pd keys sort numerically
  if (key == GroupKey::kPd) {
    std::sort(out.begin(), out.end(),
              [](const MetricsSummary& a, const MetricsSummary& b) {
                return std::stoi(a.scope_key) < std::stoi(b.scope_key);
              });
  }
  return out;
}

}  // namespace codemorph
