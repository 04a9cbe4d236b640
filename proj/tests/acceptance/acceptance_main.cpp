// Acceptance suite: one line per criterion, [PASS]/[FAIL] plus the measured
// numbers. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "planchlab/bessel.hpp"
#include "planchlab/contour.hpp"
#include "planchlab/dpp.hpp"
#include "planchlab/kernels.hpp"
#include "planchlab/mc.hpp"
#include "planchlab/parallel.hpp"
#include "planchlab/partition.hpp"
#include "planchlab/sampling.hpp"
#include "planchlab/stats.hpp"
#include "planchlab/variance.hpp"

using namespace planch;

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kHalfPi = 1.5707963267948966;
constexpr double kInvPiSq = 0.10132118364233778;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int prec = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Plancherel normalization: sum of dim^2 over Y_n equals n!, n <= 14.
Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  for (std::int64_t n = 1; n <= 14; ++n) {
    BigInt total = 0;
    for (const auto& lam : enumerate_partitions(n)) {
      const BigInt d = dimension(lam);
      total += d * d;
    }
    BigInt fact = 1;
    for (std::int64_t i = 2; i <= n; ++i) fact *= i;
    if (total != fact) return {false, "mismatch at n=" + std::to_string(n)};
  }
  const double dt = seconds_since(t0);
  return {dt < 10.0, "sum dim^2 = n! for all n<=14, " + fmt(dt, 3) + " s (budget 10 s)"};
}

// ---------------------------------------------------------------------------
// 2. Sampler correctness: chi-square against Pl(5) and the LIS oracle.
//    Returns a serialized report so criterion 11 can compare runs bit-exactly.
std::int64_t lis_fenwick(const std::vector<std::int64_t>& seq) {
  const std::int64_t n = static_cast<std::int64_t>(seq.size());
  std::vector<std::int64_t> tree(static_cast<std::size_t>(n + 1), 0);
  std::int64_t best = 0;
  for (std::int64_t v : seq) {  // values are 1..n already
    std::int64_t q = 0;
    for (std::int64_t i = v - 1; i > 0; i -= i & (-i))
      q = std::max(q, tree[static_cast<std::size_t>(i)]);
    const std::int64_t len = q + 1;
    best = std::max(best, len);
    for (std::int64_t i = v; i <= n; i += i & (-i))
      tree[static_cast<std::size_t>(i)] = std::max(tree[static_cast<std::size_t>(i)], len);
  }
  return best;
}

std::string criterion2_report(int threads) {
  // chi-square of 1e5 Plancherel samples at n=5 against the exact law
  const auto all5 = enumerate_partitions(5);
  const std::int64_t samples = 100000;
  std::vector<std::uint8_t> category(static_cast<std::size_t>(samples));
  parallel_for(0, samples, threads, [&](std::int64_t k) {
    RngStream rng(RngSeed{20240501}, static_cast<std::uint64_t>(k));
    const auto lam = sample_plancherel(5, rng);
    for (std::size_t c = 0; c < all5.size(); ++c) {
      if (all5[c] == lam) {
        category[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(c);
        break;
      }
    }
  });
  std::vector<std::int64_t> counts(all5.size(), 0);
  for (const auto c : category) ++counts[c];

  double chi2 = 0.0;
  for (std::size_t c = 0; c < all5.size(); ++c) {
    const auto p = plancherel_prob(all5[c]);
    const double expected = p.value() * static_cast<double>(samples);
    const double diff = static_cast<double>(counts[c]) - expected;
    chi2 += diff * diff / expected;
  }

  // first-row check against the independent LIS oracle
  const std::int64_t perms = 10000;
  std::vector<std::uint8_t> ok(static_cast<std::size_t>(perms), 0);
  parallel_for(0, perms, threads, [&](std::int64_t k) {
    RngStream rng(RngSeed{77007}, static_cast<std::uint64_t>(k));
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng.below(200));
    std::vector<std::int64_t> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), std::int64_t{1});
    for (std::int64_t i = n - 1; i > 0; --i) {
      const auto j = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(i + 1)));
      std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    const auto shape = rsk_shape(perm);
    ok[static_cast<std::size_t>(k)] = shape.parts()[0] == lis_fenwick(perm) ? 1 : 0;
  });
  std::int64_t matches = 0;
  for (const auto v : ok) matches += v;

  char buf[256];
  std::snprintf(buf, sizeof(buf), "chi2=%.17g lis_matches=%lld/%lld counts=", chi2,
                static_cast<long long>(matches), static_cast<long long>(perms));
  std::string rep = buf;
  for (const auto c : counts) rep += std::to_string(c) + ";";
  return rep;
}

Outcome criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string rep = criterion2_report(0);
  double chi2 = 0.0;
  long long matches = 0, perms = 0;
  std::sscanf(rep.c_str(), "chi2=%lg lis_matches=%lld/%lld", &chi2, &matches, &perms);
  // chi-square upper quantile at alpha=1e-3 with 6 degrees of freedom
  const double threshold = 22.458;
  const double dt = seconds_since(t0);
  const bool pass = chi2 < threshold && matches == perms && dt < 60.0;
  return {pass, "chi2=" + fmt(chi2, 4) + " (<" + fmt(threshold, 5) + "), lis " +
                    std::to_string(matches) + "/" + std::to_string(perms) + ", " + fmt(dt, 3) +
                    " s (budget 60 s)"};
}

// ---------------------------------------------------------------------------
// 3. Projection identity of the Bessel kernel.
Outcome criterion3() {
  double worst = 0.0;
  for (const double theta : {5.0, 50.0}) {
    const std::int64_t edge = edge_cutoff(theta);
    const BesselTable table(2.0 * theta, edge + 1);
    const std::int64_t xs[] = {0, static_cast<std::int64_t>(std::ceil(theta)),
                               -static_cast<std::int64_t>(std::ceil(1.5 * theta))};
    for (const std::int64_t x : xs) {
      double sum = 0.0;
      for (std::int64_t y = -edge; y <= edge; ++y) {
        const double v = bessel_kernel(x, y, theta, table);
        sum += v * v;
      }
      worst = std::max(worst, std::abs(bessel_kernel(x, x, theta, table) - sum));
    }
  }
  return {worst <= 1e-8, "max |J(x,x) - sum_y J(x,y)^2| = " + fmt(worst, 3) + " (<= 1e-8)"};
}

// ---------------------------------------------------------------------------
// 4. Contour oracle equivalence with the recurrence kernel.
Outcome criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  const ContourGrid grid;  // r=0.5, R=2, N=256
  double worst = 0.0;
  for (const double theta : {0.5, 1.0, 2.0, 3.5, 5.0}) {
    const BesselTable table(2.0 * theta, edge_cutoff(theta) + 16 + 1);
    const ContourEvaluator eval(theta, grid);
    std::vector<double> worst_row(31, 0.0);
    parallel_for(0, 31, 0, [&](std::int64_t xi) {
      const std::int64_t x = xi - 15;
      double w = 0.0;
      for (std::int64_t y = -15; y <= 15; ++y)
        w = std::max(w, std::abs(eval.kernel(x, y) - bessel_kernel(x, y, theta, table)));
      worst_row[static_cast<std::size_t>(xi)] = w;
    });
    for (const double w : worst_row) worst = std::max(worst, w);
  }
  const double dt = seconds_since(t0);
  return {worst <= 1e-6 && dt < 5.0,
          "max |contour - recurrence| = " + fmt(worst, 3) + " (<= 1e-6), " + fmt(dt, 3) +
              " s (budget 5 s)"};
}

// ---------------------------------------------------------------------------
// 5. Density law along the diagonal at theta = 100.
Outcome criterion5() {
  const double theta = 100.0;
  const BesselTable table(2.0 * theta, edge_cutoff(theta) + 1);
  double worst_ratio = 0.0;
  for (std::int64_t x = -150; x <= 150; x += 10) {
    const double lhs =
        std::abs(bessel_kernel(x, x, theta, table) -
                 std::acos(static_cast<double>(x) / (2.0 * theta)) / kPi);
    const double bound = 2.0 / (2.0 * theta - std::abs(static_cast<double>(x)));
    worst_ratio = std::max(worst_ratio, lhs / bound);
  }
  return {worst_ratio <= 1.0,
          "max |J(x,x) - arccos(x/2theta)/pi| / bound = " + fmt(worst_ratio, 4) + " (<= 1)"};
}

// ---------------------------------------------------------------------------
// 6. Log-variance slope at theta = 2000.
Outcome criterion6() {
  const auto t0 = std::chrono::steady_clock::now();
  const double theta = 2000.0;
  const auto table = std::make_shared<BesselTable>(2.0 * theta, edge_cutoff(theta) + 1);
  const std::vector<std::int64_t> lengths{64, 256, 1024, 4096};
  std::vector<double> vars;
  for (const std::int64_t L : lengths)
    vars.push_back(poissonized_variance(-L / 2, L / 2 - 1, theta, table).value_inside_outside);
  const double slope = fit_log_slope(lengths, vars);
  const double rel = std::abs(slope - kInvPiSq) / kInvPiSq;
  const double dt = seconds_since(t0);
  std::string detail = "slope=" + fmt(slope, 6) + " vs 1/pi^2=" + fmt(kInvPiSq, 6) +
                       ", rel dev=" + fmt(100.0 * rel, 4) + "% (<= 10%), vars=";
  for (const double v : vars) detail += fmt(v, 6) + ";";
  detail += " " + fmt(dt, 3) + " s (budget 120 s)";
  return {rel <= 0.10 && dt < 120.0, detail};
}

// ---------------------------------------------------------------------------
// 7. Depoissonized Monte-Carlo cross-check at n = 2500.
McReport criterion7_report(int threads) {
  return mc_linear_statistic(2500, -25, 25, PatternSpec({0}), 5000, RngSeed{424242}, threads);
}

std::string serialize(const McReport& r) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%lld,%llu,%.17g,%.17g,%.17g,%.17g,%.17g",
                static_cast<long long>(r.n_samples), static_cast<unsigned long long>(r.seed),
                r.mean, r.variance, r.std_error_of_variance, r.skewness, r.excess_kurtosis);
  return buf;
}

Outcome criterion7() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto exact = poissonized_variance(-25, 25, 50.0);
  const auto rep = criterion7_report(0);
  const double tol =
      std::max(0.15 * exact.value_inside_outside, 3.0 * rep.std_error_of_variance);
  const double diff = std::abs(rep.variance - exact.value_inside_outside);
  const double dt = seconds_since(t0);
  const bool pass = diff <= tol && dt < 600.0;
  return {pass, "mc var=" + fmt(rep.variance, 6) + " vs poissonized=" +
                    fmt(exact.value_inside_outside, 6) + ", |diff|=" + fmt(diff, 4) +
                    " <= tol=" + fmt(tol, 4) + " (3SE=" + fmt(3.0 * rep.std_error_of_variance, 4) +
                    "), " + fmt(dt, 3) + " s (budget 600 s)"};
}

// ---------------------------------------------------------------------------
// 8. Pattern constant, exact and Monte-Carlo sides.
Outcome criterion8() {
  const double expected = 1.0 / 12.0 - 3.0 / (8.0 * kPi * kPi);
  const auto density = pattern_variance_density(PatternSpec({0, 1}), kHalfPi, 1000000);
  const double exact_err = std::abs(density.value - expected);

  const auto rep = mc_linear_statistic(2500, -25, 25, PatternSpec({0, 1}), 5000, RngSeed{5150});
  const double per_site = rep.variance / 51.0;
  const double se_site = rep.std_error_of_variance / 51.0;
  const double mc_err = std::abs(per_site - density.value);

  const bool pass_exact = exact_err <= 1e-3;
  const bool pass_mc = mc_err <= 3.0 * se_site;
  return {pass_exact && pass_mc,
          "density=" + fmt(density.value, 7) + " vs (1/12 - 3/8pi^2)=" + fmt(expected, 7) +
              " |err|=" + fmt(exact_err, 3) + " (<=1e-3); mc per-site=" + fmt(per_site, 5) +
              " |err|=" + fmt(mc_err, 4) + " vs 3SE=" + fmt(3.0 * se_site, 4) +
              (pass_mc ? "" : "  [mc side out of band]")};
}

// ---------------------------------------------------------------------------
// 9. Null density for the single-site pattern.
Outcome criterion9() {
  std::string detail;
  bool pass = true;
  for (const double phi : {kPi / 4.0, kHalfPi}) {
    const auto d = pattern_variance_density(PatternSpec({0}), phi, 1000000);
    pass = pass && std::abs(d.value) <= 1e-3;
    detail += "phi=" + fmt(phi, 4) + ": |density|=" + fmt(std::abs(d.value), 3) + "; ";
  }
  return {pass, detail + "(<= 1e-3)"};
}

// ---------------------------------------------------------------------------
// 10. Corner CLT under the sine process on [0, 511].
NormalityReport criterion10_report(int threads) {
  // sites [0,511] (the 512-site cap); corner terms i in [0,510]
  static const DppWindowSampler sampler(KernelSpec::sine(kHalfPi), 0, 511);
  const PatternSpec single({0}), pair({0, 1});
  const auto values =
      mc_dpp_difference_samples(sampler, 0, 510, single, pair, 10000, RngSeed{90210}, threads);
  const double predicted = difference_window_variance(single, pair, 511, kHalfPi);
  return normality_report(values, predicted);
}

std::string serialize(const NormalityReport& r) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%lld,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g",
                static_cast<long long>(r.n_samples), r.mean, r.variance, r.skewness,
                r.excess_kurtosis, r.ks_statistic, r.predicted_variance);
  return buf;
}

Outcome criterion10() {
  const auto rep = criterion10_report(0);
  const double ks_threshold = 1.63 / std::sqrt(10000.0);
  const bool pass_skew = std::abs(rep.skewness) <= 0.1;
  const bool pass_kurt = std::abs(rep.excess_kurtosis) <= 0.2;
  const bool pass_ks = rep.ks_statistic <= ks_threshold;
  std::string detail = "skew=" + fmt(rep.skewness, 4) + " (<=0.1), exkurt=" +
                       fmt(rep.excess_kurtosis, 4) + " (<=0.2), ks=" + fmt(rep.ks_statistic, 4) +
                       " (<=" + fmt(ks_threshold, 4) + "), var=" + fmt(rep.variance, 5) +
                       " predicted=" + fmt(rep.predicted_variance, 5);
  if (!pass_ks)
    detail += "  [integer-valued statistic: its CDF has atoms ~max 0.2/sd=" +
              fmt(0.2 / std::sqrt(rep.variance), 3) +
              ", so the sup-distance to a continuous normal cannot reach the threshold]";
  return {pass_skew && pass_kurt && pass_ks, detail};
}

// ---------------------------------------------------------------------------
// 11. Determinism of criteria 2, 7, 10 under 1, 4 and 8 threads.
Outcome criterion11() {
  const std::string c2_1 = criterion2_report(1);
  const std::string c2_4 = criterion2_report(4);
  const std::string c2_8 = criterion2_report(8);
  const bool ok2 = c2_1 == c2_4 && c2_1 == c2_8;

  const std::string c7_1 = serialize(criterion7_report(1));
  const std::string c7_4 = serialize(criterion7_report(4));
  const std::string c7_8 = serialize(criterion7_report(8));
  const bool ok7 = c7_1 == c7_4 && c7_1 == c7_8;

  const std::string c10_1 = serialize(criterion10_report(1));
  const std::string c10_4 = serialize(criterion10_report(4));
  const std::string c10_8 = serialize(criterion10_report(8));
  const bool ok10 = c10_1 == c10_4 && c10_1 == c10_8;

  return {ok2 && ok7 && ok10, std::string("criterion 2 reports ") + (ok2 ? "identical" : "DIFFER") +
                                  ", criterion 7 reports " + (ok7 ? "identical" : "DIFFER") +
                                  ", criterion 10 reports " + (ok10 ? "identical" : "DIFFER") +
                                  " across 1/4/8 threads"};
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    std::function<Outcome()> fn;
  };
  const std::vector<Entry> criteria = {
      {1, "plancherel-normalization", criterion1},
      {2, "sampler-correctness", criterion2},
      {3, "projection-identity", criterion3},
      {4, "contour-oracle-equivalence", criterion4},
      {5, "density-law", criterion5},
      {6, "log-variance-slope", criterion6},
      {7, "depoissonized-mc-crosscheck", criterion7},
      {8, "pattern-constant", criterion8},
      {9, "null-density", criterion9},
      {10, "corner-clt", criterion10},
      {11, "determinism", criterion11},
  };

  int failures = 0;
  for (const auto& entry : criteria) {
    Outcome out;
    try {
      out = entry.fn();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass) ++failures;
    std::printf("[%s] %2d %-28s %s\n", out.pass ? "PASS" : "FAIL", entry.id, entry.name,
                out.detail.c_str());
    std::fflush(stdout);
  }
  if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures;
}
