#include "planchlab/mc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "planchlab/errors.hpp"
#include "planchlab/parallel.hpp"
#include "planchlab/sampling.hpp"

namespace planch {

McReport report_from_samples(std::span<const double> values, RngSeed seed) {
  const std::int64_t n = static_cast<std::int64_t>(values.size());
  if (n < 2) raise(Errc::too_few_samples, "need at least 2 samples");

  McReport r;
  r.n_samples = n;
  r.seed = seed.value;

  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : values) {
    const double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  r.mean = mean;
  r.variance = m2 / static_cast<double>(n - 1);
  m2 /= static_cast<double>(n);
  m3 /= static_cast<double>(n);
  m4 /= static_cast<double>(n);
  if (m2 > 0.0) {
    r.skewness = m3 / std::pow(m2, 1.5);
    r.excess_kurtosis = m4 / (m2 * m2) - 3.0;
  } else {
    r.skewness = std::numeric_limits<double>::quiet_NaN();
    r.excess_kurtosis = std::numeric_limits<double>::quiet_NaN();
  }

  // Batch means: ~sqrt(n) batches of consecutive samples; the spread of the
  // per-batch variances estimates the error of the pooled variance.
  const std::int64_t batches = std::max<std::int64_t>(
      2, static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(n)))));
  const std::int64_t per = n / batches;
  if (per >= 2) {
    std::vector<double> bvars;
    bvars.reserve(static_cast<std::size_t>(batches));
    for (std::int64_t bidx = 0; bidx < batches; ++bidx) {
      const std::int64_t lo = bidx * per;
      const std::int64_t hi = (bidx == batches - 1) ? n : lo + per;
      double bm = 0.0;
      for (std::int64_t i = lo; i < hi; ++i) bm += values[static_cast<std::size_t>(i)];
      bm /= static_cast<double>(hi - lo);
      double bv = 0.0;
      for (std::int64_t i = lo; i < hi; ++i) {
        const double d = values[static_cast<std::size_t>(i)] - bm;
        bv += d * d;
      }
      bvars.push_back(bv / static_cast<double>(hi - lo - 1));
    }
    double vm = 0.0;
    for (double v : bvars) vm += v;
    vm /= static_cast<double>(bvars.size());
    double vv = 0.0;
    for (double v : bvars) vv += (v - vm) * (v - vm);
    vv /= static_cast<double>(bvars.size() - 1);
    r.std_error_of_variance = std::sqrt(vv / static_cast<double>(bvars.size()));
  } else {
    r.std_error_of_variance = 0.0;
  }
  return r;
}

namespace {

double window_pattern_sum(const DescentWindow& w, std::int64_t a, std::int64_t b,
                          const PatternSpec& pattern) {
  double total = 0.0;
  for (std::int64_t i = a; i <= b; ++i) {
    int prod = 1;
    for (std::int64_t off : pattern.offsets()) {
      if (w.at(i + off) == 0) {
        prod = 0;
        break;
      }
    }
    total += prod;
  }
  return total;
}

}  // namespace

std::vector<double> mc_linear_statistic_samples(std::int64_t n, std::int64_t a, std::int64_t b,
                                                const PatternSpec& pattern, std::int64_t samples,
                                                RngSeed seed, int threads) {
  if (a > b) raise(Errc::empty_range, "interval requires a <= b");
  if (samples < 2) raise(Errc::too_few_samples, "need at least 2 samples");
  std::vector<double> values(static_cast<std::size_t>(samples));
  const std::int64_t hi = b + pattern.diameter();
  parallel_for(0, samples, threads, [&](std::int64_t k) {
    RngStream rng(seed, static_cast<std::uint64_t>(k));
    const Partition lambda = sample_plancherel(n, rng);
    const DescentWindow w = descent_window(lambda, a, hi);
    values[static_cast<std::size_t>(k)] = window_pattern_sum(w, a, b, pattern);
  });
  return values;
}

McReport mc_linear_statistic(std::int64_t n, std::int64_t a, std::int64_t b,
                             const PatternSpec& pattern, std::int64_t samples, RngSeed seed,
                             int threads) {
  const auto values = mc_linear_statistic_samples(n, a, b, pattern, samples, seed, threads);
  return report_from_samples(values, seed);
}

std::vector<double> mc_dpp_pattern_samples(const DppWindowSampler& sampler, std::int64_t a,
                                           std::int64_t b, const PatternSpec& pattern,
                                           std::int64_t samples, RngSeed seed, int threads) {
  if (samples < 2) raise(Errc::too_few_samples, "need at least 2 samples");
  if (a < sampler.window_start() ||
      b + pattern.diameter() >= sampler.window_start() + sampler.window_length())
    raise(Errc::invalid_argument, "statistic range leaves the sampled window");
  std::vector<double> values(static_cast<std::size_t>(samples));
  parallel_for(0, samples, threads, [&](std::int64_t k) {
    RngStream rng(seed, static_cast<std::uint64_t>(k));
    const DescentWindow w = sampler.sample(rng);
    values[static_cast<std::size_t>(k)] = window_pattern_sum(w, a, b, pattern);
  });
  return values;
}

std::vector<double> mc_dpp_difference_samples(const DppWindowSampler& sampler, std::int64_t a,
                                              std::int64_t b, const PatternSpec& pat_a,
                                              const PatternSpec& pat_b, std::int64_t samples,
                                              RngSeed seed, int threads) {
  if (samples < 2) raise(Errc::too_few_samples, "need at least 2 samples");
  const std::int64_t diam = std::max(pat_a.diameter(), pat_b.diameter());
  if (a < sampler.window_start() ||
      b + diam >= sampler.window_start() + sampler.window_length())
    raise(Errc::invalid_argument, "statistic range leaves the sampled window");
  std::vector<double> values(static_cast<std::size_t>(samples));
  parallel_for(0, samples, threads, [&](std::int64_t k) {
    RngStream rng(seed, static_cast<std::uint64_t>(k));
    const DescentWindow w = sampler.sample(rng);
    values[static_cast<std::size_t>(k)] =
        window_pattern_sum(w, a, b, pat_a) - window_pattern_sum(w, a, b, pat_b);
  });
  return values;
}

}  // namespace planch
