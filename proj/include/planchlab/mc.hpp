#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "planchlab/dpp.hpp"
#include "planchlab/pattern.hpp"
#include "planchlab/rng.hpp"

namespace planch {

/// Monte-Carlo estimate of a statistic: point estimate, unbiased variance,
/// batch-means standard error of the variance, standardized higher moments.
struct McReport {
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
  double mean = 0.0;
  double variance = 0.0;
  double std_error_of_variance = 0.0;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
};

/// Statistics of per-sample values; the batch-means SE splits the samples in
/// index order into ~sqrt(n) batches. Requires >= 2 samples.
McReport report_from_samples(std::span<const double> values, RngSeed seed);

/// Per-sample values of S(lambda) = sum_{i=a}^{b} prod_x c_{i+x}(lambda) over
/// i.i.d. Plancherel samples of size n. Sample index k uses the stream
/// (seed, k), so the result is identical under any thread count.
std::vector<double> mc_linear_statistic_samples(std::int64_t n, std::int64_t a, std::int64_t b,
                                                const PatternSpec& pattern, std::int64_t samples,
                                                RngSeed seed, int threads = 0);

McReport mc_linear_statistic(std::int64_t n, std::int64_t a, std::int64_t b,
                             const PatternSpec& pattern, std::int64_t samples, RngSeed seed,
                             int threads = 0);

/// Same statistic under the sine process, sampled exactly through a shared
/// window sampler. The window covers [a, b + pattern diameter].
std::vector<double> mc_dpp_pattern_samples(const DppWindowSampler& sampler, std::int64_t a,
                                           std::int64_t b, const PatternSpec& pattern,
                                           std::int64_t samples, RngSeed seed, int threads = 0);

/// Difference statistic sum_i (c_{i+A} - c_{i+B}) for DPP windows, e.g.
/// corners with A = {0}, B = {0,1}.
std::vector<double> mc_dpp_difference_samples(const DppWindowSampler& sampler, std::int64_t a,
                                              std::int64_t b, const PatternSpec& pat_a,
                                              const PatternSpec& pat_b, std::int64_t samples,
                                              RngSeed seed, int threads = 0);

}  // namespace planch
