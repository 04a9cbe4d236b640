#pragma once

#include <cstdint>
#include <span>

namespace planch {

/// Standardized sample moments. Skewness and excess kurtosis are NaN when the
/// sample variance vanishes.
struct MomentSummary {
  std::int64_t n_samples = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
};

/// Requires >= 2 samples (Errc::too_few_samples).
MomentSummary summarize(std::span<const double> samples);

/// Kolmogorov-Smirnov sup-distance between the empirical CDF of the samples,
/// standardized by their own mean and standard deviation, and the standard
/// normal CDF. Requires >= 100 samples. Degenerate (constant) samples give 0.5.
double ks_normal(std::span<const double> samples);

/// Standard normal CDF via erfc.
double normal_cdf(double z);

/// Ordinary least-squares slope of variance against ln(length). Requires >= 3
/// points with at least two distinct lengths (Errc::degenerate_design).
double fit_log_slope(std::span<const std::int64_t> lengths, std::span<const double> variances);

/// Moments plus normality diagnostics, with the kernel-side prediction carried
/// along for reporting.
struct NormalityReport {
  std::int64_t n_samples = 0;
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  double ks_statistic = 0.0;
  double predicted_variance = 0.0;
};

NormalityReport normality_report(std::span<const double> samples, double predicted_variance);

}  // namespace planch
