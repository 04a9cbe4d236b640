#pragma once

#include <cstdint>
#include <memory>

#include "planchlab/bessel.hpp"
#include "planchlab/pattern.hpp"

namespace planch {

/// Exact kernel-sum variance of the descent count on [a,b] under the
/// poissonized measure at theta, in two algebraically equivalent forms.
struct VarianceBreakdown {
  std::int64_t a = 0;
  std::int64_t b = 0;
  double theta = 0.0;
  double value_inside_outside = 0.0;  // sum_{i in I} sum_{j notin I} J(i,j)^2
  double value_trace_form = 0.0;      // sum_{i in I} J(i,i) - sum_{i,j in I} J(i,j)^2
  double truncation_bound = 0.0;      // mass lost to |j| > edge_cutoff, both tails
};

/// Requires a <= b and [a,b] inside [-edge_cutoff, edge_cutoff]
/// (Errc::interval_beyond_edge). A shared table may be passed to amortize the
/// Bessel evaluation across a sweep; it must cover edge_cutoff(theta)+1.
VarianceBreakdown poissonized_variance(std::int64_t a, std::int64_t b, double theta,
                                       std::shared_ptr<const BesselTable> table = nullptr,
                                       int threads = 0);

/// Asymptotic prediction ln(L)/pi^2 for an interval of length L >= 2.
double predicted_log_variance(std::int64_t length);

/// E[c_{x1} ... c_{xk}] under the sine process: correlation determinant of the
/// offset set.
double pattern_expectation(const PatternSpec& pattern, double phi);

/// cov_d = E[c_{0+A} c_{d+B}] - E[c_{0+A}] E[c_{d+B}]; products of overlapping
/// indicators collapse because c^2 = c, so the expectation is the correlation
/// of the union of the shifted offset sets.
double pattern_covariance(const PatternSpec& a, const PatternSpec& b, std::int64_t d, double phi);
double pattern_covariance(const PatternSpec& pattern, std::int64_t d, double phi);

struct DensityResult {
  double value = 0.0;       // sum_{|d| <= tail} cov_d
  double tail_bound = 0.0;  // O(1/tail) remainder estimate
};

/// Per-site variance density of the pattern count, sum over all lags. Lags are
/// accumulated in symmetric +-d pairs from the far end inward, which cancels
/// the O(1/d) oscillation and leaves the O(1/d^2) envelope.
DensityResult pattern_variance_density(const PatternSpec& pattern, double phi, std::int64_t tail);

/// Density of the difference statistic sum_i (c_{i+A} - c_{i+B}), e.g. corners
/// with A = {0}, B = {0,1}: expands to cov(A,A) - 2 cov(A,B) + cov(B,B).
DensityResult pattern_variance_density(const PatternSpec& a, const PatternSpec& b, double phi,
                                       std::int64_t tail);

/// Exact finite-window variances under the sine process (all boundary terms),
/// used for kernel-side predictions of windowed Monte Carlo statistics.
double pattern_window_variance(const PatternSpec& pattern, std::int64_t length, double phi);
double difference_window_variance(const PatternSpec& a, const PatternSpec& b, std::int64_t length,
                                  double phi);

}  // namespace planch
