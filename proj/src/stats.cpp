#include "planchlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "planchlab/errors.hpp"

namespace planch {

MomentSummary summarize(std::span<const double> samples) {
  const std::int64_t n = static_cast<std::int64_t>(samples.size());
  if (n < 2) raise(Errc::too_few_samples, "need at least 2 samples");
  MomentSummary s;
  s.n_samples = n;
  double mean = 0.0;
  for (double v : samples) mean += v;
  mean /= static_cast<double>(n);
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : samples) {
    const double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  s.mean = mean;
  s.variance = m2 / static_cast<double>(n - 1);
  m2 /= static_cast<double>(n);
  m3 /= static_cast<double>(n);
  m4 /= static_cast<double>(n);
  if (m2 > 0.0) {
    s.skewness = m3 / std::pow(m2, 1.5);
    s.excess_kurtosis = m4 / (m2 * m2) - 3.0;
  } else {
    s.skewness = std::numeric_limits<double>::quiet_NaN();
    s.excess_kurtosis = std::numeric_limits<double>::quiet_NaN();
  }
  return s;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z * 0.70710678118654752440084436210485); }

double ks_normal(std::span<const double> samples) {
  const std::int64_t n = static_cast<std::int64_t>(samples.size());
  if (n < 100) raise(Errc::too_few_samples, "need at least 100 samples");

  double mean = 0.0;
  for (double v : samples) mean += v;
  mean /= static_cast<double>(n);
  double m2 = 0.0;
  for (double v : samples) m2 += (v - mean) * (v - mean);
  const double sd = std::sqrt(m2 / static_cast<double>(n - 1));

  std::vector<double> z(samples.begin(), samples.end());
  if (sd > 0.0) {
    for (double& v : z) v = (v - mean) / sd;
  } else {
    for (double& v : z) v = 0.0;
  }
  std::sort(z.begin(), z.end());

  double ks = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    const double f = normal_cdf(z[static_cast<std::size_t>(i)]);
    const double lo = static_cast<double>(i) / static_cast<double>(n);
    const double hi = static_cast<double>(i + 1) / static_cast<double>(n);
    ks = std::max(ks, std::max(f - lo, hi - f));
  }
  return ks;
}

double fit_log_slope(std::span<const std::int64_t> lengths, std::span<const double> variances) {
  const std::size_t n = lengths.size();
  if (n < 3 || variances.size() != n)
    raise(Errc::degenerate_design, "need >= 3 (length, variance) points");
  std::vector<std::int64_t> sorted(lengths.begin(), lengths.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    raise(Errc::degenerate_design, "lengths must be pairwise distinct");
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (lengths[i] < 1) raise(Errc::invalid_argument, "lengths must be positive");
    x[i] = std::log(static_cast<double>(lengths[i]));
  }
  double xm = 0.0, ym = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    xm += x[i];
    ym += variances[i];
  }
  xm /= static_cast<double>(n);
  ym /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - xm) * (x[i] - xm);
    sxy += (x[i] - xm) * (variances[i] - ym);
  }
  return sxy / sxx;
}

NormalityReport normality_report(std::span<const double> samples, double predicted_variance) {
  const MomentSummary m = summarize(samples);
  NormalityReport r;
  r.n_samples = m.n_samples;
  r.mean = m.mean;
  r.variance = m.variance;
  r.skewness = m.skewness;
  r.excess_kurtosis = m.excess_kurtosis;
  r.ks_statistic = ks_normal(samples);
  r.predicted_variance = predicted_variance;
  return r;
}

}  // namespace planch
