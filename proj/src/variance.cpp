#include "planchlab/variance.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <vector>

#include "planchlab/errors.hpp"
#include "planchlab/kernels.hpp"
#include "planchlab/parallel.hpp"

namespace planch {

PatternSpec::PatternSpec(std::vector<std::int64_t> offsets) : offsets_(std::move(offsets)) {
  if (offsets_.empty()) raise(Errc::invalid_argument, "pattern must be nonempty");
  std::sort(offsets_.begin(), offsets_.end());
  if (std::adjacent_find(offsets_.begin(), offsets_.end()) != offsets_.end())
    raise(Errc::invalid_argument, "pattern offsets must be distinct");
  const std::int64_t base = offsets_.front();
  for (auto& o : offsets_) o -= base;
  if (offsets_.back() > 12) raise(Errc::invalid_argument, "pattern diameter exceeds 12");
}

std::string PatternSpec::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < offsets_.size(); ++i) {
    if (i) out << ',';
    out << offsets_[i];
  }
  return out.str();
}

PatternSpec PatternSpec::parse(const std::string& text) {
  std::vector<std::int64_t> offsets;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      raise(Errc::invalid_argument, "bad pattern token '" + tok + "'");
    }
    if (pos != tok.size()) raise(Errc::invalid_argument, "bad pattern token '" + tok + "'");
    offsets.push_back(v);
  }
  return PatternSpec(std::move(offsets));
}

VarianceBreakdown poissonized_variance(std::int64_t a, std::int64_t b, double theta,
                                       std::shared_ptr<const BesselTable> table, int threads) {
  if (a > b) raise(Errc::empty_range, "interval requires a <= b");
  if (!(theta > 0.0)) raise(Errc::invalid_argument, "theta must be positive");
  const std::int64_t edge = edge_cutoff(theta);
  if (a < -edge || b > edge)
    raise(Errc::interval_beyond_edge, "interval must lie within [-edge_cutoff, edge_cutoff]");
  if (!table) table = std::make_shared<BesselTable>(2.0 * theta, edge + 1);
  if (table->max_order() < edge + 1) raise(Errc::table_too_small, "table must cover edge_cutoff+1");

  const std::int64_t count = b - a + 1;
  // Per-row pieces; combined in index order afterwards so the result does not
  // depend on the thread count.
  std::vector<double> row_out(static_cast<std::size_t>(count));
  std::vector<double> row_trace(static_cast<std::size_t>(count));
  std::vector<double> row_resid(static_cast<std::size_t>(count));

  parallel_for(0, count, threads, [&](std::int64_t idx) {
    const std::int64_t i = a + idx;
    const double diag = table->sq_tail(i);
    double inside = diag * diag;  // j == i term of sum_{j in I} J(i,j)^2
    double outside = 0.0;
    for (std::int64_t j = -edge; j < a; ++j) {
      const double v = bessel_kernel(i, j, theta, *table);
      outside += v * v;
    }
    for (std::int64_t j = a; j <= b; ++j) {
      if (j == i) continue;
      const double v = bessel_kernel(i, j, theta, *table);
      inside += v * v;
    }
    for (std::int64_t j = b + 1; j <= edge; ++j) {
      const double v = bessel_kernel(i, j, theta, *table);
      outside += v * v;
    }
    row_out[static_cast<std::size_t>(idx)] = outside;
    row_trace[static_cast<std::size_t>(idx)] = diag - inside;
    // Projection identity residual = kernel mass beyond the truncation.
    row_resid[static_cast<std::size_t>(idx)] = std::abs(diag - inside - outside);
  });

  VarianceBreakdown out;
  out.a = a;
  out.b = b;
  out.theta = theta;
  for (std::int64_t idx = 0; idx < count; ++idx) {
    out.value_inside_outside += row_out[static_cast<std::size_t>(idx)];
    out.value_trace_form += row_trace[static_cast<std::size_t>(idx)];
    out.truncation_bound += row_resid[static_cast<std::size_t>(idx)];
  }
  return out;
}

double predicted_log_variance(std::int64_t length) {
  if (length < 2) raise(Errc::invalid_argument, "length must be >= 2");
  constexpr double pi_sq = 9.8696044010893586188344909998762;
  return std::log(static_cast<double>(length)) / pi_sq;
}

namespace {

double union_correlation(const PatternSpec& a, const PatternSpec& b, std::int64_t d, double phi) {
  std::set<std::int64_t> pts(a.offsets().begin(), a.offsets().end());
  for (std::int64_t o : b.offsets()) pts.insert(o + d);
  std::vector<std::int64_t> v(pts.begin(), pts.end());
  return correlation(v, KernelSpec::sine(phi));
}

}  // namespace

double pattern_expectation(const PatternSpec& pattern, double phi) {
  return correlation(pattern.offsets(), KernelSpec::sine(phi));
}

double pattern_covariance(const PatternSpec& a, const PatternSpec& b, std::int64_t d, double phi) {
  return union_correlation(a, b, d, phi) -
         pattern_expectation(a, phi) * pattern_expectation(b, phi);
}

double pattern_covariance(const PatternSpec& pattern, std::int64_t d, double phi) {
  return pattern_covariance(pattern, pattern, d, phi);
}

namespace {

// Generic bilinear density: weighted covariances over pattern pairs.
struct WeightedPair {
  const PatternSpec* left;
  const PatternSpec* right;
  double weight;
};

DensityResult weighted_density(const std::vector<WeightedPair>& pairs, double phi,
                               std::int64_t tail) {
  if (tail < 1000) raise(Errc::invalid_argument, "tail must be >= 1000");
  double sum = 0.0;
  double last_scaled = 0.0;
  for (std::int64_t d = tail; d >= 1; --d) {
    double pair_sum = 0.0;
    for (const auto& wp : pairs)
      pair_sum += wp.weight * (pattern_covariance(*wp.left, *wp.right, d, phi) +
                               pattern_covariance(*wp.left, *wp.right, -d, phi));
    sum += pair_sum;
    if (d == tail) last_scaled = std::abs(pair_sum) * static_cast<double>(d) * static_cast<double>(d);
    else if (d >= tail - 8)
      last_scaled = std::max(last_scaled, std::abs(pair_sum) * static_cast<double>(d) *
                                              static_cast<double>(d));
  }
  for (const auto& wp : pairs)
    sum += wp.weight * pattern_covariance(*wp.left, *wp.right, 0, phi);
  DensityResult out;
  out.value = sum;
  out.tail_bound = last_scaled / static_cast<double>(tail);
  return out;
}

}  // namespace

DensityResult pattern_variance_density(const PatternSpec& pattern, double phi, std::int64_t tail) {
  return weighted_density({{&pattern, &pattern, 1.0}}, phi, tail);
}

DensityResult pattern_variance_density(const PatternSpec& a, const PatternSpec& b, double phi,
                                       std::int64_t tail) {
  return weighted_density({{&a, &a, 1.0}, {&a, &b, -1.0}, {&b, &a, -1.0}, {&b, &b, 1.0}}, phi,
                          tail);
}

double pattern_window_variance(const PatternSpec& pattern, std::int64_t length, double phi) {
  if (length < 1) raise(Errc::invalid_argument, "length must be >= 1");
  double var = 0.0;
  for (std::int64_t d = -(length - 1); d <= length - 1; ++d)
    var += static_cast<double>(length - std::llabs(d)) * pattern_covariance(pattern, d, phi);
  return var;
}

double difference_window_variance(const PatternSpec& a, const PatternSpec& b, std::int64_t length,
                                  double phi) {
  if (length < 1) raise(Errc::invalid_argument, "length must be >= 1");
  double var = 0.0;
  for (std::int64_t d = -(length - 1); d <= length - 1; ++d) {
    const double cd = pattern_covariance(a, a, d, phi) - pattern_covariance(a, b, d, phi) -
                      pattern_covariance(b, a, d, phi) + pattern_covariance(b, b, d, phi);
    var += static_cast<double>(length - std::llabs(d)) * cd;
  }
  return var;
}

}  // namespace planch
