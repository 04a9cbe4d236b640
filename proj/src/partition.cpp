#include "planchlab/partition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "planchlab/errors.hpp"

namespace planch {

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) raise(Errc::non_positive_part, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      raise(Errc::non_monotonic, "partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

std::int64_t Partition::row(std::int64_t i) const {
  if (i < 1 || i > rows()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  return out.str();
}

Partition Partition::parse(const std::string& text) {
  if (text.empty() || text == "-") return Partition{};
  std::vector<std::int64_t> parts;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      raise(Errc::invalid_argument, "bad partition token '" + tok + "'");
    }
    if (pos != tok.size()) raise(Errc::invalid_argument, "bad partition token '" + tok + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

Partition make_partition(std::vector<std::int64_t> parts) { return Partition(std::move(parts)); }

std::vector<Partition> enumerate_partitions(std::int64_t n, std::int64_t cap) {
  if (n < 0) raise(Errc::invalid_argument, "n must be nonnegative");
  if (n > cap) raise(Errc::cap_exceeded, "enumeration cap exceeded");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Decreasing lexicographic order: start at (n); at each step decrement the
  // rightmost part larger than 1 and redistribute the remainder greedily.
  std::vector<std::int64_t> cur{n};
  for (;;) {
    out.emplace_back(Partition(cur));
    std::int64_t rest = 0;
    while (!cur.empty() && cur.back() == 1) {
      rest += 1;
      cur.pop_back();
    }
    if (cur.empty()) break;
    cur.back() -= 1;
    rest += 1;
    const std::int64_t unit = cur.back();
    while (rest > 0) {
      const std::int64_t take = std::min(rest, unit);
      cur.push_back(take);
      rest -= take;
    }
  }
  return out;
}

namespace {

BigInt factorial(std::int64_t n) {
  BigInt f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

double log_big(const BigInt& v) {
  const unsigned msb = boost::multiprecision::msb(v);
  if (msb <= 900) return std::log(static_cast<double>(v));
  const BigInt shifted = v >> (msb - 52);
  return std::log(static_cast<double>(shifted)) +
         static_cast<double>(msb - 52) * 0.69314718055994530941723212145818;
}

std::vector<std::int64_t> conjugate(const Partition& lambda) {
  std::vector<std::int64_t> conj;
  if (lambda.empty()) return conj;
  conj.assign(static_cast<std::size_t>(lambda.parts()[0]), 0);
  for (std::int64_t part : lambda.parts())
    for (std::int64_t j = 0; j < part; ++j) conj[static_cast<std::size_t>(j)] += 1;
  return conj;
}

}  // namespace

BigInt dimension(const Partition& lambda) {
  if (lambda.empty()) return 1;
  const auto conj = conjugate(lambda);
  BigInt hooks = 1;
  for (std::int64_t i = 0; i < lambda.rows(); ++i) {
    const std::int64_t arm_base = lambda.parts()[static_cast<std::size_t>(i)];
    for (std::int64_t j = 0; j < arm_base; ++j) {
      const std::int64_t hook = (arm_base - j) + (conj[static_cast<std::size_t>(j)] - i) - 1;
      hooks *= hook;
    }
  }
  return factorial(lambda.size()) / hooks;
}

double ExactProb::value() const {
  return static_cast<double>(BigRat(numerator, denominator));
}

ExactProb plancherel_prob(const Partition& lambda) {
  const BigInt d = dimension(lambda);
  BigRat p(d * d, factorial(lambda.size()));
  return ExactProb{boost::multiprecision::numerator(p), boost::multiprecision::denominator(p)};
}

double poissonized_prob(const Partition& lambda, double eta) {
  if (eta < 0) raise(Errc::invalid_argument, "eta must be nonnegative");
  const std::int64_t n = lambda.size();
  if (eta == 0.0) return n == 0 ? 1.0 : 0.0;
  // log-space: -eta + n log eta + 2 log dim - 2 log n!
  const double log_dim = log_big(dimension(lambda));
  const double log_fact = std::lgamma(static_cast<double>(n) + 1.0);
  return std::exp(-eta + static_cast<double>(n) * std::log(eta) + 2.0 * log_dim - 2.0 * log_fact);
}

int descent(const Partition& lambda, std::int64_t k) {
  const std::int64_t m = lambda.rows();
  if (k <= -(m + 1)) return 1;  // zero rows: k = -i for i > m
  // lambda_i - i is strictly decreasing in i; binary search for k.
  std::int64_t lo = 1, hi = m;
  while (lo <= hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    const std::int64_t v = lambda.parts()[static_cast<std::size_t>(mid - 1)] - mid;
    if (v == k) return 1;
    if (v > k)
      lo = mid + 1;
    else
      hi = mid - 1;
  }
  return 0;
}

int DescentWindow::at(std::int64_t k) const {
  if (k < origin || k >= origin + length()) raise(Errc::invalid_argument, "index outside window");
  return bits[static_cast<std::size_t>(k - origin)];
}

DescentWindow descent_window(const Partition& lambda, std::int64_t a, std::int64_t b) {
  if (a > b) raise(Errc::empty_range, "descent window requires a <= b");
  DescentWindow w;
  w.origin = a;
  w.bits.assign(static_cast<std::size_t>(b - a + 1), 0);
  const std::int64_t m = lambda.rows();
  for (std::int64_t i = 1; i <= m; ++i) {
    const std::int64_t k = lambda.parts()[static_cast<std::size_t>(i - 1)] - i;
    if (k < a) break;  // decreasing in i
    if (k <= b) w.bits[static_cast<std::size_t>(k - a)] = 1;
  }
  for (std::int64_t k = std::min(b, -(m + 1)); k >= a; --k)
    w.bits[static_cast<std::size_t>(k - a)] = 1;
  return w;
}

double profile_phi(const Partition& lambda, double t) {
  const std::int64_t right = lambda.empty() ? 0 : lambda.parts()[0];
  if (t >= static_cast<double>(right)) return t;
  const std::int64_t left = -lambda.rows();
  if (t <= static_cast<double>(left)) return -t;
  // Anchor at the right edge and integrate slopes leftward over integer steps.
  const auto f = static_cast<std::int64_t>(std::floor(t));
  const DescentWindow w = descent_window(lambda, f, right - 1);
  std::int64_t phi_next = right;  // profile value at integer k+1, starting at k+1 = right
  for (std::int64_t k = right - 1; k > f; --k)
    phi_next += w.at(k) ? 1 : -1;  // phi(k) = phi(k+1) - slope(k)
  const std::int64_t phi_f = phi_next + (w.at(f) ? 1 : -1);
  const double slope = w.at(f) ? -1.0 : 1.0;
  return static_cast<double>(phi_f) + slope * (t - static_cast<double>(f));
}

double omega(double t) {
  const double a = std::abs(t);
  if (a >= 2.0) return a;
  constexpr double two_over_pi = 0.63661977236758134307553505349006;
  return two_over_pi * (t * std::asin(t / 2.0) + std::sqrt(4.0 - t * t));
}

double deviation_F(const Partition& lambda, double t, std::int64_t n) {
  if (n != lambda.size()) raise(Errc::size_mismatch, "n must equal |lambda|");
  if (n == 0) return profile_phi(lambda, t) - std::abs(t);
  const double s = std::sqrt(static_cast<double>(n));
  return profile_phi(lambda, t) - s * omega(t / s);
}

}  // namespace planch
