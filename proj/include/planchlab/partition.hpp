#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace planch {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// A Young diagram: weakly decreasing positive row lengths. Immutable after
/// construction; the empty partition is the default value.
class Partition {
 public:
  Partition() = default;

  /// Validates monotonicity and positivity (Errc::non_monotonic,
  /// Errc::non_positive_part).
  explicit Partition(std::vector<std::int64_t> parts);

  const std::vector<std::int64_t>& parts() const noexcept { return parts_; }
  std::int64_t size() const noexcept { return size_; }                 // cells n
  std::int64_t rows() const noexcept { return static_cast<std::int64_t>(parts_.size()); }
  std::int64_t row(std::int64_t i) const;                              // 1-based, 0 beyond rows
  bool empty() const noexcept { return parts_.empty(); }

  bool operator==(const Partition&) const = default;

  /// "4,2,1" with "-" for the empty partition.
  std::string to_string() const;
  static Partition parse(const std::string& text);

 private:
  std::vector<std::int64_t> parts_;
  std::int64_t size_ = 0;
};

Partition make_partition(std::vector<std::int64_t> parts);

/// All partitions of n, each once, in decreasing lexicographic order:
/// (n), (n-1,1), ..., (1^n). Guarded by a cap (Errc::cap_exceeded).
std::vector<Partition> enumerate_partitions(std::int64_t n, std::int64_t cap = 40);

/// Number of standard Young tableaux of shape lambda, by the hook length
/// formula n! / prod(hooks). Exact; the division has no remainder.
BigInt dimension(const Partition& lambda);

/// Exact rational probability in lowest terms.
struct ExactProb {
  BigInt numerator;
  BigInt denominator;
  double value() const;
};

/// Plancherel weight (dim lambda)^2 / n!.
ExactProb plancherel_prob(const Partition& lambda);

/// Poissonized weight e^{-eta} eta^n (dim lambda)^2 / (n!)^2 as a double.
double poissonized_prob(const Partition& lambda, double eta);

/// Descent bit c_k: 1 iff k = lambda_i - i for some i >= 1 (rows beyond the
/// diagram count as zero). O(log rows) by binary search over the strictly
/// decreasing lambda_i - i.
int descent(const Partition& lambda, std::int64_t k);

/// Materialized bits c_a .. c_b.
struct DescentWindow {
  std::int64_t origin = 0;
  std::vector<std::uint8_t> bits;

  std::int64_t length() const noexcept { return static_cast<std::int64_t>(bits.size()); }
  int at(std::int64_t k) const;  // by absolute index
};

/// O(length + rows). Requires a <= b (Errc::empty_range).
DescentWindow descent_window(const Partition& lambda, std::int64_t a, std::int64_t b);

/// Upper profile of the rotated diagram: piecewise linear, slope -1 on
/// [k, k+1) where c_k = 1 and +1 otherwise, equal to |t| far from the diagram.
double profile_phi(const Partition& lambda, double t);

/// Limit shape: (2/pi)(t asin(t/2) + sqrt(4 - t^2)) inside [-2,2], |t| outside.
double omega(double t);

/// Deviation from the scaled limit shape, F(t) = profile(t) - sqrt(n) omega(t/sqrt(n)).
/// n must equal |lambda| (Errc::size_mismatch); the empty case returns 0.
double deviation_F(const Partition& lambda, double t, std::int64_t n);

}  // namespace planch
