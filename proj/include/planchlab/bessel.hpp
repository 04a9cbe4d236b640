#pragma once

#include <cstdint>
#include <vector>

namespace planch {

/// Largest order at which kernel mass survives: 2*theta plus an Airy-scale
/// transition margin. Tables truncated here carry ~1e-12 tails.
std::int64_t edge_cutoff(double theta);

/// J_m(2*theta) for m in [-max_order, max_order], computed once by Miller's
/// backward recurrence and shared read-only afterwards. Also carries the
/// suffix sums of squares used for kernel diagonals.
class BesselTable {
 public:
  BesselTable(double two_theta, std::int64_t max_order);

  double two_theta() const noexcept { return two_theta_; }
  std::int64_t max_order() const noexcept { return max_order_; }

  /// J_m, |m| <= max_order. Negative orders by parity.
  double at(std::int64_t m) const;

  /// sum_{m > x} J_m^2, defined for x >= -max_order - 1. Equals the kernel
  /// diagonal J(x, x, theta^2).
  double sq_tail(std::int64_t x) const;

 private:
  double two_theta_;
  std::int64_t max_order_;
  std::vector<double> values_;   // index m + max_order
  std::vector<double> sq_tail_;  // sq_tail_[i] = sum of values_[j]^2 for j >= i
};

/// Standalone table constructor matching the order coverage needed for kernel
/// sums at this theta.
BesselTable bessel_row(double two_theta, std::int64_t max_order);

}  // namespace planch
