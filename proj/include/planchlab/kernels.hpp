#pragma once

#include <cstdint>
#include <memory>
#include <span>

#include "planchlab/bessel.hpp"

namespace planch {

/// Discrete sine kernel sin(phi d)/(pi d), diagonal phi/pi.
double sine_kernel(std::int64_t d, double phi);

/// Discrete Bessel kernel theta (J_x J_{y+1} - J_{x+1} J_y)(2 theta)/(x - y);
/// diagonal by the tail series sum_{s>=1} J_{x+s}^2. Off-table evaluations
/// beyond the right edge return 0 when the table already spans the edge
/// cutoff (the tail there is superexponentially small); anything else outside
/// the table raises Errc::table_too_small.
double bessel_kernel(std::int64_t x, std::int64_t y, double theta, const BesselTable& table);

/// One symmetric translation-respecting kernel under a uniform evaluation
/// contract: either sine(phi) or bessel(theta) with a shared table.
class KernelSpec {
 public:
  static KernelSpec sine(double phi);
  static KernelSpec bessel(double theta, std::shared_ptr<const BesselTable> table);
  static KernelSpec bessel(double theta);  // builds a table up to edge_cutoff(theta)+1

  double operator()(std::int64_t x, std::int64_t y) const;

  bool is_sine() const noexcept { return !table_; }
  double phi() const noexcept { return phi_; }
  double theta() const noexcept { return theta_; }
  const BesselTable& table() const { return *table_; }

  /// Scaled position u_x = x/sqrt(n) with n = theta^2 (bessel only).
  double u(std::int64_t x) const;
  /// Local density angle phi_x = arccos(u_x/2).
  double phi_at(std::int64_t x) const;

 private:
  KernelSpec() = default;
  double phi_ = 0.0;
  double theta_ = 0.0;
  std::shared_ptr<const BesselTable> table_;
};

/// Correlation function rho(points) = det[K(x_i,x_j)]. Points must be
/// pairwise distinct and at most 12 (LU determinant).
double correlation(std::span<const std::int64_t> points, const KernelSpec& kernel);

}  // namespace planch
