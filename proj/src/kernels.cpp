#include "planchlab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "planchlab/errors.hpp"
#include "planchlab/linalg.hpp"

namespace planch {

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
}

double sine_kernel(std::int64_t d, double phi) {
  if (d == 0) return phi / kPi;
  const double dd = static_cast<double>(d);
  return std::sin(phi * dd) / (kPi * dd);
}

double bessel_kernel(std::int64_t x, std::int64_t y, double theta, const BesselTable& table) {
  const std::int64_t M = table.max_order();
  if (x == y) {
    if (x >= M) {
      // Tail of squares past the table; negligible once M >= edge_cutoff.
      if (M >= edge_cutoff(theta)) return 0.0;
      raise(Errc::table_too_small, "diagonal beyond table without edge coverage");
    }
    return table.sq_tail(x);
  }
  const std::int64_t top = std::max(std::llabs(x), std::llabs(y)) + 1;
  if (top > M) {
    if (std::min(x, y) > M && M >= edge_cutoff(theta)) return 0.0;
    raise(Errc::table_too_small, "kernel order beyond table");
  }
  const double num = table.at(x) * table.at(y + 1) - table.at(x + 1) * table.at(y);
  return theta * num / static_cast<double>(x - y);
}

KernelSpec KernelSpec::sine(double phi) {
  // phi = pi is admitted as the degenerate fully-packed kernel.
  if (!(phi > 0.0 && phi <= kPi)) raise(Errc::invalid_argument, "phi must lie in (0, pi]");
  KernelSpec k;
  k.phi_ = phi;
  return k;
}

KernelSpec KernelSpec::bessel(double theta, std::shared_ptr<const BesselTable> table) {
  if (!(theta > 0.0)) raise(Errc::invalid_argument, "theta must be positive");
  if (!table) raise(Errc::invalid_argument, "missing Bessel table");
  KernelSpec k;
  k.theta_ = theta;
  k.table_ = std::move(table);
  return k;
}

KernelSpec KernelSpec::bessel(double theta) {
  if (!(theta > 0.0)) raise(Errc::invalid_argument, "theta must be positive");
  return bessel(theta,
                std::make_shared<BesselTable>(2.0 * theta, edge_cutoff(theta) + 1));
}

double KernelSpec::operator()(std::int64_t x, std::int64_t y) const {
  if (is_sine()) return sine_kernel(x - y, phi_);
  return bessel_kernel(x, y, theta_, *table_);
}

double KernelSpec::u(std::int64_t x) const {
  if (is_sine()) raise(Errc::invalid_argument, "u_x is defined for the Bessel variant");
  return static_cast<double>(x) / theta_;
}

double KernelSpec::phi_at(std::int64_t x) const {
  const double ux = u(x);
  return std::acos(std::clamp(ux / 2.0, -1.0, 1.0));
}

double correlation(std::span<const std::int64_t> points, const KernelSpec& kernel) {
  const std::size_t s = points.size();
  if (s == 0) return 1.0;
  if (s > 12) raise(Errc::too_many_points, "correlation supports at most 12 points");
  std::set<std::int64_t> uniq(points.begin(), points.end());
  if (uniq.size() != s) raise(Errc::duplicate_point, "correlation points must be distinct");

  Matrix m(s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) m.at(i, j) = kernel(points[i], points[j]);
  return det_lu(std::move(m));
}

}  // namespace planch
