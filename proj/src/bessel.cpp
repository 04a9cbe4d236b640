#include "planchlab/bessel.hpp"

#include <cmath>

#include "planchlab/errors.hpp"

namespace planch {

std::int64_t edge_cutoff(double theta) {
  if (theta < 0) raise(Errc::invalid_argument, "theta must be nonnegative");
  return static_cast<std::int64_t>(std::ceil(2.0 * theta + 8.0 * std::cbrt(theta) + 40.0));
}

BesselTable::BesselTable(double two_theta, std::int64_t max_order)
    : two_theta_(two_theta), max_order_(max_order) {
  if (two_theta < 0) raise(Errc::invalid_argument, "argument must be nonnegative");
  if (max_order < 1) raise(Errc::invalid_argument, "max_order must be >= 1");

  const std::size_t n = static_cast<std::size_t>(2 * max_order + 1);
  values_.assign(n, 0.0);

  std::vector<double> pos(static_cast<std::size_t>(max_order + 1), 0.0);
  if (two_theta == 0.0) {
    pos[0] = 1.0;  // J_m(0) = delta_{m,0}
  } else {
    // Backward recurrence J_{m-1} = (2m/x) J_m - J_{m+1}, seeded above the
    // requested range so contamination from the start values dies out. The
    // seed must sit past the turning zone m ~ x even when the table itself is
    // short, and the normalizer J_0 + 2 sum_{k>=1} J_{2k} = 1 accumulates over
    // the whole recurrence range, so small tables at large arguments stay
    // correct.
    const std::int64_t pad =
        std::max<std::int64_t>(static_cast<std::int64_t>(std::ceil(two_theta)), 20) + 15;
    const std::int64_t start = std::max(max_order, edge_cutoff(two_theta / 2.0)) + pad;
    double jp = 0.0;   // J_{m+1}
    double j = 1e-30;  // J_m (arbitrary scale, fixed by normalization below)
    double norm = 0.0;
    for (std::int64_t m = start; m >= 0; --m) {
      if (m <= max_order) pos[static_cast<std::size_t>(m)] = j;
      if (m % 2 == 0) norm += (m == 0) ? j : 2.0 * j;
      if (m == 0) break;
      const double jm = (2.0 * static_cast<double>(m) / two_theta) * j - jp;
      jp = j;
      j = jm;
      if (std::abs(j) > 1e250) {
        jp *= 1e-250;
        j *= 1e-250;
        norm *= 1e-250;
        for (std::int64_t k = m; k <= max_order; ++k)
          pos[static_cast<std::size_t>(k)] *= 1e-250;
      }
    }
    for (auto& v : pos) v /= norm;
  }

  for (std::int64_t m = 0; m <= max_order; ++m) {
    const double v = pos[static_cast<std::size_t>(m)];
    values_[static_cast<std::size_t>(max_order + m)] = v;
    values_[static_cast<std::size_t>(max_order - m)] = (m % 2 == 0) ? v : -v;
  }

  sq_tail_.assign(n + 1, 0.0);
  for (std::size_t i = n; i-- > 0;) sq_tail_[i] = sq_tail_[i + 1] + values_[i] * values_[i];
}

double BesselTable::at(std::int64_t m) const {
  if (m < -max_order_ || m > max_order_) raise(Errc::table_too_small, "order outside Bessel table");
  return values_[static_cast<std::size_t>(m + max_order_)];
}

double BesselTable::sq_tail(std::int64_t x) const {
  if (x < -max_order_ - 1) raise(Errc::table_too_small, "diagonal outside Bessel table");
  if (x >= max_order_) return 0.0;
  return sq_tail_[static_cast<std::size_t>(x + 1 + max_order_)];
}

BesselTable bessel_row(double two_theta, std::int64_t max_order) {
  return BesselTable(two_theta, max_order);
}

}  // namespace planch
