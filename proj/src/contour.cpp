#include "planchlab/contour.hpp"

#include <cmath>

#include "planchlab/errors.hpp"

namespace planch {

namespace {

constexpr long double kTwoPi = 6.283185307179586476925286766559L;

void validate(const ContourGrid& g) {
  if (!(g.inner_radius > 0.0 && g.inner_radius < 1.0 && g.outer_radius > 1.0))
    raise(Errc::radius_order_violated, "contour radii must satisfy 0 < r < 1 < R");
  const std::int64_t n = g.node_count;
  if (n < 16 || (n & (n - 1)) != 0)
    raise(Errc::invalid_argument, "node count must be a power of two >= 16");
}

std::complex<long double> int_pow(std::complex<long double> base, std::int64_t e) {
  if (e < 0) return 1.0L / int_pow(base, -e);
  std::complex<long double> acc = 1.0L;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace

ContourEvaluator::ContourEvaluator(double theta, const ContourGrid& grid) {
  validate(grid);
  if (theta < 0) raise(Errc::invalid_argument, "theta must be nonnegative");
  n_ = grid.node_count;
  z_.resize(n_);
  w_.resize(n_);
  ez_.resize(n_);
  ew_.resize(n_);
  inv_diff_.resize(static_cast<std::size_t>(n_) * n_);
  // z rides the outer circle, w the inner one. The opposite nesting differs
  // by the residue at z = w, which shifts every diagonal value by one and
  // breaks the theta -> 0 limit. The node powers reach ~1e14 for the extreme
  // lattice arguments while the result stays O(1); everything runs in
  // extended precision to keep that cancellation benign.
  const long double th = theta;
  for (std::int64_t j = 0; j < n_; ++j) {
    const long double t = kTwoPi * static_cast<long double>(j) / static_cast<long double>(n_);
    z_[j] = std::polar<long double>(grid.outer_radius, t);
    w_[j] = std::polar<long double>(grid.inner_radius, t);
    ez_[j] = std::exp(th * (z_[j] - 1.0L / z_[j]));
    ew_[j] = std::exp(-th * (w_[j] - 1.0L / w_[j]));
  }
  for (std::int64_t j = 0; j < n_; ++j)
    for (std::int64_t k = 0; k < n_; ++k)
      inv_diff_[static_cast<std::size_t>(j) * n_ + k] = 1.0L / (z_[j] - w_[k]);
}

double ContourEvaluator::kernel(std::int64_t x, std::int64_t y) const {
  // (1/N^2) sum_{j,k} exp(theta(z - 1/z - w + 1/w)) z^{-x} w^{y+1} / (z - w);
  // the z w factor comes from dz dw on the circles and cancels (2 pi i)^2.
  std::vector<std::complex<long double>> a(n_), b(n_);
  for (std::int64_t j = 0; j < n_; ++j) {
    a[j] = ez_[j] * int_pow(z_[j], -x);
    b[j] = ew_[j] * int_pow(w_[j], y + 1);
  }
  std::complex<long double> total = 0.0L;
  for (std::int64_t j = 0; j < n_; ++j) {
    std::complex<long double> inner = 0.0L;
    const std::complex<long double>* row = &inv_diff_[static_cast<std::size_t>(j) * n_];
    for (std::int64_t k = 0; k < n_; ++k) inner += b[k] * row[k];
    total += a[j] * inner;
  }
  const long double scale =
      1.0L / (static_cast<long double>(n_) * static_cast<long double>(n_));
  return static_cast<double>(total.real() * scale);
}

double contour_kernel_oracle(std::int64_t x, std::int64_t y, double theta,
                             const ContourGrid& grid) {
  return ContourEvaluator(theta, grid).kernel(x, y);
}

}  // namespace planch
