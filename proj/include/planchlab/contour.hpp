#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace planch {

/// Two concentric quadrature circles for the double contour representation of
/// the Bessel kernel. The inner circle carries z, the outer carries w, so the
/// integrand has no pole between them.
struct ContourGrid {
  double inner_radius = 0.5;
  double outer_radius = 2.0;
  std::int64_t node_count = 256;  // power of two, >= 16
};

/// Trapezoidal quadrature on the two circles. Node data and the 1/(z - w)
/// table are shared across evaluations at the same theta.
class ContourEvaluator {
 public:
  ContourEvaluator(double theta, const ContourGrid& grid);

  double kernel(std::int64_t x, std::int64_t y) const;

 private:
  std::int64_t n_;
  std::vector<std::complex<long double>> z_, w_;     // nodes
  std::vector<std::complex<long double>> ez_, ew_;   // exp(+-theta(v - 1/v))
  std::vector<std::complex<long double>> inv_diff_;  // 1/(z_j - w_k), row-major
};

/// Single-shot evaluation; builds the node tables each call.
double contour_kernel_oracle(std::int64_t x, std::int64_t y, double theta,
                             const ContourGrid& grid);

}  // namespace planch
