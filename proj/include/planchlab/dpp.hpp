#pragma once

#include <cstdint>

#include "planchlab/kernels.hpp"
#include "planchlab/linalg.hpp"
#include "planchlab/partition.hpp"
#include "planchlab/rng.hpp"

namespace planch {

/// Exact determinantal sampler for a kernel restricted to a finite window
/// [a, b]: one spectral decomposition up front (cyclic Jacobi), then each
/// sample Bernoulli-selects eigenvectors by eigenvalue and places the points
/// by sequential projection. Windows are capped at 512 sites
/// (Errc::window_too_large); eigenvalues must lie in [-1e-8, 1 + 1e-8]
/// (Errc::eigenvalue_out_of_range) and are clamped into [0, 1].
class DppWindowSampler {
 public:
  DppWindowSampler(const KernelSpec& kernel, std::int64_t a, std::int64_t b);

  DescentWindow sample(RngStream& rng) const;

  std::int64_t window_start() const noexcept { return a_; }
  std::int64_t window_length() const noexcept { return size_; }
  /// Expected point count, trace of the restricted kernel.
  double mean_points() const noexcept { return trace_; }

 private:
  std::int64_t a_ = 0;
  std::int64_t size_ = 0;
  double trace_ = 0.0;
  std::vector<double> eigenvalues_;  // clamped into [0,1]
  Matrix vectors_;                   // eigenvectors in columns
};

/// One-shot draw (stream index 0 of the seed).
DescentWindow dpp_window_sample(const KernelSpec& kernel, std::int64_t a, std::int64_t b,
                                RngSeed seed);

}  // namespace planch
