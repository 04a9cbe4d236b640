#include "planchlab/dpp.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "planchlab/errors.hpp"

namespace planch {

namespace {

constexpr double kEigenSlack = 1e-8;

// Four independent accumulators; the fixed association order keeps results
// identical across runs while breaking the scalar add latency chain.
double dot(const double* a, const double* b, std::size_t n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 += a[i] * b[i];
    s1 += a[i + 1] * b[i + 1];
    s2 += a[i + 2] * b[i + 2];
    s3 += a[i + 3] * b[i + 3];
  }
  double tail = 0.0;
  for (; i < n; ++i) tail += a[i] * b[i];
  return ((s0 + s1) + (s2 + s3)) + tail;
}

}  // namespace

DppWindowSampler::DppWindowSampler(const KernelSpec& kernel, std::int64_t a, std::int64_t b) {
  if (a > b) raise(Errc::empty_range, "window requires a <= b");
  const std::int64_t size = b - a + 1;
  if (size > 512) raise(Errc::window_too_large, "window length capped at 512");
  a_ = a;
  size_ = size;

  Matrix K(static_cast<std::size_t>(size));
  for (std::int64_t i = 0; i < size; ++i) {
    for (std::int64_t j = i; j < size; ++j) {
      const double v = kernel(a + i, a + j);
      K.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
      K.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = v;
    }
    trace_ += K.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
  }

  EigenSym eig = jacobi_eigh(std::move(K));
  for (double& v : eig.values) {
    if (v < -kEigenSlack || v > 1.0 + kEigenSlack)
      raise(Errc::eigenvalue_out_of_range, "restricted kernel eigenvalue outside [0,1]");
    v = std::clamp(v, 0.0, 1.0);
  }
  eigenvalues_ = std::move(eig.values);
  vectors_ = std::move(eig.vectors);
}

DescentWindow DppWindowSampler::sample(RngStream& rng) const {
  const std::size_t w = static_cast<std::size_t>(size_);
  DescentWindow out;
  out.origin = a_;
  out.bits.assign(w, 0);

  // Bernoulli thinning of eigenvectors; one uniform per eigenvalue keeps the
  // draw count independent of the outcome.
  std::vector<std::size_t> picked;
  picked.reserve(w);
  for (std::size_t k = 0; k < w; ++k)
    if (rng.uniform01() < eigenvalues_[k]) picked.push_back(k);
  const std::size_t r = picked.size();
  if (r == 0) return out;

  // Row features V[x][c] of the selected eigenvectors; the projection DPP
  // places exactly r points with density prop. to the squared distance of the
  // row feature to the span of rows already chosen.
  std::vector<double> V(w * r);
  for (std::size_t x = 0; x < w; ++x)
    for (std::size_t c = 0; c < r; ++c) V[x * r + c] = vectors_.at(x, picked[c]);

  std::vector<double> residual(w, 0.0);
  for (std::size_t x = 0; x < w; ++x) residual[x] = dot(&V[x * r], &V[x * r], r);

  std::vector<double> basis;  // orthonormal coefficient vectors, r each
  basis.reserve(r * r);
  std::vector<double> g(r);

  for (std::size_t step = 0; step < r; ++step) {
    double total = 0.0;
    for (std::size_t x = 0; x < w; ++x) total += std::max(residual[x], 0.0);
    double target = rng.uniform01() * total;
    std::size_t chosen = w - 1;
    for (std::size_t x = 0; x < w; ++x) {
      const double p = std::max(residual[x], 0.0);
      if (target < p) {
        chosen = x;
        break;
      }
      target -= p;
    }
    while (out.bits[chosen] == 1 && chosen > 0) --chosen;  // fp-guard, never expected
    out.bits[chosen] = 1;

    // Orthonormalize the chosen row against the basis (two passes).
    for (std::size_t c = 0; c < r; ++c) g[c] = V[chosen * r + c];
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t s = 0; s < step; ++s) {
        const double* e = &basis[s * r];
        const double d = dot(g.data(), e, r);
        for (std::size_t c = 0; c < r; ++c) g[c] -= d * e[c];
      }
    }
    const double norm = std::sqrt(std::max(dot(g.data(), g.data(), r), 1e-300));
    for (std::size_t c = 0; c < r; ++c) g[c] /= norm;
    basis.insert(basis.end(), g.begin(), g.end());

    // residual_x -= <row_x, e>^2
    for (std::size_t x = 0; x < w; ++x) {
      const double d = dot(&V[x * r], g.data(), r);
      residual[x] -= d * d;
    }
    residual[chosen] = 0.0;
  }
  return out;
}

DescentWindow dpp_window_sample(const KernelSpec& kernel, std::int64_t a, std::int64_t b,
                                RngSeed seed) {
  RngStream rng(seed, 0);
  DppWindowSampler sampler(kernel, a, b);
  return sampler.sample(rng);
}

}  // namespace planch
