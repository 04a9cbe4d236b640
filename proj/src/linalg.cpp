#include "planchlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace planch {

double det_lu(Matrix m) {
  const std::size_t n = m.n;
  if (n == 0) return 1.0;
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(m.at(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(m.at(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(col, j), m.at(pivot, j));
      det = -det;
    }
    const double d = m.at(col, col);
    det *= d;
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m.at(r, col) / d;
      if (f == 0.0) continue;
      for (std::size_t j = col + 1; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return det;
}

EigenSym jacobi_eigh(Matrix m, int max_sweeps) {
  const std::size_t n = m.n;
  EigenSym out;
  out.vectors = Matrix(n);
  for (std::size_t i = 0; i < n; ++i) out.vectors.at(i, i) = 1.0;
  out.values.assign(n, 0.0);
  if (n == 0) return out;
  if (n == 1) {
    out.values[0] = m.at(0, 0);
    return out;
  }

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(m.at(i, i)));
  scale = std::max(scale, 1.0);
  const double tol = 1e-14 * scale;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(m.at(p, q)));
    if (off < tol) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = m.at(p, q);
        if (std::abs(apq) < tol * 1e-3) continue;
        const double app = m.at(p, p);
        const double aqq = m.at(q, q);
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = m.at(k, p);
          const double akq = m.at(k, q);
          m.at(k, p) = c * akp - s * akq;
          m.at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = m.at(p, k);
          const double aqk = m.at(q, k);
          m.at(p, k) = c * apk - s * aqk;
          m.at(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = out.vectors.at(k, p);
          const double vkq = out.vectors.at(k, q);
          out.vectors.at(k, p) = c * vkp - s * vkq;
          out.vectors.at(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) out.values[i] = m.at(i, i);
  return out;
}

}  // namespace planch
