#pragma once

#include <cstddef>
#include <vector>

namespace planch {

/// Dense row-major square matrix, just big enough for kernel work.
struct Matrix {
  std::size_t n = 0;
  std::vector<double> a;  // n*n, row-major

  explicit Matrix(std::size_t size = 0) : n(size), a(size * size, 0.0) {}
  double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

/// Determinant by LU with partial pivoting; destroys its argument.
double det_lu(Matrix m);

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi sweeps.
/// Eigenvectors are the columns of `vectors`; `values[k]` pairs with column k.
struct EigenSym {
  std::vector<double> values;
  Matrix vectors;
};
EigenSym jacobi_eigh(Matrix m, int max_sweeps = 64);

}  // namespace planch
