// linalg.hpp
// Small dense complex linear algebra: 2x2 operator type, a cyclic Jacobi
// eigensolver for Hermitian matrices, and Hermitian matrix square roots.
// Everything in this project is at most 8x8, so the kernels work on raw
// row-major buffers and avoid allocation in hot paths.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

namespace qcorr {

using cplx = std::complex<double>;

// 2x2 complex matrix, row major. Used for single-qubit operators.
struct Mat2 {
  std::array<cplx, 4> a{};

  static Mat2 identity() { return {{cplx{1.0}, cplx{0.0}, cplx{0.0}, cplx{1.0}}}; }
  static Mat2 diagonal(cplx d0, cplx d1) { return {{d0, cplx{0.0}, cplx{0.0}, d1}}; }

  cplx operator()(std::size_t r, std::size_t c) const { return a[2 * r + c]; }
  cplx& operator()(std::size_t r, std::size_t c) { return a[2 * r + c]; }

  Mat2 adjoint() const;
  bool is_unitary(double tol = 1e-12) const;
  bool is_identity(double tol = 1e-12) const;
};

Mat2 operator*(const Mat2& x, const Mat2& y);

// Standard complex Gaussian sample (unit variance per complex component),
// built with Box-Muller on the raw 53-bit stream so the sequence is
// identical across standard library implementations.
cplx gaussian_complex(std::mt19937_64& rng);

// Haar-random single-qubit unitary.
Mat2 random_unitary(std::mt19937_64& rng);

// Diagonalizes an n x n complex Hermitian matrix with cyclic Jacobi
// rotations. `a` (row major) is destroyed. Eigenvalues come out ascending
// in `w`; when `v` is non-null it receives the matching eigenvectors as
// columns of an n x n unitary.
void jacobi_hermitian(std::size_t n, cplx* a, double* w, cplx* v = nullptr);

std::vector<double> hermitian_eigenvalues(std::size_t n, std::vector<cplx> a);

// b = sqrt(a) for Hermitian positive semidefinite `a` (row major, n x n).
// Eigenvalues in [-clamp_tol, 0) are treated as exact zeros; anything more
// negative makes the input invalid and throws std::invalid_argument.
void hermitian_sqrt(std::size_t n, const cplx* a, cplx* b, double clamp_tol = 1e-12);

}  // namespace qcorr
