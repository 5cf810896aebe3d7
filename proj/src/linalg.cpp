#include "qcorr/linalg.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qcorr {

Mat2 Mat2::adjoint() const {
  Mat2 r;
  r(0, 0) = std::conj((*this)(0, 0));
  r(0, 1) = std::conj((*this)(1, 0));
  r(1, 0) = std::conj((*this)(0, 1));
  r(1, 1) = std::conj((*this)(1, 1));
  return r;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
  return r;
}

bool Mat2::is_unitary(double tol) const {
  const Mat2 g = adjoint() * (*this);
  return std::abs(g(0, 0) - 1.0) <= tol && std::abs(g(1, 1) - 1.0) <= tol &&
         std::abs(g(0, 1)) <= tol && std::abs(g(1, 0)) <= tol;
}

bool Mat2::is_identity(double tol) const {
  return std::abs((*this)(0, 0) - 1.0) <= tol && std::abs((*this)(1, 1) - 1.0) <= tol &&
         std::abs((*this)(0, 1)) <= tol && std::abs((*this)(1, 0)) <= tol;
}

cplx gaussian_complex(std::mt19937_64& rng) {
  // u1 in (0, 1], u2 in [0, 1)
  const double u1 = 1.0 - (rng() >> 11) * 0x1.0p-53;
  const double u2 = (rng() >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * M_PI * u2;
  return {r * std::cos(t), r * std::sin(t)};
}

Mat2 random_unitary(std::mt19937_64& rng) {
  // Gaussian matrix, then Gram-Schmidt on the columns.
  cplx c0[2] = {gaussian_complex(rng), gaussian_complex(rng)};
  cplx c1[2] = {gaussian_complex(rng), gaussian_complex(rng)};
  double n0 = std::sqrt(std::norm(c0[0]) + std::norm(c0[1]));
  c0[0] /= n0;
  c0[1] /= n0;
  const cplx ov = std::conj(c0[0]) * c1[0] + std::conj(c0[1]) * c1[1];
  c1[0] -= ov * c0[0];
  c1[1] -= ov * c0[1];
  double n1 = std::sqrt(std::norm(c1[0]) + std::norm(c1[1]));
  c1[0] /= n1;
  c1[1] /= n1;
  Mat2 u;
  u(0, 0) = c0[0];
  u(1, 0) = c0[1];
  u(0, 1) = c1[0];
  u(1, 1) = c1[1];
  return u;
}

void jacobi_hermitian(std::size_t n, cplx* a, double* w, cplx* v) {
  auto at = [&](std::size_t r, std::size_t c) -> cplx& { return a[r * n + c]; };
  if (v) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) v[r * n + c] = (r == c) ? 1.0 : 0.0;
  }

  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    double scale = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      scale += std::norm(at(p, p));
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(at(p, q));
    }
    if (off <= (scale + off) * 1e-30 || off < std::numeric_limits<double>::min()) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = at(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const double app = at(p, p).real();
        const double aqq = at(q, q).real();

        // Unitary rotation J with J(p,p)=J(q,q)=c, J(p,q)=-s*phase,
        // J(q,p)=s*conj(phase) annihilating a_pq; t solves t^2-2*tau*t-1=0.
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx phase = apq / r;

        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const cplx akp = at(k, p);
          const cplx akq = at(k, q);
          at(k, p) = c * akp + s * std::conj(phase) * akq;
          at(k, q) = -s * phase * akp + c * akq;
          at(p, k) = std::conj(at(k, p));
          at(q, k) = std::conj(at(k, q));
        }
        at(p, p) = app * c * c + 2.0 * r * c * s + aqq * s * s;
        at(q, q) = app * s * s - 2.0 * r * c * s + aqq * c * c;
        at(p, q) = 0.0;
        at(q, p) = 0.0;

        if (v) {
          for (std::size_t k = 0; k < n; ++k) {
            const cplx vkp = v[k * n + p];
            const cplx vkq = v[k * n + q];
            v[k * n + p] = c * vkp + s * std::conj(phase) * vkq;
            v[k * n + q] = -s * phase * vkp + c * vkq;
          }
        }
      }
    }
  }

  for (std::size_t p = 0; p < n; ++p) w[p] = at(p, p).real();

  // Ascending order, eigenvector columns permuted alongside.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::size_t m = i;
    for (std::size_t j = i + 1; j < n; ++j)
      if (w[j] < w[m]) m = j;
    if (m != i) {
      std::swap(w[i], w[m]);
      if (v)
        for (std::size_t k = 0; k < n; ++k) std::swap(v[k * n + i], v[k * n + m]);
    }
  }
}

std::vector<double> hermitian_eigenvalues(std::size_t n, std::vector<cplx> a) {
  std::vector<double> w(n);
  jacobi_hermitian(n, a.data(), w.data(), nullptr);
  return w;
}

void hermitian_sqrt(std::size_t n, const cplx* a, cplx* b, double clamp_tol) {
  std::vector<cplx> work(a, a + n * n);
  std::vector<double> w(n);
  std::vector<cplx> v(n * n);
  jacobi_hermitian(n, work.data(), w.data(), v.data());
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] < -clamp_tol)
      throw std::invalid_argument("hermitian_sqrt: matrix is not positive semidefinite");
    // Eigenvalues below the noise floor are exact zeros of rank-deficient
    // input; keeping them would smear sqrt(noise) over the null space.
    if (w[i] < clamp_tol) w[i] = 0.0;
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        s += v[r * n + k] * std::sqrt(w[k]) * std::conj(v[c * n + k]);
      b[r * n + c] = s;
    }
  }
}

}  // namespace qcorr
