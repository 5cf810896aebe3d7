// measures.hpp
// Scalar correlation and entanglement quantities: linear entropy, Wootters
// concurrence, the pure-state 3-tangle, per-qubit residual correlations and
// their sum, and the per-state report that bundles them.

#pragma once

#include <array>

#include "qcorr/state.hpp"

namespace qcorr {

// All per-state scalars for a four-qubit pure state. tau[k] + s2[k] = 1 is
// asserted at build time, so a report never carries an inconsistent pair.
struct MeasureReport {
  std::array<double, 4> tau{};                 // linear entropies tau_k
  std::array<double, 4> s2{};                  // squared Bloch lengths S_k^2
  std::array<std::array<double, 4>, 4> c2{};   // squared concurrences, symmetric, zero diagonal
  std::array<double, 4> m{};                   // residual correlations M_k
  double m_total = 0.0;                        // M = sum_k M_k
  double e_ms = 0.0;                           // M / 4

  double qcr_residual(std::size_t k) const { return tau[k] + s2[k] - 1.0; }
};

// Linear entropies and pairwise squared concurrences of a 4-qubit state in
// one pass; the building block shared by reports and POVM deltas.
struct CorrelationProfile {
  std::array<double, 4> tau{};
  std::array<std::array<double, 4>, 4> c2{};
};
CorrelationProfile correlation_profile(const PureState& state);

// 2(1 - tr rho^2) for a single-qubit reduced state; in [0, 1].
double linear_entropy(const DensityMatrix& rho);

// Wootters concurrence of a two-qubit density matrix. The eigenvalues of
// rho * rho_tilde are obtained as the (provably real, non-negative) spectrum
// of sqrt(rho) * rho_tilde * sqrt(rho) via the Jacobi eigensolver.
double concurrence(const DensityMatrix& rho);
double concurrence_squared(const DensityMatrix& rho);

// Pure-state 3-tangle tau_A(BC) - C_AB^2 - C_AC^2; pivot independent.
double tangle3_pure(const PureState& state);

// Residual correlation M_k = tau_k - sum_l C_kl^2.
double residual_correlation(const PureState& state, std::size_t qubit);

// Full report for a normalized four-qubit state.
MeasureReport measure_report(const PureState& state);

// Sum of all residual correlations for 2..14 qubits, plus the per-qubit
// average M_N / N.
struct ResidualSum {
  double m_n = 0.0;
  double per_qubit = 0.0;
};
ResidualSum residual_sum_n(const PureState& state);

}  // namespace qcorr
