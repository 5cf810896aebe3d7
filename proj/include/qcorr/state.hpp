// state.hpp
// N-qubit pure states, reduced density matrices, and the basic operations
// every correlation measure is built from.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "qcorr/linalg.hpp"

namespace qcorr {

inline constexpr std::size_t kMinQubits = 2;
inline constexpr std::size_t kMaxQubits = 14;

// Ordered list of qubit indices (non-empty, no duplicates) naming a
// subsystem to keep under a partial trace.
class SubsystemSet {
 public:
  SubsystemSet(std::initializer_list<std::size_t> qubits);
  explicit SubsystemSet(std::vector<std::size_t> qubits);

  const std::vector<std::size_t>& qubits() const { return qubits_; }
  std::size_t size() const { return qubits_.size(); }
  void validate_for(std::size_t n_qubits) const;

 private:
  std::vector<std::size_t> qubits_;
};

// Reduced density matrix (dim x dim, row major).
class DensityMatrix {
 public:
  DensityMatrix(std::size_t dim, std::vector<cplx> entries);

  std::size_t dim() const { return dim_; }
  const std::vector<cplx>& entries() const { return entries_; }
  cplx operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  cplx trace() const;
  // tr(rho^2); real for Hermitian input.
  double purity() const;
  bool is_hermitian(double tol = 1e-12) const;

  // Full invariant check: Hermitian, unit trace, eigenvalues >= -psd_tol.
  // Throws std::invalid_argument on the first violation.
  void validate(double herm_tol = 1e-12, double trace_tol = 1e-12, double psd_tol = 1e-12) const;

 private:
  std::size_t dim_;
  std::vector<cplx> entries_;
};

// Dense amplitude vector over n qubits, lexicographic basis order. Qubit 0
// (label 'A') is the leftmost ket character and therefore the most
// significant bit of the basis index: |1000> sits at index 8 for n = 4.
//
// The vector is not forced to unit norm: apply_local_operator legitimately
// produces sub-normalized branches. All measures require unit norm and say
// so in their preconditions.
class PureState {
 public:
  PureState(std::size_t n_qubits, std::vector<cplx> amplitudes);

  static PureState basis_state(std::size_t n_qubits, std::size_t index);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<cplx>& amplitudes() const { return amplitudes_; }
  cplx amplitude(std::size_t index) const { return amplitudes_[index]; }

  double norm_squared() const;
  double norm() const;
  bool is_normalized(double tol = 1e-9) const;

  // Default qubit names A, B, C, ...
  char label(std::size_t qubit) const { return static_cast<char>('A' + qubit); }

  // Value of `qubit` in basis index `index` under the MSB-first convention.
  bool bit(std::size_t index, std::size_t qubit) const {
    return (index >> (n_qubits_ - 1 - qubit)) & 1u;
  }

 private:
  std::size_t n_qubits_;
  std::vector<cplx> amplitudes_;
};

// Unit-norm copy. Throws std::domain_error("null state") on a zero vector.
PureState normalize(const PureState& state);

// rho over `keep` (at most 3 qubits), index bits ordered as listed in
// `keep` with the first entry most significant.
DensityMatrix partial_trace(const PureState& state, const SubsystemSet& keep);

// (op on `qubit`) tensor identity elsewhere; result is left unnormalized.
PureState apply_local_operator(const PureState& state, const Mat2& op, std::size_t qubit);

// Pauli expectation values (x, y, z) of a single-qubit density matrix.
std::array<double, 3> bloch_vector(const DensityMatrix& rho);

// Haar-distributed unit vector, deterministic per seed.
PureState random_pure_state(std::size_t n_qubits, std::uint64_t seed);
PureState random_pure_state(std::size_t n_qubits, std::mt19937_64& rng);

// Relabeling: qubit k of the result is qubit source_of[k] of the input.
PureState permute_qubits(const PureState& state, const std::vector<std::size_t>& source_of);

cplx inner_product(const PureState& lhs, const PureState& rhs);

}  // namespace qcorr
