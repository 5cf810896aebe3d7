#include "qcorr/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcorr {

SubsystemSet::SubsystemSet(std::initializer_list<std::size_t> qubits)
    : SubsystemSet(std::vector<std::size_t>(qubits)) {}

SubsystemSet::SubsystemSet(std::vector<std::size_t> qubits) : qubits_(std::move(qubits)) {
  if (qubits_.empty()) throw std::invalid_argument("SubsystemSet: empty");
  for (std::size_t i = 0; i < qubits_.size(); ++i)
    for (std::size_t j = i + 1; j < qubits_.size(); ++j)
      if (qubits_[i] == qubits_[j]) throw std::invalid_argument("SubsystemSet: duplicate qubit");
}

void SubsystemSet::validate_for(std::size_t n_qubits) const {
  for (std::size_t q : qubits_)
    if (q >= n_qubits) throw std::out_of_range("SubsystemSet: qubit index out of range");
}

DensityMatrix::DensityMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0 || entries_.size() != dim_ * dim_)
    throw std::invalid_argument("DensityMatrix: entry count does not match dimension");
}

cplx DensityMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double DensityMatrix::purity() const {
  // tr(rho^2) = sum |rho_ij|^2 when rho is Hermitian.
  double s = 0.0;
  for (const cplx& e : entries_) s += std::norm(e);
  return s;
}

bool DensityMatrix::is_hermitian(double tol) const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

void DensityMatrix::validate(double herm_tol, double trace_tol, double psd_tol) const {
  if (!is_hermitian(herm_tol)) throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(trace() - 1.0) > trace_tol)
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  const std::vector<double> w = hermitian_eigenvalues(dim_, entries_);
  for (double x : w)
    if (x < -psd_tol) throw std::invalid_argument("DensityMatrix: negative eigenvalue");
}

PureState::PureState(std::size_t n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (n_qubits_ < kMinQubits || n_qubits_ > kMaxQubits)
    throw std::out_of_range("PureState: qubit count out of range [2, 14]");
  if (amplitudes_.size() != (std::size_t{1} << n_qubits_))
    throw std::invalid_argument("PureState: amplitude vector length is not 2^n");
}

PureState PureState::basis_state(std::size_t n_qubits, std::size_t index) {
  std::vector<cplx> amps(std::size_t{1} << n_qubits, 0.0);
  amps.at(index) = 1.0;
  return PureState(n_qubits, std::move(amps));
}

double PureState::norm_squared() const {
  double s = 0.0;
  for (const cplx& a : amplitudes_) s += std::norm(a);
  return s;
}

double PureState::norm() const { return std::sqrt(norm_squared()); }

bool PureState::is_normalized(double tol) const { return std::abs(norm_squared() - 1.0) <= tol; }

PureState normalize(const PureState& state) {
  const double n = state.norm();
  if (n == 0.0 || !std::isfinite(n)) throw std::domain_error("null state");
  std::vector<cplx> amps = state.amplitudes();
  for (cplx& a : amps) a /= n;
  return PureState(state.n_qubits(), std::move(amps));
}

DensityMatrix partial_trace(const PureState& state, const SubsystemSet& keep) {
  keep.validate_for(state.n_qubits());
  if (keep.size() > 3) throw std::invalid_argument("partial_trace: keep at most 3 qubits");

  const std::size_t n = state.n_qubits();
  const std::size_t m = keep.size();
  const std::size_t kept_dim = std::size_t{1} << m;

  // Bit scatter tables: kept pattern r and traced pattern t to a full index.
  std::vector<bool> is_kept(n, false);
  std::vector<std::size_t> kept_shift(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t q = keep.qubits()[i];
    is_kept[q] = true;
    kept_shift[i] = n - 1 - q;  // first listed qubit = MSB of the reduced index
  }
  std::vector<std::size_t> traced_shift;
  traced_shift.reserve(n - m);
  for (std::size_t q = 0; q < n; ++q)
    if (!is_kept[q]) traced_shift.push_back(n - 1 - q);

  const std::size_t traced_dim = std::size_t{1} << traced_shift.size();
  std::vector<std::size_t> kept_base(kept_dim, 0);
  for (std::size_t r = 0; r < kept_dim; ++r)
    for (std::size_t i = 0; i < m; ++i)
      if ((r >> (m - 1 - i)) & 1u) kept_base[r] |= std::size_t{1} << kept_shift[i];

  std::vector<cplx> rho(kept_dim * kept_dim, 0.0);
  std::vector<cplx> sub(kept_dim);
  const std::vector<cplx>& amps = state.amplitudes();
  for (std::size_t t = 0; t < traced_dim; ++t) {
    std::size_t traced_base = 0;
    for (std::size_t i = 0; i < traced_shift.size(); ++i)
      if ((t >> i) & 1u) traced_base |= std::size_t{1} << traced_shift[i];
    for (std::size_t r = 0; r < kept_dim; ++r) sub[r] = amps[kept_base[r] | traced_base];
    for (std::size_t r = 0; r < kept_dim; ++r) {
      const cplx ar = sub[r];
      if (ar == cplx{0.0}) continue;
      for (std::size_t c = 0; c < kept_dim; ++c) rho[r * kept_dim + c] += ar * std::conj(sub[c]);
    }
  }
  return DensityMatrix(kept_dim, std::move(rho));
}

PureState apply_local_operator(const PureState& state, const Mat2& op, std::size_t qubit) {
  if (qubit >= state.n_qubits()) throw std::out_of_range("apply_local_operator: bad qubit index");
  const std::size_t stride = std::size_t{1} << (state.n_qubits() - 1 - qubit);
  std::vector<cplx> amps = state.amplitudes();
  for (std::size_t base = 0; base < amps.size(); ++base) {
    if (base & stride) continue;
    const cplx a0 = amps[base];
    const cplx a1 = amps[base | stride];
    amps[base] = op(0, 0) * a0 + op(0, 1) * a1;
    amps[base | stride] = op(1, 0) * a0 + op(1, 1) * a1;
  }
  return PureState(state.n_qubits(), std::move(amps));
}

std::array<double, 3> bloch_vector(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw std::invalid_argument("bloch_vector: 2x2 matrix required");
  if (!rho.is_hermitian()) throw std::invalid_argument("bloch_vector: not Hermitian");
  return {2.0 * rho(0, 1).real(), 2.0 * rho(1, 0).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

PureState random_pure_state(std::size_t n_qubits, std::mt19937_64& rng) {
  if (n_qubits < kMinQubits || n_qubits > kMaxQubits)
    throw std::out_of_range("random_pure_state: qubit count out of range [2, 14]");
  std::vector<cplx> amps(std::size_t{1} << n_qubits);
  for (cplx& a : amps) a = gaussian_complex(rng);
  return normalize(PureState(n_qubits, std::move(amps)));
}

PureState random_pure_state(std::size_t n_qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_pure_state(n_qubits, rng);
}

PureState permute_qubits(const PureState& state, const std::vector<std::size_t>& source_of) {
  const std::size_t n = state.n_qubits();
  if (source_of.size() != n) throw std::invalid_argument("permute_qubits: permutation size");
  SubsystemSet perm(source_of);  // reuses the duplicate check
  perm.validate_for(n);
  std::vector<cplx> amps(state.dim(), 0.0);
  for (std::size_t i = 0; i < state.dim(); ++i) {
    std::size_t j = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (state.bit(i, source_of[k])) j |= std::size_t{1} << (n - 1 - k);
    amps[j] = state.amplitude(i);
  }
  return PureState(n, std::move(amps));
}

cplx inner_product(const PureState& lhs, const PureState& rhs) {
  if (lhs.n_qubits() != rhs.n_qubits())
    throw std::invalid_argument("inner_product: qubit count mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < lhs.dim(); ++i)
    s += std::conj(lhs.amplitude(i)) * rhs.amplitude(i);
  return s;
}

}  // namespace qcorr
