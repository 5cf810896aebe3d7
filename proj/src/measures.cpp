#include "qcorr/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcorr {

namespace {

constexpr double kLambdaClamp = 1e-12;  // negative-eigenvalue noise floor
constexpr double kQcrTol = 1e-10;       // tau + S^2 = 1 self-check

void require_state(const PureState& state, std::size_t n_qubits, const char* who) {
  if (state.n_qubits() != n_qubits)
    throw std::invalid_argument(std::string(who) + ": wrong qubit count");
  if (!state.is_normalized())
    throw std::invalid_argument(std::string(who) + ": state is not normalized");
}

void require_density(const DensityMatrix& rho, std::size_t dim, const char* who) {
  if (rho.dim() != dim) throw std::invalid_argument(std::string(who) + ": wrong dimension");
  if (!rho.is_hermitian()) throw std::invalid_argument(std::string(who) + ": not Hermitian");
  if (std::abs(rho.trace() - 1.0) > 1e-12)
    throw std::invalid_argument(std::string(who) + ": trace is not 1");
}

}  // namespace

double linear_entropy(const DensityMatrix& rho) {
  require_density(rho, 2, "linear_entropy");
  return std::clamp(2.0 * (1.0 - rho.purity()), 0.0, 1.0);
}

double concurrence(const DensityMatrix& rho) {
  require_density(rho, 4, "concurrence");

  // rho_tilde = (sy x sy) conj(rho) (sy x sy); the double Pauli-y flip maps
  // basis index j to 3-j with signs (-1, +1, +1, -1).
  static constexpr double ysign[4] = {-1.0, 1.0, 1.0, -1.0};
  cplx tilde[16];
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      tilde[r * 4 + c] = ysign[r] * ysign[c] * std::conj(rho(3 - r, 3 - c));

  cplx root[16];
  hermitian_sqrt(4, rho.entries().data(), root, kLambdaClamp);

  // b = sqrt(rho) * tilde * sqrt(rho), Hermitian PSD with the spectrum of
  // rho * rho_tilde.
  cplx tmp[16];
  cplx b[16];
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < 4; ++k) s += root[r * 4 + k] * tilde[k * 4 + c];
      tmp[r * 4 + c] = s;
    }
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < 4; ++k) s += tmp[r * 4 + k] * root[k * 4 + c];
      b[r * 4 + c] = s;
    }

  double lambda[4];
  jacobi_hermitian(4, b, lambda);
  for (double& x : lambda) {
    if (x < -kLambdaClamp) throw std::invalid_argument("concurrence: invalid spectrum");
    // As in hermitian_sqrt: spectrum entries below the noise floor are exact
    // zeros, and sqrt would amplify their noise to ~1e-8.
    if (x < kLambdaClamp) x = 0.0;
  }
  // lambda is ascending; Wootters difference wants it descending.
  const double c = std::sqrt(lambda[3]) - std::sqrt(lambda[2]) - std::sqrt(lambda[1]) -
                   std::sqrt(lambda[0]);
  return std::clamp(c, 0.0, 1.0);
}

double concurrence_squared(const DensityMatrix& rho) {
  const double c = concurrence(rho);
  return c * c;
}

double tangle3_pure(const PureState& state) {
  require_state(state, 3, "tangle3_pure");
  const double tau_a = linear_entropy(partial_trace(state, {0}));
  const double c2_ab = concurrence_squared(partial_trace(state, {0, 1}));
  const double c2_ac = concurrence_squared(partial_trace(state, {0, 2}));
  return tau_a - c2_ab - c2_ac;
}

double residual_correlation(const PureState& state, std::size_t qubit) {
  if (qubit >= state.n_qubits())
    throw std::out_of_range("residual_correlation: bad qubit index");
  if (!state.is_normalized())
    throw std::invalid_argument("residual_correlation: state is not normalized");
  double m = linear_entropy(partial_trace(state, {qubit}));
  for (std::size_t l = 0; l < state.n_qubits(); ++l) {
    if (l == qubit) continue;
    m -= concurrence_squared(partial_trace(state, {qubit, l}));
  }
  return m;
}

CorrelationProfile correlation_profile(const PureState& state) {
  require_state(state, 4, "correlation_profile");
  CorrelationProfile p;
  for (std::size_t k = 0; k < 4; ++k) p.tau[k] = linear_entropy(partial_trace(state, {k}));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      const double c2 = concurrence_squared(partial_trace(state, {i, j}));
      p.c2[i][j] = c2;
      p.c2[j][i] = c2;
    }
  return p;
}

MeasureReport measure_report(const PureState& state) {
  const CorrelationProfile p = correlation_profile(state);
  MeasureReport r;
  r.tau = p.tau;
  r.c2 = p.c2;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto v = bloch_vector(partial_trace(state, {k}));
    r.s2[k] = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    if (std::abs(r.tau[k] + r.s2[k] - 1.0) > kQcrTol)
      throw std::runtime_error("measure_report: tau + S^2 = 1 violated");
    r.m[k] = r.tau[k] - r.c2[k][0] - r.c2[k][1] - r.c2[k][2] - r.c2[k][3];
  }
  r.m_total = r.m[0] + r.m[1] + r.m[2] + r.m[3];
  r.e_ms = r.m_total / 4.0;
  if (r.e_ms < -kQcrTol || r.e_ms > 1.0 + kQcrTol)
    throw std::runtime_error("measure_report: E_ms outside [0, 1]");
  return r;
}

ResidualSum residual_sum_n(const PureState& state) {
  const std::size_t n = state.n_qubits();
  if (!state.is_normalized())
    throw std::invalid_argument("residual_sum_n: state is not normalized");
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) total += linear_entropy(partial_trace(state, {k}));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      total -= 2.0 * concurrence_squared(partial_trace(state, {i, j}));
  return {total, total / static_cast<double>(n)};
}

}  // namespace qcorr
