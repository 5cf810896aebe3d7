#include "qcorr/povm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace qcorr {

namespace {

constexpr double kDegenerateProbability = 1e-12;

void require_alpha_beta(double alpha, double beta) {
  if (!(alpha >= 0.0 && alpha <= 1.0) || !(beta >= 0.0 && beta <= 1.0))
    throw std::invalid_argument("POVM parameters must lie in [0, 1]");
}

}  // namespace

Mat2 TwoOutcomePovm::branch_operator(int branch) const {
  if (branch == 1) return post_unitary_1 * Mat2::diagonal(alpha, beta) * pre_unitary;
  if (branch == 2)
    return post_unitary_2 *
           Mat2::diagonal(std::sqrt(1.0 - alpha * alpha), std::sqrt(1.0 - beta * beta)) *
           pre_unitary;
  throw std::out_of_range("branch_operator: branch is 1 or 2");
}

bool TwoOutcomePovm::is_diagonal(double tol) const {
  return pre_unitary.is_identity(tol) && post_unitary_1.is_identity(tol) &&
         post_unitary_2.is_identity(tol);
}

bool TwoOutcomePovm::is_complete(double tol) const {
  const Mat2 a1 = branch_operator(1);
  const Mat2 a2 = branch_operator(2);
  Mat2 g;
  const Mat2 g1 = a1.adjoint() * a1;
  const Mat2 g2 = a2.adjoint() * a2;
  for (std::size_t i = 0; i < 4; ++i) g.a[i] = g1.a[i] + g2.a[i];
  return g.is_identity(tol);
}

TwoOutcomePovm make_diag_povm(double alpha, double beta, std::size_t target) {
  require_alpha_beta(alpha, beta);
  return {alpha, beta, target, Mat2::identity(), Mat2::identity(), Mat2::identity()};
}

TwoOutcomePovm make_povm(double alpha, double beta, std::size_t target, const Mat2& pre_unitary,
                         const Mat2& post_unitary_1, const Mat2& post_unitary_2) {
  require_alpha_beta(alpha, beta);
  if (!pre_unitary.is_unitary() || !post_unitary_1.is_unitary() || !post_unitary_2.is_unitary())
    throw std::invalid_argument("make_povm: operators must be unitary");
  return {alpha, beta, target, pre_unitary, post_unitary_1, post_unitary_2};
}

std::pair<PovmOutcome, PovmOutcome> apply_povm(const PureState& state,
                                               const TwoOutcomePovm& povm) {
  if (povm.target >= state.n_qubits()) throw std::out_of_range("apply_povm: bad target qubit");
  if (!state.is_normalized()) throw std::invalid_argument("apply_povm: state is not normalized");

  auto make_outcome = [&](int branch) {
    PureState raw = apply_local_operator(state, povm.branch_operator(branch), povm.target);
    const double p = raw.norm_squared();
    if (p < kDegenerateProbability) return PovmOutcome{branch, p, std::move(raw), true};
    std::vector<cplx> amps = raw.amplitudes();
    const double inv = 1.0 / std::sqrt(p);
    for (cplx& a : amps) a *= inv;
    return PovmOutcome{branch, p, PureState(state.n_qubits(), std::move(amps)), false};
  };

  PovmOutcome o1 = make_outcome(1);
  PovmOutcome o2 = make_outcome(2);
  if (std::abs(o1.probability + o2.probability - 1.0) > 1e-12)
    throw std::runtime_error("apply_povm: branch probabilities do not sum to 1");
  return {std::move(o1), std::move(o2)};
}

double delta_measure(const PureState& state, const TwoOutcomePovm& povm,
                     const MeasureFn& measure) {
  const auto [o1, o2] = apply_povm(state, povm);
  double delta = measure(state);
  if (!o1.degenerate) delta -= o1.probability * measure(o1.state);
  if (!o2.degenerate) delta -= o2.probability * measure(o2.state);
  return delta;
}

namespace {

DeltaComponents components_of(const PureState& state, std::size_t pivot) {
  const CorrelationProfile p = correlation_profile(state);
  DeltaComponents c;
  double cross = 0.0;  // concurrences touching the pivot
  for (std::size_t l = 0; l < 4; ++l) cross += p.c2[pivot][l];
  c.xi1 = p.tau[pivot] - cross;
  c.xi3 = -cross;
  for (std::size_t k = 0; k < 4; ++k) {
    if (k == pivot) continue;
    c.xi2 += p.tau[k];
    for (std::size_t l = k + 1; l < 4; ++l)
      if (l != pivot) c.xi2 -= 2.0 * p.c2[k][l];
  }
  return c;
}

}  // namespace

DeltaComponents delta_components(const PureState& state, const TwoOutcomePovm& povm) {
  const std::size_t pivot = povm.target;
  const auto [o1, o2] = apply_povm(state, povm);
  DeltaComponents d = components_of(state, pivot);
  for (const PovmOutcome* o : {&o1, &o2}) {
    if (o->degenerate) continue;
    const DeltaComponents b = components_of(o->state, pivot);
    d.xi1 -= o->probability * b.xi1;
    d.xi2 -= o->probability * b.xi2;
    d.xi3 -= o->probability * b.xi3;
  }
  return d;
}

double slocc_scaling_check(const PureState& state, const TwoOutcomePovm& povm) {
  if (!povm.is_diagonal())
    throw std::invalid_argument("slocc_scaling_check: diagonal POVM required");
  const double m_psi = residual_correlation(state, povm.target);
  const auto [o1, o2] = apply_povm(state, povm);

  double residual = 0.0;
  const double det1 = povm.alpha * povm.beta;
  const double det2 = std::sqrt(1.0 - povm.alpha * povm.alpha) *
                      std::sqrt(1.0 - povm.beta * povm.beta);
  for (const auto& [o, det] : {std::pair{&o1, det1}, std::pair{&o2, det2}}) {
    if (o->degenerate) continue;
    const double scale = (det * det) / (o->probability * o->probability);
    residual = std::max(residual,
                        std::abs(residual_correlation(o->state, povm.target) - scale * m_psi));
  }
  return residual;
}

void AxisRange::validate() const {
  if (!(step > 0.0)) throw std::invalid_argument("AxisRange: step must be positive");
  if (start > end) throw std::invalid_argument("AxisRange: start must not exceed end");
}

std::size_t AxisRange::count() const {
  validate();
  // Inclusive endpoints; tolerate one ulp of drift in (end-start)/step.
  return static_cast<std::size_t>(std::floor((end - start) / step + 1e-9)) + 1;
}

std::vector<DeltaRecord> scan_grid(const PureState& state, std::size_t target,
                                   const GridSpec& grid, const MeasureFunctional& measure,
                                   unsigned threads) {
  grid.alpha.validate();
  grid.beta.validate();
  const std::size_t na = grid.alpha.count();
  const std::size_t nb = grid.beta.count();
  const double base = measure.fn(state);

  std::vector<DeltaRecord> records(na * nb);
  auto run_cell = [&](std::size_t idx) {
    const std::size_t ia = idx / nb;
    const std::size_t ib = idx % nb;
    const double alpha = grid.alpha.value(ia);
    const double beta = grid.beta.value(ib);
    const auto [o1, o2] = apply_povm(state, make_diag_povm(alpha, beta, target));
    double delta = base;
    if (!o1.degenerate) delta -= o1.probability * measure.fn(o1.state);
    if (!o2.degenerate) delta -= o2.probability * measure.fn(o2.state);
    records[idx] = {alpha, beta, measure.id, delta};
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(na * nb));
  if (threads <= 1) {
    for (std::size_t idx = 0; idx < records.size(); ++idx) run_cell(idx);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t idx = t; idx < records.size(); idx += threads) run_cell(idx);
      });
    }
    for (std::thread& th : pool) th.join();
  }
  return records;
}

SequenceResult apply_sequence(const PureState& state, const std::vector<SequenceStep>& steps) {
  SequenceResult result{state, 1.0};
  for (const SequenceStep& step : steps) {
    if (step.branch != 1 && step.branch != 2)
      throw std::out_of_range("apply_sequence: branch is 1 or 2");
    auto [o1, o2] = apply_povm(result.state, step.povm);
    PovmOutcome& chosen = (step.branch == 1) ? o1 : o2;
    if (chosen.degenerate)
      throw std::runtime_error("apply_sequence: chosen branch has zero probability");
    result.probability *= chosen.probability;
    result.state = std::move(chosen.state);
  }
  return result;
}

}  // namespace qcorr
