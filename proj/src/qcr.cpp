#include "qcorr/qcr.hpp"

#include <cmath>
#include <stdexcept>

#include "qcorr/measures.hpp"

namespace qcorr {

double QcrSystem::coefficient(std::size_t row, std::size_t col) {
  if (row >= 4 || col >= 5) throw std::out_of_range("QcrSystem::coefficient");
  if (col == 0) return 1.0;              // t4 appears in every equation
  return (col - 1 == row) ? 0.0 : 1.0;   // t3^(k+1) is absent from equation k
}

Pin Pin::t3(std::size_t subsystem, double v) {
  if (subsystem < 1 || subsystem > 4) throw std::out_of_range("Pin::t3: subsystem in 1..4");
  return {subsystem, v};
}

QcrSystem build_system(const PureState& state) {
  return {measure_report(state).m};
}

CorrelationSplit solve_pinned(const QcrSystem& system, const Pin& pin) {
  if (pin.column > 4) throw std::out_of_range("solve_pinned: bad pin column");
  const double m_total = system.m_total();

  CorrelationSplit split;
  split.pinned = pin;
  if (pin.column == 0) {
    // t3^(k) = (M - t4)/3 - M_k
    split.t4 = pin.value;
    for (std::size_t k = 0; k < 4; ++k)
      split.t3[k] = (m_total - pin.value) / 3.0 - system.m[k];
  } else {
    // Pinning t3^(j) = w gives t4 = M - 3 M_j - 3w and t3^(k) = M_j + w - M_k.
    const std::size_t j = pin.column - 1;
    split.t4 = m_total - 3.0 * system.m[j] - 3.0 * pin.value;
    for (std::size_t k = 0; k < 4; ++k) split.t3[k] = system.m[j] + pin.value - system.m[k];
    split.t3[j] = pin.value;
  }

  split.feasible = split.t4 >= kFeasibilityFloor;
  for (double x : split.t3) split.feasible = split.feasible && x >= kFeasibilityFloor;
  return split;
}

std::array<double, 4> equation_residuals(const QcrSystem& system, const CorrelationSplit& split) {
  std::array<double, 4> res{};
  for (std::size_t k = 0; k < 4; ++k)
    res[k] = std::abs(split.t4 + split.t3_sum() - split.t3[k] - system.m[k]);
  return res;
}

double phi_family_relation_check(cplx a, cplx b, cplx c, cplx e) {
  std::vector<cplx> amps(16, 0.0);
  amps[0b0000] = a;
  amps[0b0101] = b;
  amps[0b1000] = c;
  amps[0b1110] = e;
  const QcrSystem sys = build_system(normalize(PureState(4, std::move(amps))));
  return (sys.m[1] + sys.m[2] + sys.m[3] - 2.0 * sys.m[0]) / 3.0;
}

}  // namespace qcorr
