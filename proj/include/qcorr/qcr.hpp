// qcr.hpp
// The four-qubit correlation-decomposition linear system. Each residual
// correlation splits as M_k = t4 + sum of the three-qubit terms t3^(i) whose
// subsystem contains k, where t3^(i) belongs to the triple omitting qubit
// i-1 (t3^(1) -> BCD, ..., t3^(4) -> ABC). Four equations, five unknowns:
// one unknown gets pinned, the rest are solved in closed form.

#pragma once

#include <array>
#include <cstddef>

#include "qcorr/state.hpp"

namespace qcorr {

inline constexpr double kFeasibilityFloor = -1e-9;

// Right-hand sides (the four residual correlations) of the fixed 4x5 system.
struct QcrSystem {
  std::array<double, 4> m{};

  double m_total() const { return m[0] + m[1] + m[2] + m[3]; }

  // Coefficient of unknown `col` (0 = t4, 1..4 = t3^(col)) in equation `row`.
  static double coefficient(std::size_t row, std::size_t col);
};

// Which unknown is held fixed, and at what value.
struct Pin {
  std::size_t column = 0;  // 0 = t4, 1..4 = t3^(column)
  double value = 0.0;

  static Pin t4(double v) { return {0, v}; }
  static Pin t3(std::size_t subsystem, double v);  // subsystem in 1..4
};

struct CorrelationSplit {
  double t4 = 0.0;
  std::array<double, 4> t3{};  // t3[i] = t3^(i+1)
  Pin pinned{};
  bool feasible = false;  // all five components >= -1e-9

  double t3_sum() const { return t3[0] + t3[1] + t3[2] + t3[3]; }
};

QcrSystem build_system(const PureState& state);

// Unique solution of the system with one unknown pinned. The remaining 4x4
// system always has full rank, so this never fails.
CorrelationSplit solve_pinned(const QcrSystem& system, const Pin& pin);

// Per-equation residuals |t4 + sum_i t3^(i) - t3^(k+1) - M_k|.
std::array<double, 4> equation_residuals(const QcrSystem& system, const CorrelationSplit& split);

// For states of the form a|0000> + b|0101> + c|1000> + e|1110> the system
// forces t3^(1) = -t4/3. Returns t3^(1) + t4/3 computed from the residual
// correlations, which reduces to (M_B + M_C + M_D - 2 M_A) / 3 and is pin
// independent; zero up to rounding when the relation holds.
double phi_family_relation_check(cplx a, cplx b, cplx c, cplx e);

}  // namespace qcorr
