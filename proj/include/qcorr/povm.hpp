// povm.hpp
// Local two-outcome POVMs {A1, A2} with A1†A1 + A2†A2 = I, written in
// singular-value form A1 = U1 diag(alpha, beta) V and
// A2 = U2 diag(sqrt(1-alpha^2), sqrt(1-beta^2)) V. Post-measurement
// branches, measure deltas, component splits, grid scans and multi-level
// sequences all live here.

#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qcorr/measures.hpp"
#include "qcorr/state.hpp"

namespace qcorr {

struct TwoOutcomePovm {
  double alpha = 1.0;
  double beta = 1.0;
  std::size_t target = 0;
  Mat2 pre_unitary = Mat2::identity();     // V
  Mat2 post_unitary_1 = Mat2::identity();  // U1
  Mat2 post_unitary_2 = Mat2::identity();  // U2

  Mat2 branch_operator(int branch) const;
  bool is_diagonal(double tol = 1e-12) const;
  // A1†A1 + A2†A2 = I check.
  bool is_complete(double tol = 1e-12) const;
};

TwoOutcomePovm make_diag_povm(double alpha, double beta, std::size_t target);
TwoOutcomePovm make_povm(double alpha, double beta, std::size_t target, const Mat2& pre_unitary,
                         const Mat2& post_unitary_1, const Mat2& post_unitary_2);

// One post-measurement branch. A branch whose probability underflows is
// flagged degenerate; its state is the unnormalized (numerically zero)
// vector and must not be consumed.
struct PovmOutcome {
  int branch = 0;
  double probability = 0.0;
  PureState state;
  bool degenerate = false;
};

std::pair<PovmOutcome, PovmOutcome> apply_povm(const PureState& state,
                                               const TwoOutcomePovm& povm);

using MeasureFn = std::function<double(const PureState&)>;

struct MeasureFunctional {
  std::string id;
  MeasureFn fn;
};

// mu(Psi) - p1 mu(Phi1) - p2 mu(Phi2); degenerate branches contribute 0.
double delta_measure(const PureState& state, const TwoOutcomePovm& povm, const MeasureFn& measure);

// Split of delta(M) by behavior under a POVM on the target qubit t:
//   xi1 = M_t,
//   xi2 = sum of the other linear entropies - 2 * (concurrences not touching t),
//   xi3 = -(concurrences touching t).
// xi1 + xi2 + xi3 = M, so the deltas add up to delta(M).
struct DeltaComponents {
  double xi1 = 0.0;
  double xi2 = 0.0;
  double xi3 = 0.0;

  double total() const { return xi1 + xi2 + xi3; }
};
DeltaComponents delta_components(const PureState& state, const TwoOutcomePovm& povm);

// Determinant-one SLOCC scaling of the target's residual correlation under a
// diagonal POVM: M_t(Phi1) = (alpha beta / p1)^2 M_t(Psi) and
// M_t(Phi2) = (sqrt(1-alpha^2) sqrt(1-beta^2) / p2)^2 M_t(Psi). Returns the
// larger deviation over the non-degenerate branches.
double slocc_scaling_check(const PureState& state, const TwoOutcomePovm& povm);

struct AxisRange {
  double start = 0.0;
  double end = 0.0;
  double step = 1.0;

  void validate() const;
  std::size_t count() const;
  double value(std::size_t i) const { return start + static_cast<double>(i) * step; }
};

struct GridSpec {
  AxisRange alpha{0.05, 0.95, 0.01};
  AxisRange beta{0.05, 0.95, 0.01};
};

struct DeltaRecord {
  double alpha = 0.0;
  double beta = 0.0;
  std::string measure_id;
  double delta = 0.0;
};

// Evaluates delta(measure) for every (alpha, beta) grid cell with a diagonal
// POVM on `target`. Cells are independent and may be evaluated on several
// threads; records always come back in alpha-major order. threads = 0 picks
// the hardware count.
std::vector<DeltaRecord> scan_grid(const PureState& state, std::size_t target,
                                   const GridSpec& grid, const MeasureFunctional& measure,
                                   unsigned threads = 0);

struct SequenceStep {
  TwoOutcomePovm povm;
  int branch = 1;
};

struct SequenceResult {
  PureState state;
  double probability = 1.0;
};

// Applies the POVMs in order, following the chosen branch each time; the
// returned probability is the product of the branch probabilities.
SequenceResult apply_sequence(const PureState& state, const std::vector<SequenceStep>& steps);

}  // namespace qcorr
