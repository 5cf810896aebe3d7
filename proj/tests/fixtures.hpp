// fixtures.hpp
// Shared reference states for the test suites.

#pragma once

#include <cmath>
#include <vector>

#include "qcorr/state.hpp"

namespace fixtures {

using qcorr::cplx;
using qcorr::PureState;

// (|0000> + |0011> + |0101> + |0110> + |1010> + |1111>) / sqrt(6)
inline PureState six_term_state() {
  std::vector<cplx> amps(16, 0.0);
  const double w = 1.0 / std::sqrt(6.0);
  for (std::size_t i : {0b0000u, 0b0011u, 0b0101u, 0b0110u, 0b1010u, 0b1111u}) amps[i] = w;
  return PureState(4, std::move(amps));
}

// (3|0000> + 3|1111> - |0011> - |1100> + 3|0101> + 3|1010> + |0110> + |1001>)
// / (2 sqrt(10)) -- written here with the raw +-3/+-1 coefficients.
inline PureState symmetric_eight_term_state_raw() {
  std::vector<cplx> amps(16, 0.0);
  amps[0b0000] = 3.0;
  amps[0b1111] = 3.0;
  amps[0b0011] = -1.0;
  amps[0b1100] = -1.0;
  amps[0b0101] = 3.0;
  amps[0b1010] = 3.0;
  amps[0b0110] = 1.0;
  amps[0b1001] = 1.0;
  return PureState(4, std::move(amps));
}

// (|0000> + |0101> + |1000> + |1110>) / 2
inline PureState four_term_state() {
  std::vector<cplx> amps(16, 0.0);
  for (std::size_t i : {0b0000u, 0b0101u, 0b1000u, 0b1110u}) amps[i] = 0.5;
  return PureState(4, std::move(amps));
}

// (|0000> + |1011> + |1101> + |1110>) / 2
inline PureState ghz_like_w_mix_state() {
  std::vector<cplx> amps(16, 0.0);
  for (std::size_t i : {0b0000u, 0b1011u, 0b1101u, 0b1110u}) amps[i] = 0.5;
  return PureState(4, std::move(amps));
}

inline PureState ghz(std::size_t n) {
  std::vector<cplx> amps(std::size_t{1} << n, 0.0);
  amps.front() = amps.back() = 1.0 / std::sqrt(2.0);
  return PureState(n, std::move(amps));
}

}  // namespace fixtures
