// reference_checks.hpp
// Recomputes the bundled worked-example reference values (a single-level
// POVM, a two-level POVM sequence, and pinned correlation splits) and
// compares every entry against its published figure. Printed figures carry
// four significant digits; entries that are exact by construction are held
// to a much tighter tolerance.

#pragma once

#include <string>
#include <vector>

namespace qcorr {

struct CheckEntry {
  std::string label;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;

  bool ok() const;
};

struct CheckReport {
  std::vector<CheckEntry> entries;

  bool all_ok() const;
  std::vector<CheckEntry> failures() const;
  void append(const CheckReport& other);
};

// Example 1: six-term state, POVM (0.9, 0.2) on qubit A, observable M_C.
CheckReport reference_single_level(double print_tol = 1e-4, double exact_tol = 1e-12);

// Example 2: symmetric G_abcd state, POVM (0.3, 0.8) on A then (0.9, 0.2) on
// C along branch 1, observable M_A.
CheckReport reference_two_level(double print_tol = 1e-4, double exact_tol = 1e-12);

// Example 3: four-term state, POVM (0.9, 0.4) on B, correlation split pinned
// at t4 = 0, observable t3^(2).
CheckReport reference_qcr_split(double print_tol = 1e-4, double exact_tol = 1e-12);

CheckReport run_reference_checks(double print_tol = 1e-4, double exact_tol = 1e-12);

std::string render_check_table(const CheckReport& report);

}  // namespace qcorr
