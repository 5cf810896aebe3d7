#include "qcorr/reference_checks.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qcorr/measures.hpp"
#include "qcorr/povm.hpp"
#include "qcorr/qcr.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

bool CheckEntry::ok() const { return std::abs(expected - actual) <= tolerance; }

bool CheckReport::all_ok() const {
  for (const CheckEntry& e : entries)
    if (!e.ok()) return false;
  return true;
}

std::vector<CheckEntry> CheckReport::failures() const {
  std::vector<CheckEntry> out;
  for (const CheckEntry& e : entries)
    if (!e.ok()) out.push_back(e);
  return out;
}

void CheckReport::append(const CheckReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

CheckReport reference_single_level(double print_tol, double exact_tol) {
  CheckReport rep;

  const PureState psi =
      parse_ket_expression("(|0000>+|0011>+|0101>+|0110>+|1010>+|1111>)/sqrt(6)");
  const TwoOutcomePovm povm = make_diag_povm(0.9, 0.2, 0);
  const auto [o1, o2] = apply_povm(psi, povm);
  rep.entries.push_back({"example1.p1", 0.5533, o1.probability, print_tol});
  rep.entries.push_back({"example1.p2", 0.4467, o2.probability, print_tol});

  struct Row {
    const char* name;
    const PureState* state;
    double tau_c, c2_ac, c2_bc, c2_cd, m_c;
    double tol;  // print_tol rows; the input state row is exact
  };
  const double third89 = 8.0 / 9.0;
  const double third49 = 4.0 / 9.0;
  const Row rows[] = {
      {"psi", &psi, third89, third49, 0.0, 0.0, third49, exact_tol},
      {"phi1", &o1.state, 0.9994, 0.04703, 0.0, 0.0, 0.9524, print_tol},
      {"phi2", &o2.state, 0.4867, 0.4063, 0.0, 0.0, 0.08042, print_tol},
  };
  for (const Row& row : rows) {
    const MeasureReport r = measure_report(*row.state);
    const std::string p = std::string("example1.") + row.name;
    rep.entries.push_back({p + ".tau_C", row.tau_c, r.tau[2], row.tol});
    rep.entries.push_back({p + ".C2_AC", row.c2_ac, r.c2[0][2], row.tol});
    rep.entries.push_back({p + ".C2_BC", row.c2_bc, r.c2[1][2], exact_tol});
    rep.entries.push_back({p + ".C2_CD", row.c2_cd, r.c2[2][3], exact_tol});
    rep.entries.push_back({p + ".M_C", row.m_c, r.m[2], row.tol});
  }

  const double delta = delta_measure(
      psi, povm, [](const PureState& s) { return residual_correlation(s, 2); });
  rep.entries.push_back({"example1.delta_M_C", -0.1185, delta, print_tol});
  return rep;
}

CheckReport reference_two_level(double print_tol, double exact_tol) {
  CheckReport rep;

  const PureState psi = make_gabcd(0.5, 1.0, 0.5, 1.0);
  const TwoOutcomePovm level1 = make_diag_povm(0.3, 0.8, 0);
  const auto [o1, o2] = apply_povm(psi, level1);
  rep.entries.push_back({"example2.p1", 0.3650, o1.probability, print_tol});
  rep.entries.push_back({"example2.p2", 0.6350, o2.probability, print_tol});

  const TwoOutcomePovm level2 = make_diag_povm(0.9, 0.2, 2);
  const auto [o11, o12] = apply_povm(o1.state, level2);
  rep.entries.push_back({"example2.p11", 0.1929, o11.probability, print_tol});
  rep.entries.push_back({"example2.p12", 0.8071, o12.probability, print_tol});

  struct Row {
    const char* name;
    const PureState* state;
    double tau_a, c2_ab, c2_ac, c2_ad, m_a;
  };
  const Row rows[] = {
      {"phi1", &o1.state, 0.4324, 0.0, 0.2767, 0.0, 0.1556},
      {"phi11", &o11.state, 0.9960, 0.0, 0.2408, 0.0, 0.7552},
      {"phi12", &o12.state, 0.1565, 0.0, 0.07749, 0.0, 0.07901},
  };
  for (const Row& row : rows) {
    const MeasureReport r = measure_report(*row.state);
    const std::string p = std::string("example2.") + row.name;
    rep.entries.push_back({p + ".tau_A", row.tau_a, r.tau[0], print_tol});
    rep.entries.push_back({p + ".C2_AB", row.c2_ab, r.c2[0][1], exact_tol});
    rep.entries.push_back({p + ".C2_AC", row.c2_ac, r.c2[0][2], print_tol});
    rep.entries.push_back({p + ".C2_AD", row.c2_ad, r.c2[0][3], exact_tol});
    rep.entries.push_back({p + ".M_A", row.m_a, r.m[0], print_tol});
  }

  const double delta = delta_measure(
      o1.state, level2, [](const PureState& s) { return residual_correlation(s, 0); });
  rep.entries.push_back({"example2.delta_M_A", -0.05382, delta, print_tol});
  return rep;
}

CheckReport reference_qcr_split(double print_tol, double exact_tol) {
  CheckReport rep;

  const PureState psi = parse_ket_expression("(|0000>+|0101>+|1000>+|1110>)/2");
  const TwoOutcomePovm povm = make_diag_povm(0.9, 0.4, 1);
  const auto [o1, o2] = apply_povm(psi, povm);
  rep.entries.push_back({"example3.p1", 0.4850, o1.probability, print_tol});
  rep.entries.push_back({"example3.p2", 0.5150, o2.probability, print_tol});

  struct Row {
    const char* name;
    const PureState* state;
    double t3_2, t3_3, t3_4;
  };
  const Row rows[] = {
      {"psi", &psi, 0.2500, 0.2500, 0.2500},
      {"phi1", &o1.state, 0.02721, 0.1377, 0.1377},
      {"phi2", &o2.state, 0.6651, 0.1504, 0.1504},
  };
  for (const Row& row : rows) {
    const CorrelationSplit split = solve_pinned(build_system(*row.state), Pin::t4(0.0));
    const std::string p = std::string("example3.") + row.name;
    rep.entries.push_back({p + ".t4", 0.0, split.t4, exact_tol});
    rep.entries.push_back({p + ".t3_1", 0.0, split.t3[0], exact_tol});
    rep.entries.push_back({p + ".t3_2", row.t3_2, split.t3[1], print_tol});
    rep.entries.push_back({p + ".t3_3", row.t3_3, split.t3[2], print_tol});
    rep.entries.push_back({p + ".t3_4", row.t3_4, split.t3[3], print_tol});
  }

  const double delta = delta_measure(psi, povm, [](const PureState& s) {
    return solve_pinned(build_system(s), Pin::t4(0.0)).t3[1];
  });
  rep.entries.push_back({"example3.delta_t3_2", -0.1057, delta, print_tol});
  return rep;
}

CheckReport run_reference_checks(double print_tol, double exact_tol) {
  CheckReport rep = reference_single_level(print_tol, exact_tol);
  rep.append(reference_two_level(print_tol, exact_tol));
  rep.append(reference_qcr_split(print_tol, exact_tol));
  return rep;
}

std::string render_check_table(const CheckReport& report) {
  std::ostringstream out;
  out << "entry                           expected        actual          |diff|      status\n";
  for (const CheckEntry& e : report.entries) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-30s %14.8g %14.8g %12.3e  %s\n", e.label.c_str(),
                  e.expected, e.actual, std::abs(e.expected - e.actual),
                  e.ok() ? "ok" : "MISMATCH");
    out << line;
  }
  return out.str();
}

}  // namespace qcorr
