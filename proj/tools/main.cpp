// qcorr command-line tool: correlation reports, POVM branch deltas,
// monotonicity grid scans, E_ms surfaces, and the built-in reference checks.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qcorr/io.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/povm.hpp"
#include "qcorr/qcr.hpp"
#include "qcorr/reference_checks.hpp"

namespace {

using namespace qcorr;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitMismatch = 2;

std::size_t parse_qubit(const std::string& text) {
  if (text.size() == 1 && text[0] >= 'A' && text[0] <= 'N')
    return static_cast<std::size_t>(text[0] - 'A');
  if (text.size() == 1 && text[0] >= 'a' && text[0] <= 'n')
    return static_cast<std::size_t>(text[0] - 'a');
  return static_cast<std::size_t>(std::stoul(text));
}

void add_state_options(CLI::App* cmd, StateSpec& spec) {
  cmd->add_option("--family", spec.family, "family name, optionally name:p1,p2,...");
  cmd->add_option("--params", spec.params, "family parameters p1,p2,...");
  cmd->add_option("--ket", spec.ket, "ket expression, e.g. \"(|0000>+|1111>)/sqrt(2)\"");
  cmd->add_option("--state", spec.file, "state file (JSON)");
}

std::ofstream open_output(const std::string& out_path) {
  const auto path = resolve_output_path(out_path);
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write output file: " + path.string());
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"multipartite quantum-correlation measures for N-qubit pure states"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed recorded in outputs and used by randomized runs")
      ->capture_default_str();

  // measures
  StateSpec measures_spec;
  std::string measures_format = "table";
  auto* measures_cmd = app.add_subcommand("measures", "correlation report for a state");
  add_state_options(measures_cmd, measures_spec);
  measures_cmd->add_option("--format", measures_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  // povm
  StateSpec povm_spec;
  std::string povm_qubit = "A";
  double povm_alpha = 0.5;
  double povm_beta = 0.5;
  std::string povm_measure = "M";
  auto* povm_cmd = app.add_subcommand("povm", "apply one two-outcome POVM and report the delta");
  add_state_options(povm_cmd, povm_spec);
  povm_cmd->add_option("--qubit", povm_qubit, "target qubit (letter or index)");
  povm_cmd->add_option("--alpha", povm_alpha, "first diagonal element")->required();
  povm_cmd->add_option("--beta", povm_beta, "second diagonal element")->required();
  povm_cmd->add_option("--measure", povm_measure,
                       "M, M_A..M_D, ems, t3:<i>@t4=0, t4@t3_1=0");

  // scan
  StateSpec scan_spec;
  std::string scan_qubit = "A";
  std::string scan_measure = "M";
  std::string scan_alpha_range = "0.05:0.95:0.01";
  std::string scan_beta_range = "0.05:0.95:0.01";
  std::string scan_out;
  std::string scan_format = "csv";
  unsigned scan_threads = 0;
  auto* scan_cmd = app.add_subcommand("scan", "delta grid over the POVM parameters");
  add_state_options(scan_cmd, scan_spec);
  scan_cmd->add_option("--qubit", scan_qubit, "target qubit (letter or index)");
  scan_cmd->add_option("--measure", scan_measure, "measure id");
  scan_cmd->add_option("--alpha-range", scan_alpha_range, "start:end:step");
  scan_cmd->add_option("--beta-range", scan_beta_range, "start:end:step");
  scan_cmd->add_option("--out", scan_out, "output file")->required();
  scan_cmd->add_option("--format", scan_format)->check(CLI::IsMember({"csv", "json"}));
  scan_cmd->add_option("--threads", scan_threads, "worker threads (0 = hardware)");

  // surface
  double surface_b = 0.0;
  double surface_c = 0.5;
  std::string surface_a_range = "0:5:0.05";
  std::string surface_d_range = "0:5:0.05";
  std::string surface_out;
  std::string surface_format = "csv";
  auto* surface_cmd = app.add_subcommand("surface", "E_ms over the (a, d) plane of G_abcd");
  surface_cmd->add_option("--b", surface_b, "fixed family parameter b")->capture_default_str();
  surface_cmd->add_option("--c", surface_c, "fixed family parameter c")->capture_default_str();
  surface_cmd->add_option("--a-range", surface_a_range, "start:end:step");
  surface_cmd->add_option("--d-range", surface_d_range, "start:end:step");
  surface_cmd->add_option("--out", surface_out, "output file")->required();
  surface_cmd->add_option("--format", surface_format)->check(CLI::IsMember({"csv", "json"}));

  // repro-appendix
  double repro_tol = 1e-4;
  double repro_exact_tol = 1e-12;
  auto* repro_cmd =
      app.add_subcommand("repro-appendix", "recompute the bundled reference tables");
  repro_cmd->add_option("--tol", repro_tol, "tolerance for printed reference values")
      ->capture_default_str();
  repro_cmd->add_option("--exact-tol", repro_exact_tol, "tolerance for exact entries")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  if (measures_cmd->parsed()) {
    const PureState state = resolve_state(measures_spec);
    const GeneralReport report = general_report(state);
    if (measures_format == "json")
      std::cout << render_report_json(report, seed);
    else
      std::cout << "# state: " << describe_state(measures_spec) << "\n"
                << render_report_table(report, seed);
    return kExitOk;
  }

  if (povm_cmd->parsed()) {
    const PureState state = resolve_state(povm_spec);
    const TwoOutcomePovm povm =
        make_diag_povm(povm_alpha, povm_beta, parse_qubit(povm_qubit));
    const MeasureFunctional measure = measure_by_id(povm_measure);
    const auto [o1, o2] = apply_povm(state, povm);
    const double mu_psi = measure.fn(state);
    double delta = mu_psi;
    std::printf("# seed=%llu\n", static_cast<unsigned long long>(seed));
    std::printf("p1 = %.10g\np2 = %.10g\n", o1.probability, o2.probability);
    std::printf("%s(psi) = %.10g\n", measure.id.c_str(), mu_psi);
    for (const PovmOutcome* o : {&o1, &o2}) {
      if (o->degenerate) {
        std::printf("%s(phi%d) undefined (degenerate branch)\n", measure.id.c_str(), o->branch);
        continue;
      }
      const double value = measure.fn(o->state);
      delta -= o->probability * value;
      std::printf("%s(phi%d) = %.10g\n", measure.id.c_str(), o->branch, value);
    }
    std::printf("delta = %.10g\n", delta);
    return kExitOk;
  }

  if (scan_cmd->parsed()) {
    const PureState state = resolve_state(scan_spec);
    GridSpec grid{parse_axis_range(scan_alpha_range), parse_axis_range(scan_beta_range)};
    const auto records = scan_grid(state, parse_qubit(scan_qubit), grid,
                                   measure_by_id(scan_measure), scan_threads);
    auto out = open_output(scan_out);
    if (scan_format == "json")
      out << render_scan_json(records, seed);
    else
      write_scan_csv(out, records, seed);
    const ScanSummary s = summarize_scan(records);
    std::printf("min delta = %.10g at alpha=%.10g beta=%.10g (%zu cells)\n", s.min_delta,
                s.argmin_alpha, s.argmin_beta, records.size());
    return kExitOk;
  }

  if (surface_cmd->parsed()) {
    const auto cells = gabcd_surface(surface_b, surface_c, parse_axis_range(surface_a_range),
                                     parse_axis_range(surface_d_range));
    auto out = open_output(surface_out);
    if (surface_format == "json")
      out << render_surface_json(cells, seed);
    else
      write_surface_csv(out, cells, seed);
    std::printf("%zu cells written\n", cells.size());
    return kExitOk;
  }

  if (repro_cmd->parsed()) {
    std::printf("# seed=%llu\n", static_cast<unsigned long long>(seed));
    const CheckReport report = run_reference_checks(repro_tol, repro_exact_tol);
    std::cout << render_check_table(report);
    if (!report.all_ok()) {
      std::cout << report.failures().size() << " entries out of tolerance\n";
      return kExitMismatch;
    }
    std::cout << "all " << report.entries.size() << " entries within tolerance\n";
    return kExitOk;
  }

  return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
