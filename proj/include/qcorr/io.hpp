// io.hpp
// State-spec resolution, state-file JSON loading, measure registry, report
// rendering, and the CSV/JSON emitters used by the command-line tool.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "qcorr/measures.hpp"
#include "qcorr/povm.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

enum class OutputFormat { csv, json };

struct RunConfig {
  std::uint64_t seed = 0;
  GridSpec grid{};
  double table_tolerance = 1e-4;   // printed reference values
  double exact_tolerance = 1e-12;  // analytically exact reference values
  std::string out_path;
  OutputFormat format = OutputFormat::csv;

  void validate() const;
};

// JSON document {"n_qubits": N, "amplitudes": [[re, im], ...],
// "normalize": bool}; amplitudes in lexicographic order, 2^N entries.
PureState load_state_file(const std::filesystem::path& path);

// One of --family/--params, --ket, or --state resolved to a state.
struct StateSpec {
  std::string family;  // "name" or "name:p1,p2,..."
  std::string params;  // "p1,p2,..." when not folded into family
  std::string ket;
  std::string file;
};
PureState resolve_state(const StateSpec& spec);
std::string describe_state(const StateSpec& spec);

// Correlation report for any qubit count; per_qubit is M_N / N.
struct GeneralReport {
  std::size_t n_qubits = 0;
  std::vector<double> tau;
  std::vector<double> s2;
  std::vector<std::vector<double>> c2;
  std::vector<double> m;
  std::vector<double> qcr_residual;
  double m_total = 0.0;
  double per_qubit = 0.0;
};
GeneralReport general_report(const PureState& state);

std::string render_report_table(const GeneralReport& report, std::uint64_t seed);
std::string render_report_json(const GeneralReport& report, std::uint64_t seed);

// Named measure functionals understood by the CLI: M, M_A..M_D, ems,
// t3:<i>@t4=0 (i in 1..4), t4@t3_1=0.
MeasureFunctional measure_by_id(const std::string& id);

struct ScanSummary {
  double min_delta = 0.0;
  double argmin_alpha = 0.0;
  double argmin_beta = 0.0;
};
ScanSummary summarize_scan(const std::vector<DeltaRecord>& records);

void write_scan_csv(std::ostream& out, const std::vector<DeltaRecord>& records,
                    std::uint64_t seed);
std::string render_scan_json(const std::vector<DeltaRecord>& records, std::uint64_t seed);

// E_ms sweep over the (a, d) plane of the G_abcd family at fixed b, c. Cells
// whose coefficient vector vanishes are emitted as null.
struct SurfaceCell {
  double a = 0.0;
  double d = 0.0;
  double ems = 0.0;
  bool null_cell = false;
};
std::vector<SurfaceCell> gabcd_surface(double b, double c, const AxisRange& a_range,
                                       const AxisRange& d_range);

void write_surface_csv(std::ostream& out, const std::vector<SurfaceCell>& cells,
                       std::uint64_t seed);
std::string render_surface_json(const std::vector<SurfaceCell>& cells, std::uint64_t seed);

// "start:end:step"
AxisRange parse_axis_range(const std::string& text);

// --out paths without a directory component land in $QCORR_OUT_DIR when set.
std::filesystem::path resolve_output_path(const std::string& out_path);

}  // namespace qcorr
