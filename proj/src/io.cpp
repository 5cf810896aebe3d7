#include "qcorr/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qcorr/qcr.hpp"

namespace qcorr {

namespace {

using nlohmann::json;

std::string fmt10(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::vector<double> parse_param_list(const std::string& text) {
  std::vector<double> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    out.push_back(std::stod(token, &used));
    while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
    if (used != token.size()) throw std::invalid_argument("bad parameter list: " + text);
  }
  return out;
}

}  // namespace

void RunConfig::validate() const {
  if (!(table_tolerance > 0.0) || !(exact_tolerance > 0.0))
    throw std::invalid_argument("RunConfig: tolerances must be positive");
  grid.alpha.validate();
  grid.beta.validate();
}

PureState load_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open state file: " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument("state file " + path.string() + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("n_qubits") || !doc.contains("amplitudes"))
    throw std::invalid_argument("state file: need n_qubits and amplitudes");
  if (!doc["n_qubits"].is_number_integer())
    throw std::invalid_argument("state file: n_qubits must be an integer");
  const long long n = doc["n_qubits"].get<long long>();
  if (n < static_cast<long long>(kMinQubits) || n > static_cast<long long>(kMaxQubits))
    throw std::invalid_argument("state file: n_qubits out of range [2, 14]");
  const auto& amps_json = doc["amplitudes"];
  if (!amps_json.is_array() || amps_json.size() != (std::size_t{1} << n))
    throw std::invalid_argument("state file: amplitudes must hold 2^n entries");

  std::vector<cplx> amps;
  amps.reserve(amps_json.size());
  for (const auto& entry : amps_json) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
      throw std::invalid_argument("state file: each amplitude is a [re, im] pair");
    const double re = entry[0].get<double>();
    const double im = entry[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw std::invalid_argument("state file: amplitudes must be finite");
    amps.emplace_back(re, im);
  }

  PureState state(static_cast<std::size_t>(n), std::move(amps));
  const bool do_normalize = doc.value("normalize", true);
  if (do_normalize) return normalize(state);
  if (!state.is_normalized(1e-12))
    throw std::invalid_argument("state file: normalize=false but the vector is not unit norm");
  return state;
}

PureState resolve_state(const StateSpec& spec) {
  const int given = (!spec.family.empty()) + (!spec.ket.empty()) + (!spec.file.empty());
  if (given != 1)
    throw std::invalid_argument("give exactly one of --family, --ket, --state");
  if (!spec.ket.empty()) return parse_ket_expression(spec.ket);
  if (!spec.file.empty()) return load_state_file(spec.file);

  std::string name = spec.family;
  std::string params = spec.params;
  if (const auto colon = name.find(':'); colon != std::string::npos) {
    if (!params.empty())
      throw std::invalid_argument("family parameters given twice");
    params = name.substr(colon + 1);
    name.resize(colon);
  }
  StateFamily family;
  family.name = family_from_name(name);
  if (!params.empty()) family.params = parse_param_list(params);
  return make_family(family);
}

std::string describe_state(const StateSpec& spec) {
  if (!spec.ket.empty()) return "ket " + spec.ket;
  if (!spec.file.empty()) return "file " + spec.file;
  if (spec.params.empty()) return "family " + spec.family;
  return "family " + spec.family + ":" + spec.params;
}

GeneralReport general_report(const PureState& state) {
  const std::size_t n = state.n_qubits();
  GeneralReport r;
  r.n_qubits = n;
  r.tau.resize(n);
  r.s2.resize(n);
  r.m.resize(n);
  r.qcr_residual.resize(n);
  r.c2.assign(n, std::vector<double>(n, 0.0));

  if (n == 4) {
    // Four qubits go through the bundled report and its built-in identity check.
    const MeasureReport rep = measure_report(state);
    for (std::size_t k = 0; k < 4; ++k) {
      r.tau[k] = rep.tau[k];
      r.s2[k] = rep.s2[k];
      r.m[k] = rep.m[k];
      r.qcr_residual[k] = rep.qcr_residual(k);
      for (std::size_t l = 0; l < 4; ++l) r.c2[k][l] = rep.c2[k][l];
    }
    r.m_total = rep.m_total;
    r.per_qubit = rep.e_ms;
    return r;
  }

  for (std::size_t k = 0; k < n; ++k) {
    const DensityMatrix rho = partial_trace(state, {k});
    r.tau[k] = linear_entropy(rho);
    const auto v = bloch_vector(rho);
    r.s2[k] = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    r.qcr_residual[k] = r.tau[k] + r.s2[k] - 1.0;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double c2 = concurrence_squared(partial_trace(state, {i, j}));
      r.c2[i][j] = c2;
      r.c2[j][i] = c2;
    }
  r.m_total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    r.m[k] = r.tau[k];
    for (std::size_t l = 0; l < n; ++l) r.m[k] -= r.c2[k][l];
    r.m_total += r.m[k];
  }
  r.per_qubit = r.m_total / static_cast<double>(n);
  return r;
}

std::string render_report_table(const GeneralReport& report, std::uint64_t seed) {
  std::ostringstream out;
  out << "# seed=" << seed << "\n";
  auto label = [](std::size_t q) { return static_cast<char>('A' + q); };
  out << "qubit        tau          S^2          M_k          tau+S^2-1\n";
  for (std::size_t k = 0; k < report.n_qubits; ++k) {
    char line[128];
    std::snprintf(line, sizeof(line), "%-5c %12.8f %12.8f %12.8f %14.3e\n", label(k),
                  report.tau[k], report.s2[k], report.m[k], report.qcr_residual[k]);
    out << line;
  }
  out << "pair         C^2\n";
  for (std::size_t i = 0; i < report.n_qubits; ++i)
    for (std::size_t j = i + 1; j < report.n_qubits; ++j) {
      char line[64];
      std::snprintf(line, sizeof(line), "%c%c    %12.8f\n", label(i), label(j),
                    report.c2[i][j]);
      out << line;
    }
  char tail[96];
  std::snprintf(tail, sizeof(tail), "M      %12.8f\n%-6s %12.8f\n", report.m_total,
                report.n_qubits == 4 ? "E_ms" : "M/N", report.per_qubit);
  out << tail;
  return out.str();
}

std::string render_report_json(const GeneralReport& report, std::uint64_t seed) {
  json doc;
  doc["seed"] = seed;
  doc["n_qubits"] = report.n_qubits;
  auto label = [](std::size_t q) { return std::string(1, static_cast<char>('A' + q)); };
  for (std::size_t k = 0; k < report.n_qubits; ++k) {
    doc["tau"][label(k)] = report.tau[k];
    doc["s2"][label(k)] = report.s2[k];
    doc["m"][label(k)] = report.m[k];
    doc["qcr_residual"][label(k)] = report.qcr_residual[k];
  }
  for (std::size_t i = 0; i < report.n_qubits; ++i)
    for (std::size_t j = i + 1; j < report.n_qubits; ++j)
      doc["c2"][label(i) + label(j)] = report.c2[i][j];
  doc["M"] = report.m_total;
  doc["M_per_qubit"] = report.per_qubit;
  if (report.n_qubits == 4) doc["E_ms"] = report.per_qubit;
  return doc.dump(2) + "\n";
}

MeasureFunctional measure_by_id(const std::string& id) {
  if (id == "M")
    return {id, [](const PureState& s) { return measure_report(s).m_total; }};
  if (id == "ems")
    return {id, [](const PureState& s) { return measure_report(s).e_ms; }};
  if (id.size() == 3 && id.starts_with("M_") && id[2] >= 'A' && id[2] <= 'D') {
    const std::size_t k = static_cast<std::size_t>(id[2] - 'A');
    return {id, [k](const PureState& s) { return residual_correlation(s, k); }};
  }
  if (id.size() == std::string("t3:i@t4=0").size() && id.starts_with("t3:") &&
      id.ends_with("@t4=0") && id[3] >= '1' && id[3] <= '4') {
    const std::size_t i = static_cast<std::size_t>(id[3] - '1');
    return {id, [i](const PureState& s) {
              return solve_pinned(build_system(s), Pin::t4(0.0)).t3[i];
            }};
  }
  if (id == "t4@t3_1=0")
    return {id, [](const PureState& s) {
              return solve_pinned(build_system(s), Pin::t3(1, 0.0)).t4;
            }};
  throw std::invalid_argument("unknown measure id: " + id);
}

ScanSummary summarize_scan(const std::vector<DeltaRecord>& records) {
  if (records.empty()) throw std::invalid_argument("summarize_scan: no records");
  ScanSummary s{records[0].delta, records[0].alpha, records[0].beta};
  for (const DeltaRecord& r : records)
    if (r.delta < s.min_delta) s = {r.delta, r.alpha, r.beta};
  return s;
}

void write_scan_csv(std::ostream& out, const std::vector<DeltaRecord>& records,
                    std::uint64_t seed) {
  out << "# seed=" << seed << "\n";
  out << "alpha,beta,delta\n";
  for (const DeltaRecord& r : records)
    out << fmt10(r.alpha) << ',' << fmt10(r.beta) << ',' << fmt10(r.delta) << "\n";
}

std::string render_scan_json(const std::vector<DeltaRecord>& records, std::uint64_t seed) {
  json doc;
  doc["seed"] = seed;
  doc["measure"] = records.empty() ? "" : records.front().measure_id;
  json rows = json::array();
  for (const DeltaRecord& r : records)
    rows.push_back({{"alpha", r.alpha}, {"beta", r.beta}, {"delta", r.delta}});
  doc["records"] = std::move(rows);
  const ScanSummary s = summarize_scan(records);
  doc["min_delta"] = s.min_delta;
  doc["argmin"] = {{"alpha", s.argmin_alpha}, {"beta", s.argmin_beta}};
  return doc.dump(2) + "\n";
}

std::vector<SurfaceCell> gabcd_surface(double b, double c, const AxisRange& a_range,
                                       const AxisRange& d_range) {
  a_range.validate();
  d_range.validate();
  std::vector<SurfaceCell> cells;
  cells.reserve(a_range.count() * d_range.count());
  for (std::size_t ia = 0; ia < a_range.count(); ++ia) {
    const double a = a_range.value(ia);
    for (std::size_t id = 0; id < d_range.count(); ++id) {
      const double d = d_range.value(id);
      SurfaceCell cell{a, d, 0.0, false};
      const double scale =
          std::abs(a + d) + std::abs(a - d) + std::abs(b + c) + std::abs(b - c);
      if (scale == 0.0) {
        cell.null_cell = true;
      } else {
        cell.ems = measure_report(make_gabcd(a, b, c, d)).e_ms;
      }
      cells.push_back(cell);
    }
  }
  return cells;
}

void write_surface_csv(std::ostream& out, const std::vector<SurfaceCell>& cells,
                       std::uint64_t seed) {
  out << "# seed=" << seed << "\n";
  out << "a,d,ems\n";
  for (const SurfaceCell& c : cells) {
    out << fmt10(c.a) << ',' << fmt10(c.d) << ',';
    if (c.null_cell)
      out << "null\n";
    else
      out << fmt10(c.ems) << "\n";
  }
}

std::string render_surface_json(const std::vector<SurfaceCell>& cells, std::uint64_t seed) {
  json doc;
  doc["seed"] = seed;
  json rows = json::array();
  for (const SurfaceCell& c : cells) {
    json row = {{"a", c.a}, {"d", c.d}};
    if (c.null_cell)
      row["ems"] = nullptr;
    else
      row["ems"] = c.ems;
    rows.push_back(std::move(row));
  }
  doc["records"] = std::move(rows);
  return doc.dump(2) + "\n";
}

AxisRange parse_axis_range(const std::string& text) {
  AxisRange r;
  char extra = '\0';
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &r.start, &r.end, &r.step, &extra) != 3)
    throw std::invalid_argument("bad range (want start:end:step): " + text);
  r.validate();
  return r;
}

std::filesystem::path resolve_output_path(const std::string& out_path) {
  std::filesystem::path p(out_path);
  if (p.has_parent_path()) return p;
  if (const char* dir = std::getenv("QCORR_OUT_DIR"); dir && *dir)
    return std::filesystem::path(dir) / p;
  return p;
}

}  // namespace qcorr
