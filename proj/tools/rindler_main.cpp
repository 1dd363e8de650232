// Command-line driver: parameter sweeps over the squeeze parameter r with
// CSV/JSON reports, conditional-state dumps, the parametric-down-conversion
// analogy pipeline, and acceleration <-> squeeze-parameter conversions.

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rindler/entropy.hpp"
#include "rindler/pdc.hpp"
#include "rindler/relativity.hpp"
#include "rindler/serialize.hpp"
#include "rindler/teleport.hpp"

#ifndef RINDLER_VERSION
#define RINDLER_VERSION "0.0.0"
#endif

namespace {

using namespace rindler;
using Complex = std::complex<double>;

// oracle-mismatch failures exit with code 2, usage errors with 1
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

struct OutputOptions {
  std::string format = "csv";
  std::string out_path;
  bool stamp = false;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, std::string>> summary;
};

std::string timestamp_now() {
  char buffer[32];
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

void write_csv(const Report& report, const OutputOptions& opts, std::ostream& out) {
  out << "# rindler " << RINDLER_VERSION << "\n";
  out << "# command: " << report.command << "\n";
  for (const auto& [key, value] : report.parameters) out << "# " << key << "=" << value << "\n";
  if (opts.stamp) out << "# generated_at: " << timestamp_now() << "\n";
  if (!report.columns.empty()) {
    out << "# columns: ";
    for (std::size_t i = 0; i < report.columns.size(); ++i)
      out << (i ? "," : "") << report.columns[i];
    out << "\n";
  }
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << "\n";
  }
  for (const auto& [key, value] : report.summary) out << "# " << key << "=" << value << "\n";
}

void write_json(const Report& report, const OutputOptions& opts, std::ostream& out) {
  json doc;
  doc["schema_version"] = 1;
  doc["tool"] = "rindler";
  doc["version"] = RINDLER_VERSION;
  doc["command"] = report.command;
  json params = json::object();
  for (const auto& [key, value] : report.parameters) params[key] = value;
  doc["parameters"] = std::move(params);
  if (opts.stamp) doc["generated_at"] = timestamp_now();
  doc["columns"] = report.columns;
  json rows = json::array();
  for (const auto& row : report.rows) rows.push_back(row);
  doc["rows"] = std::move(rows);
  json summary = json::object();
  for (const auto& [key, value] : report.summary) summary[key] = value;
  doc["summary"] = std::move(summary);
  out << doc.dump(2) << "\n";
}

void emit(const Report& report, const OutputOptions& opts) {
  std::ostringstream buffer;
  if (opts.format == "json")
    write_json(report, opts, buffer);
  else
    write_csv(report, opts, buffer);
  if (opts.out_path.empty()) {
    std::cout << buffer.str();
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output path '" + opts.out_path + "'");
  file << buffer.str();
  if (!file) throw std::invalid_argument("failed writing output path '" + opts.out_path + "'");
}

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse complex value '" + text + "' (use re or re,im)");
  }
}

struct SweepSpec {
  std::string statistics_name = "bosonic";
  double r_start = 0.0;
  double r_stop = 2.0;
  double r_step = 0.1;
  int n_max = 40;
  double tail_tol = 1e-8;
  std::string outcome = "00";
  std::string alpha = "0.7071067811865476";
  std::string beta = "0.7071067811865476";
  double check_tol = 0.0;  // 0 = per-statistics default

  Statistics statistics() const { return statistics_from_string(statistics_name); }
};

std::vector<double> make_grid(const SweepSpec& spec, std::vector<std::string>* notes) {
  if (spec.r_step <= 0.0) throw std::invalid_argument("--r-step must be positive");
  if (spec.r_start < 0.0) throw std::invalid_argument("--r-start must be >= 0");
  if (spec.r_start > spec.r_stop) throw std::invalid_argument("--r-start must not exceed --r-stop");
  double start = spec.r_start, stop = spec.r_stop;
  if (spec.statistics() == Statistics::fermionic) {
    const double cap = std::numbers::pi / 4;
    if (stop > cap) {
      stop = cap;
      if (notes) notes->push_back("fermionic sweep clipped to [0, pi/4]");
    }
    start = std::min(start, cap);
  }
  std::vector<double> grid;
  for (int k = 0;; ++k) {
    const double r = start + k * spec.r_step;
    if (r > stop + spec.r_step * 1e-9) break;
    grid.push_back(std::min(r, stop));
  }
  // a clipped sweep still reports the saturation endpoint itself
  if (stop < spec.r_stop && (grid.empty() || grid.back() < stop - spec.r_step * 1e-9))
    grid.push_back(stop);
  return grid;
}

void echo_sweep_parameters(const SweepSpec& spec, Report& report) {
  report.parameters = {{"statistics", spec.statistics_name},
                       {"r_start", format_double(spec.r_start)},
                       {"r_stop", format_double(spec.r_stop)},
                       {"r_step", format_double(spec.r_step)},
                       {"n_max", std::to_string(spec.n_max)},
                       {"tail_tol", format_double(spec.tail_tol)},
                       {"outcome", spec.outcome},
                       {"alpha", spec.alpha},
                       {"beta", spec.beta}};
}

/// One full-pipeline row: fidelity at n_max, entropy columns at the adaptive
/// spectrum cap, sector weights up to n = 4, and a truncation deficit (the
/// receiver state's for fidelity sweeps, the spectrum tail for entropy
/// sweeps).
std::vector<double> sweep_row(const SweepSpec& spec, double r, const LogicalQubit& psi,
                              BellOutcome outcome, bool deficit_from_spectrum = false) {
  const Statistics stats = spec.statistics();
  const auto fidelity = teleport_fidelity(stats, r, psi, spec.n_max, outcome);
  const double closed = teleport_fidelity_closed_form(stats, r);
  const auto entropy_row = info_gain_row(stats, r, spec.tail_tol);

  const auto amps = conditional_amplitudes(psi, outcome);
  const auto rho = stats == Statistics::bosonic
                       ? receiver_state_bosonic_closed(amps, r, spec.n_max)
                       : receiver_state_fermionic(amps, r);
  std::array<double, 4> w{};
  for (const auto& sector : sector_weights(rho))
    if (sector.n >= 1 && sector.n <= 4) w[static_cast<std::size_t>(sector.n - 1)] = sector.weight;

  return {r,
          fidelity.tail_corrected,
          closed,
          entropy_row.ds_full,
          entropy_row.ds_five_state,
          w[0],
          w[1],
          w[2],
          w[3],
          deficit_from_spectrum ? entropy_row.tail : fidelity.truncation_deficit};
}

const std::vector<std::string> kSweepColumns{
    "r",  "fidelity_numeric", "fidelity_closed", "ds_full", "ds_5state",
    "w1", "w2",               "w3",              "w4",      "truncation_deficit"};

int run_fidelity(const SweepSpec& spec, const OutputOptions& opts) {
  const Statistics stats = spec.statistics();
  const auto psi = LogicalQubit::normalized(parse_complex(spec.alpha), parse_complex(spec.beta));
  const auto outcome = BellOutcome::from_string(spec.outcome);

  Report report;
  report.command = "fidelity";
  echo_sweep_parameters(spec, report);
  std::vector<std::string> notes;
  const auto grid = make_grid(spec, &notes);

  double max_diff = 0.0;
  for (double r : grid) {
    report.rows.push_back(sweep_row(spec, r, psi, outcome));
    max_diff = std::max(max_diff, std::abs(report.rows.back()[1] - report.rows.back()[2]));
  }
  report.columns = kSweepColumns;
  const double tol = spec.check_tol > 0.0
                         ? spec.check_tol
                         : (stats == Statistics::bosonic ? 1e-9 : 1e-12);
  report.summary.emplace_back("max_abs_diff_fidelity", format_double(max_diff));
  report.summary.emplace_back("check_tol", format_double(tol));
  for (const auto& note : notes) report.summary.emplace_back("note", note);
  emit(report, opts);
  if (max_diff > tol)
    throw ValidationError("fidelity pipeline deviates from the closed form by " +
                          format_double(max_diff));
  return 0;
}

int run_entropy(const SweepSpec& spec, const OutputOptions& opts) {
  const Statistics stats = spec.statistics();
  const auto psi = LogicalQubit::normalized(parse_complex(spec.alpha), parse_complex(spec.beta));
  const auto outcome = BellOutcome::from_string(spec.outcome);

  Report report;
  report.command = "entropy";
  echo_sweep_parameters(spec, report);
  std::vector<std::string> notes;
  const auto grid = make_grid(spec, &notes);

  for (double r : grid)
    report.rows.push_back(sweep_row(spec, r, psi, outcome, /*deficit_from_spectrum=*/true));
  report.columns = kSweepColumns;

  std::optional<std::string> failure;
  if (stats == Statistics::fermionic) {
    // ds_full must obey the cos^2 r law
    double worst = 0.0;
    for (const auto& row : report.rows)
      worst = std::max(worst, std::abs(row[3] - std::cos(row[0]) * std::cos(row[0])));
    report.summary.emplace_back("max_abs_diff_ds_law", format_double(worst));
    if (worst > 1e-10)
      failure = "fermionic information gain deviates from cos^2 r by " + format_double(worst);
  } else {
    double worst_rise = 0.0;
    for (std::size_t i = 1; i < report.rows.size(); ++i)
      worst_rise = std::max(worst_rise, report.rows[i][3] - report.rows[i - 1][3]);
    report.summary.emplace_back("max_monotonicity_rise", format_double(worst_rise));
    if (worst_rise > 1e-9)
      failure = "bosonic information gain is not monotone non-increasing (rise " +
                format_double(worst_rise) + ")";
  }
  for (const auto& note : notes) report.summary.emplace_back("note", note);
  emit(report, opts);
  if (failure) throw ValidationError(*failure);
  return 0;
}

int run_dump(const SweepSpec& spec, double r, const OutputOptions& opts) {
  const Statistics stats = spec.statistics();
  const auto psi = LogicalQubit::normalized(parse_complex(spec.alpha), parse_complex(spec.beta));
  const auto outcome = BellOutcome::from_string(spec.outcome);
  if (stats == Statistics::fermionic && r > std::numbers::pi / 4)
    throw std::invalid_argument("fermionic r must lie in [0, pi/4]");

  const auto amps = conditional_amplitudes(psi, outcome);
  const auto rho = stats == Statistics::bosonic ? receiver_state_bosonic_closed(amps, r, spec.n_max)
                                                : receiver_state_fermionic(amps, r);

  json doc = serialize(rho);
  json provenance;
  provenance["tool"] = "rindler";
  provenance["version"] = RINDLER_VERSION;
  provenance["command"] = "dump";
  provenance["statistics"] = spec.statistics_name;
  provenance["r"] = r;
  provenance["outcome"] = spec.outcome;
  provenance["alpha"] = spec.alpha;
  provenance["beta"] = spec.beta;
  provenance["n_max"] = spec.n_max;
  if (opts.stamp) provenance["generated_at"] = timestamp_now();
  doc["provenance"] = std::move(provenance);

  json sectors = json::array();
  for (const auto& sector : sector_weights(rho)) {
    json entry;
    entry["n"] = sector.n;
    entry["weight"] = sector.weight;
    sectors.push_back(std::move(entry));
  }
  doc["sectors"] = std::move(sectors);

  // allowed structure: coherences only within a sector, between neighbours
  // in the occupation ladder
  json mask = json::array();
  for (const auto& row : rho.basis()) {
    for (const auto& col : rho.basis()) {
      const bool allowed = row.total_excitation() == col.total_excitation() &&
                           std::abs(row.occupations[0] - col.occupations[0]) <= 1;
      mask.push_back(allowed ? 1 : 0);
    }
  }
  doc["block_tridiagonal_mask"] = std::move(mask);

  std::ostringstream buffer;
  buffer << doc.dump(2) << "\n";
  if (opts.out_path.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output path '" + opts.out_path + "'");
    file << buffer.str();
  }
  return 0;
}

int run_pdc(double s11, double s21, double phi, double omega, int n_max,
            const OutputOptions& opts) {
  if (omega <= 0.0) throw std::invalid_argument("--omega must be positive");
  if (s11 < 0.0 || s21 < 0.0)
    throw std::invalid_argument("--s11/--s21 are magnitudes and must be >= 0");
  const Complex phase = std::polar(1.0, phi);
  const SqueezeMatrix s{Complex(s11), phase * s21, std::conj(phase) * s21, Complex(s11)};
  const auto residuals = validate_bogoliubov(s);

  Report report;
  report.command = "pdc";
  report.parameters = {{"s11", format_double(s11)},
                       {"s21", format_double(s21)},
                       {"phi", format_double(phi)},
                       {"omega", format_double(omega)},
                       {"n_max", std::to_string(n_max)}};
  report.summary.emplace_back("residual_signal_normalization",
                              format_double(residuals.signal_normalization));
  report.summary.emplace_back("residual_idler_normalization",
                              format_double(residuals.idler_normalization));
  report.summary.emplace_back("residual_cross_commutator",
                              format_double(residuals.cross_commutator));

  if (s21 >= s11) {
    emit(report, opts);
    throw ValidationError("|S21| >= |S11| gives a non-normalizable state");
  }
  if (!residuals.valid()) {
    emit(report, opts);
    throw ValidationError("squeeze matrix violates the commutator constraints (max residual " +
                          format_double(residuals.max()) + ")");
  }

  const auto vacuum = pdc_vacuum(s, n_max);
  const auto reduced = reduced_thermal_pdc(s, n_max);
  report.columns = {"n", "vacuum_re", "vacuum_im", "reduced_diag"};
  for (int n = 0; n <= std::min(5, n_max); ++n) {
    const auto amp = vacuum.amplitude(FockBasisState{n, n});
    report.rows.push_back({static_cast<double>(n), amp.real(), amp.imag(),
                           reduced.matrix()(n, n).real()});
  }
  report.summary.emplace_back("r_effective", format_double(std::atanh(s21 / s11)));
  report.summary.emplace_back("photon_number_difference",
                              format_double(photon_number_difference(vacuum)));
  report.summary.emplace_back("unruh_temperature_kelvin",
                              format_double(unruh_temperature_from_matrix(s, omega)));
  report.summary.emplace_back(
      "unruh_temperature_natural",
      format_double(unruh_temperature_from_matrix(s, omega, UnitSystem::natural)));
  report.summary.emplace_back("truncation_deficit", format_double(vacuum.truncation_deficit()));
  emit(report, opts);
  return 0;
}

int run_convert(double a, double omega, const OutputOptions& opts) {
  const AccelerationParams params{a, omega};
  params.validate();
  const auto bosonic = squeeze_bosonic(params);
  const auto fermionic = squeeze_fermionic(params);

  Report report;
  report.command = "convert";
  report.parameters = {{"a", format_double(a)}, {"omega", format_double(omega)}};
  report.summary = {
      {"a_over_c", format_double(a / params.c)},
      {"omega_dimensionless", format_double(params.dimensionless_frequency())},
      {"r_bosonic", format_double(bosonic.r)},
      {"r_fermionic", format_double(fermionic.r)},
      {"unruh_temperature_kelvin", format_double(unruh_temperature(params))},
      {"unruh_temperature_natural",
       format_double(unruh_temperature(params, UnitSystem::natural))},
  };
  emit(report, opts);
  return 0;
}

void add_output_options(CLI::App* cmd, OutputOptions& opts, bool with_format = true) {
  if (with_format)
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opts.out_path, "Output path (default: stdout)");
  cmd->add_flag("--stamp", opts.stamp,
                "Add a generation timestamp (off by default so outputs are reproducible)");
}

void add_sweep_options(CLI::App* cmd, SweepSpec& spec, bool with_grid = true) {
  cmd->add_option("--statistics", spec.statistics_name, "Field statistics")
      ->check(CLI::IsMember({"bosonic", "fermionic"}));
  if (with_grid) {
    cmd->add_option("--r-start", spec.r_start, "Sweep start (squeeze parameter r)");
    cmd->add_option("--r-stop", spec.r_stop, "Sweep stop");
    cmd->add_option("--r-step", spec.r_step, "Sweep step (> 0)");
  }
  cmd->add_option("--n-max", spec.n_max, "Total-excitation cap for receiver states")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tail-tol", spec.tail_tol,
                  "Spectrum tail tolerance for the adaptive entropy cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--outcome", spec.outcome, "Bell outcome ij")
      ->check(CLI::IsMember({"00", "01", "10", "11"}));
  cmd->add_option("--alpha", spec.alpha, "Input qubit amplitude alpha, 're' or 're,im'");
  cmd->add_option("--beta", spec.beta, "Input qubit amplitude beta, 're' or 're,im'");
}

/// Flat key=value config file: keys are the long option names without
/// dashes; '#' starts a comment. Values are spliced in ahead of the
/// command-line flags, so explicit flags win.
std::vector<std::string> load_config_args(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot read config file '" + path + "'");
  const auto trim = [](std::string s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return std::string();
    return s.substr(begin, s.find_last_not_of(" \t\r") - begin + 1);
  };
  std::vector<std::string> args;
  std::string line;
  int lineno = 0;
  while (std::getline(file, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string key = eq == std::string::npos ? "" : trim(line.substr(0, eq));
    const std::string value = eq == std::string::npos ? "" : trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected key=value");
    args.push_back("--" + key + "=" + value);
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Teleportation between an inertial sender and a uniformly accelerated "
               "receiver: fidelity and entropy sweeps, conditional-state dumps, the "
               "parametric-down-conversion analogy, and unit conversions."};
  app.set_version_flag("--version", RINDLER_VERSION);
  app.require_subcommand(1);

  SweepSpec fidelity_spec;
  OutputOptions fidelity_out;
  auto* fidelity_cmd =
      app.add_subcommand("fidelity", "Sweep the teleportation fidelity over r");
  add_sweep_options(fidelity_cmd, fidelity_spec);
  add_output_options(fidelity_cmd, fidelity_out);
  fidelity_cmd->add_option("--check-tol", fidelity_spec.check_tol,
                           "Max allowed |numeric - closed| (default 1e-9 bosonic, 1e-12 fermionic)");

  SweepSpec entropy_spec;
  OutputOptions entropy_out;
  auto* entropy_cmd =
      app.add_subcommand("entropy", "Sweep the information gain dS = S_pre - S_post over r");
  add_sweep_options(entropy_cmd, entropy_spec);
  add_output_options(entropy_cmd, entropy_out);

  SweepSpec dump_spec;
  OutputOptions dump_out;
  double dump_r = 0.0;
  auto* dump_cmd = app.add_subcommand(
      "dump", "Write one conditional receiver state as annotated JSON");
  add_sweep_options(dump_cmd, dump_spec, /*with_grid=*/false);
  dump_cmd->add_option("--r", dump_r, "Squeeze parameter")->check(CLI::NonNegativeNumber);
  add_output_options(dump_cmd, dump_out, /*with_format=*/false);

  OutputOptions pdc_out;
  double pdc_s11 = 1.0, pdc_s21 = 0.0, pdc_phi = 0.0, pdc_omega = 1.0e15;
  int pdc_n_max = 24;
  auto* pdc_cmd = app.add_subcommand(
      "pdc", "Parametric-down-conversion analogy: vacuum, reduced state, temperature");
  pdc_cmd->add_option("--s11", pdc_s11, "|S11| (cosh r form)")->check(CLI::NonNegativeNumber);
  pdc_cmd->add_option("--s21", pdc_s21, "|S21| (sinh r form)")->check(CLI::NonNegativeNumber);
  pdc_cmd->add_option("--phi", pdc_phi, "Squeezing phase");
  pdc_cmd->add_option("--omega", pdc_omega, "Idler frequency (rad/s)");
  pdc_cmd->add_option("--n-max", pdc_n_max, "Per-mode occupation cap")->check(CLI::PositiveNumber);
  add_output_options(pdc_cmd, pdc_out);

  OutputOptions convert_out;
  double convert_a = 0.0, convert_omega = 1.0e15;
  auto* convert_cmd = app.add_subcommand(
      "convert", "Acceleration and frequency to Omega, r, and the Unruh temperature");
  convert_cmd->add_option("--a", convert_a, "Proper acceleration (m/s^2)")
      ->check(CLI::NonNegativeNumber);
  convert_cmd->add_option("--omega", convert_omega, "Mode frequency (rad/s)");
  add_output_options(convert_cmd, convert_out);

  std::string config_path;
  for (auto* cmd : {fidelity_cmd, entropy_cmd, dump_cmd, pdc_cmd, convert_cmd}) {
    cmd->add_option("--config", config_path,
                    "Read options from a flat key=value file (explicit flags win)");
    // later occurrences override earlier ones, which lets config values be
    // spliced in ahead of the explicit flags
    for (auto* opt : cmd->get_options()) opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    std::string pre_scan_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--config" && i + 1 < args.size())
        pre_scan_path = args[i + 1];
      else if (args[i].rfind("--config=", 0) == 0)
        pre_scan_path = args[i].substr(9);
    }
    if (!pre_scan_path.empty() && !args.empty()) {
      const auto config_args = load_config_args(pre_scan_path);
      args.insert(args.begin() + 1, config_args.begin(), config_args.end());
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    std::reverse(args.begin(), args.end());  // CLI11's vector parse consumes from the back
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (fidelity_cmd->parsed()) return run_fidelity(fidelity_spec, fidelity_out);
    if (entropy_cmd->parsed()) return run_entropy(entropy_spec, entropy_out);
    if (dump_cmd->parsed()) return run_dump(dump_spec, dump_r, dump_out);
    if (pdc_cmd->parsed()) return run_pdc(pdc_s11, pdc_s21, pdc_phi, pdc_omega, pdc_n_max, pdc_out);
    if (convert_cmd->parsed()) return run_convert(convert_a, convert_omega, convert_out);
  } catch (const ValidationError& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
