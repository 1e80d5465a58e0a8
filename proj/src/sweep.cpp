#include "sqjc/sweep.hpp"

#include "sqjc/analytic.hpp"

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <thread>

namespace sqjc {

namespace {

using nlohmann::json;

double require_positive(const json& doc, const std::string& key) {
  if (!doc.contains(key)) throw ConfigError(key, "missing");
  if (!doc[key].is_number()) throw ConfigError(key, "must be a number");
  const double value = doc[key].get<double>();
  if (!(value > 0.0)) throw ConfigError(key, "must be positive");
  return value;
}

GridSpec parse_grid(const json& doc, const std::string& key) {
  if (!doc.contains(key)) throw ConfigError(key, "missing");
  const json& grid = doc[key];
  if (!grid.is_object()) throw ConfigError(key, "must be an object {min, max, steps}");
  GridSpec out;
  for (const char* field : {"min", "max", "steps"}) {
    if (!grid.contains(field) || !grid[field].is_number()) {
      throw ConfigError(key + "." + field, "missing or not a number");
    }
  }
  if (!grid["steps"].is_number_integer()) {
    throw ConfigError(key + ".steps", "must be an integer");
  }
  out.min = grid["min"].get<double>();
  out.max = grid["max"].get<double>();
  out.steps = grid["steps"].get<int>();
  if (out.steps < 1) throw ConfigError(key + ".steps", "must be >= 1");
  if (out.min > out.max) throw ConfigError(key, "min must not exceed max");
  return out;
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

template <typename T>
std::string format_optional(const std::optional<T>& value) {
  if (!value) return "";
  if constexpr (std::is_same_v<T, bool>) {
    return *value ? "true" : "false";
  } else if constexpr (std::is_same_v<T, int>) {
    return std::to_string(*value);
  } else {
    return format_number(*value);
  }
}

int env_thread_cap() {
  const char* raw = std::getenv("SQJC_THREADS");
  if (raw == nullptr) return 0;
  const int value = std::atoi(raw);
  return value > 0 ? value : 0;
}

SweepRow compute_cell(const SweepConfig& config, double r, double omega) {
  SweepRow row;
  row.r = r;
  row.omega = omega;
  row.omega_crit_case_a =
      critical_coupling(CriticalBranch::CaseA, config.omega_c, config.omega_a, r)
          .omega_crit;
  row.omega_crit_case_b =
      critical_coupling(CriticalBranch::CaseB, config.omega_c, config.omega_a, r)
          .omega_crit;

  const double crit = row.omega_crit_case_b;
  if (omega == crit) {
    // Boundary cell: both branches close.
    row.phase = "normal";
    row.gap_analytic = 0.0;
    row.gap_superradiant = 0.0;
  } else if (omega < crit) {
    row.phase = "normal";
    const ModelParams params(config.omega_c, config.omega_a, omega, r);
    const NormalPhaseCoeffs coeffs = normal_phase_coeffs(params);
    row.gap_analytic =
        std::sqrt(std::max(0.0, coeffs.a * coeffs.a_plus_4c));
  } else {
    row.phase = "superradiant";
    // Same pipeline as the squeeze = 0 closed form, with the critical
    // coupling of this r; exact at r = 0, extrapolated otherwise.
    const double ratio2 = (crit * crit) / (omega * omega);
    row.gap_superradiant = config.omega_c * std::sqrt(1.0 - ratio2 * ratio2);
  }

  if (config.include_ed) {
    const ModelParams params(config.omega_c, config.omega_a, omega, r);
    const auto builder = [&params](const FockSpace& space) {
      return build_mjc(params, space);
    };
    SpectrumResult spectrum;
    if (config.cutoff) {
      spectrum = spectrum_ed(builder(FockSpace(*config.cutoff)), config.n_levels);
      spectrum.cutoff_used = *config.cutoff;
    } else {
      ConvergenceSettings settings;
      settings.n_start = auto_cutoff(params);
      settings.n_max = std::max(512, 2 * settings.n_start);
      spectrum = converged_spectrum(builder, config.n_levels, settings);
    }
    const FockSpace space(spectrum.cutoff_used);
    const GroundObservables obs = ground_observables(builder(space), space);
    row.gap_ed = spectrum.gap();
    row.mean_photons_ed = obs.mean_photons;
    row.cutoff_used = spectrum.cutoff_used;
    row.converged = spectrum.converged;
  }
  return row;
}

}  // namespace

std::vector<double> GridSpec::points() const {
  std::vector<double> out;
  out.reserve(steps);
  if (steps == 1) {
    out.push_back(min);
    return out;
  }
  for (int i = 0; i < steps; ++i) {
    out.push_back(min + (max - min) * static_cast<double>(i) /
                            static_cast<double>(steps - 1));
  }
  return out;
}

SweepConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& err) {
    throw ConfigError("<document>", err.what());
  }
  if (!doc.is_object()) throw ConfigError("<document>", "must be a JSON object");

  SweepConfig config;
  config.omega_c = require_positive(doc, "omega_c");
  config.omega_a = require_positive(doc, "omega_a");
  config.r_grid = parse_grid(doc, "r_grid");
  if (config.r_grid.min < 0.0) throw ConfigError("r_grid.min", "must be nonnegative");
  config.coupling_grid = parse_grid(doc, "coupling_grid");
  if (config.coupling_grid.min < 0.0) {
    throw ConfigError("coupling_grid.min", "must be nonnegative");
  }

  if (doc.contains("cutoff")) {
    const json& cutoff = doc["cutoff"];
    if (cutoff.is_string() && cutoff.get<std::string>() == "auto") {
      config.cutoff = std::nullopt;
    } else if (cutoff.is_number_integer() && cutoff.get<int>() >= 1) {
      config.cutoff = cutoff.get<int>();
    } else {
      throw ConfigError("cutoff", "must be \"auto\" or a positive integer");
    }
  }
  if (doc.contains("n_levels")) {
    if (!doc["n_levels"].is_number_integer() || doc["n_levels"].get<int>() < 2) {
      throw ConfigError("n_levels", "must be an integer >= 2");
    }
    config.n_levels = doc["n_levels"].get<int>();
  }
  if (doc.contains("include_ed")) {
    if (!doc["include_ed"].is_boolean()) {
      throw ConfigError("include_ed", "must be a boolean");
    }
    config.include_ed = doc["include_ed"].get<bool>();
  }
  if (doc.contains("output_path")) {
    if (!doc["output_path"].is_string()) {
      throw ConfigError("output_path", "must be a string");
    }
    config.output_path = doc["output_path"].get<std::string>();
  }
  return config;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config, int n_threads) {
  const std::vector<double> r_points = config.r_grid.points();
  const std::vector<double> coupling_points = config.coupling_grid.points();
  const size_t n_cells = r_points.size() * coupling_points.size();

  if (n_threads <= 0) {
    n_threads = static_cast<int>(std::thread::hardware_concurrency());
    if (n_threads < 1) n_threads = 1;
    const int cap = env_thread_cap();
    if (cap > 0) n_threads = std::min(n_threads, cap);
  }
  n_threads = static_cast<int>(std::min<size_t>(n_threads, n_cells));

  std::vector<SweepRow> rows(n_cells);
  const size_t inner = coupling_points.size();
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t cell = next.fetch_add(1); cell < n_cells;
         cell = next.fetch_add(1)) {
      rows[cell] = compute_cell(config, r_points[cell / inner],
                                coupling_points[cell % inner]);
    }
  };

  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }
  return rows;
}

size_t write_csv(const std::vector<SweepRow>& rows, std::ostream& sink) {
  std::string out =
      "r,omega,omega_crit_caseA,omega_crit_caseB,phase,gap_analytic,"
      "gap_superradiant,gap_ed,mean_photons_ed,cutoff_used,converged\n";
  for (const SweepRow& row : rows) {
    out += format_number(row.r);
    out += ',';
    out += format_number(row.omega);
    out += ',';
    out += format_number(row.omega_crit_case_a);
    out += ',';
    out += format_number(row.omega_crit_case_b);
    out += ',';
    out += row.phase;
    out += ',';
    out += format_optional(row.gap_analytic);
    out += ',';
    out += format_optional(row.gap_superradiant);
    out += ',';
    out += format_optional(row.gap_ed);
    out += ',';
    out += format_optional(row.mean_photons_ed);
    out += ',';
    out += format_optional(row.cutoff_used);
    out += ',';
    out += format_optional(row.converged);
    out += '\n';
  }
  sink.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!sink) throw std::runtime_error("write_csv: sink write failure");
  return out.size();
}

}  // namespace sqjc
