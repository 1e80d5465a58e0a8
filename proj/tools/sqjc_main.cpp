#include "sqjc/analytic.hpp"
#include "sqjc/ed.hpp"
#include "sqjc/sweep.hpp"
#include "sqjc/validate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitValidation = 3;

std::string fmt(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

struct SpectrumArgs {
  std::string model = "mjc";
  double omega_c = 1.0;
  double omega_a = 1.0;
  double coupling = 0.0;
  double squeeze = 0.0;
  int levels = 4;
  std::string cutoff = "auto";
  std::string format = "table";
};

struct CriticalArgs {
  double omega_c = 1.0;
  double omega_a = 1.0;
  double squeeze = 0.0;
  std::string format = "table";
};

struct GapScanArgs {
  double omega_c = 1.0;
  double omega_a = 1.0;
  double squeeze = 0.0;
  double coupling_min = 0.0;
  double coupling_max = 0.0;
  int steps = 1;
  bool allow_unconverged = false;
  std::string format = "table";
};

sqjc::HamiltonianBuilder make_builder(const SpectrumArgs& args) {
  if (args.model == "rabi") {
    const sqjc::RabiParams params(args.omega_c, args.omega_a, args.coupling);
    return [params](const sqjc::FockSpace& space) {
      return sqjc::build_rabi(params, space);
    };
  }
  const double squeeze = args.model == "jcm" ? 0.0 : args.squeeze;
  const sqjc::ModelParams params(args.omega_c, args.omega_a, args.coupling, squeeze);
  if (args.model == "jcm") {
    return [params](const sqjc::FockSpace& space) {
      return sqjc::build_jcm(params, space);
    };
  }
  return [params](const sqjc::FockSpace& space) {
    return sqjc::build_mjc(params, space);
  };
}

// Analytic normal-phase gap for the requested model, absent when the
// coupling lies at or beyond the critical point.
std::optional<double> analytic_gap(const SpectrumArgs& args) {
  try {
    if (args.model == "jcm") {
      return sqjc::jcm_gap(sqjc::ModelParams(args.omega_c, args.omega_a,
                                             args.coupling, 0.0))
          .gap;
    }
    if (args.model == "rabi") {
      return sqjc::rabi_gap(args.omega_c, args.omega_a, args.coupling).gap;
    }
    const sqjc::ModelParams params(args.omega_c, args.omega_a, args.coupling,
                                   args.squeeze);
    const sqjc::NormalPhaseCoeffs coeffs = sqjc::normal_phase_coeffs(params);
    if (!(coeffs.a > 0.0) || !(coeffs.a_plus_4c > 0.0)) return std::nullopt;
    return std::sqrt(coeffs.a * coeffs.a_plus_4c);
  } catch (const sqjc::UnphysicalRegime&) {
    return std::nullopt;
  }
}

int run_spectrum(const SpectrumArgs& args) {
  const sqjc::HamiltonianBuilder builder = make_builder(args);

  sqjc::SpectrumResult spectrum;
  if (args.cutoff == "auto") {
    sqjc::ConvergenceSettings settings;
    if (args.model != "rabi") {
      settings.n_start = sqjc::auto_cutoff(
          sqjc::ModelParams(args.omega_c, args.omega_a, args.coupling,
                            args.model == "jcm" ? 0.0 : args.squeeze));
    }
    spectrum = sqjc::converged_spectrum(builder, args.levels, settings);
    if (!spectrum.converged) {
      std::cerr << "spectrum did not converge by cutoff " << spectrum.cutoff_used
                << "\n";
      return kExitNumeric;
    }
  } else {
    const int cutoff = std::stoi(args.cutoff);
    spectrum = sqjc::spectrum_ed(builder(sqjc::FockSpace(cutoff)), args.levels);
    spectrum.cutoff_used = cutoff;
  }

  const std::optional<double> gap = analytic_gap(args);
  if (args.format == "json") {
    json doc;
    doc["model"] = args.model;
    doc["levels"] = spectrum.energies;
    doc["gap_ed"] = spectrum.gap();
    if (gap) {
      doc["gap_analytic"] = *gap;
    } else {
      doc["gap_analytic"] = nullptr;
    }
    doc["cutoff_used"] = spectrum.cutoff_used;
    doc["converged"] = spectrum.converged;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "model: " << args.model << "\n";
    for (size_t i = 0; i < spectrum.energies.size(); ++i) {
      std::cout << "level " << i << ": " << fmt(spectrum.energies[i]) << "\n";
    }
    std::cout << "gap_ed: " << fmt(spectrum.gap()) << "\n";
    std::cout << "gap_analytic: " << (gap ? fmt(*gap) : std::string("n/a")) << "\n";
    std::cout << "cutoff_used: " << spectrum.cutoff_used << "\n";
  }
  return kExitOk;
}

int run_critical(const CriticalArgs& args) {
  const double case_a = sqjc::critical_coupling(sqjc::CriticalBranch::CaseA,
                                                args.omega_c, args.omega_a,
                                                args.squeeze)
                            .omega_crit;
  const double case_b = sqjc::critical_coupling(sqjc::CriticalBranch::CaseB,
                                                args.omega_c, args.omega_a,
                                                args.squeeze)
                            .omega_crit;
  const double lambda_crit = 0.5 * std::sqrt(args.omega_a * args.omega_c);

  if (args.format == "json") {
    json doc;
    doc["omega_crit_caseA"] = case_a;
    doc["omega_crit_caseB"] = case_b;
    doc["lambda_crit_rabi"] = lambda_crit;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "omega_crit_caseA: " << fmt(case_a) << "\n";
    std::cout << "omega_crit_caseB: " << fmt(case_b) << "\n";
    std::cout << "lambda_crit_rabi: " << fmt(lambda_crit) << "\n";
  }
  return kExitOk;
}

int run_sweep_cmd(const std::string& config_path) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "cannot read config file: " << config_path << "\n";
    return kExitUsage;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  sqjc::SweepConfig config;
  try {
    config = sqjc::parse_config(buffer.str());
  } catch (const sqjc::ConfigError& err) {
    std::cerr << err.what() << "\n";
    return kExitUsage;
  }
  if (config.output_path.empty()) {
    std::cerr << "config key 'output_path': missing\n";
    return kExitUsage;
  }

  const std::vector<sqjc::SweepRow> rows = sqjc::run_sweep(config);
  std::ofstream out(config.output_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << config.output_path << "\n";
    return kExitUsage;
  }
  sqjc::write_csv(rows, out);
  std::cout << rows.size() << " rows written to " << config.output_path << "\n";
  return kExitOk;
}

int run_gapscan(const GapScanArgs& args) {
  std::vector<double> grid;
  for (int i = 0; i < args.steps; ++i) {
    grid.push_back(args.steps == 1
                       ? args.coupling_min
                       : args.coupling_min + (args.coupling_max - args.coupling_min) *
                                                 static_cast<double>(i) /
                                                 static_cast<double>(args.steps - 1));
  }

  const sqjc::ModelParams base(args.omega_c, args.omega_a, 0.0, args.squeeze);
  const std::vector<sqjc::GapScanPoint> scan = sqjc::gap_scan(base, grid);
  const sqjc::GapMinimum minimum = sqjc::refine_gap_minimum(scan);
  const double crit = sqjc::critical_coupling(sqjc::CriticalBranch::CaseB,
                                              args.omega_c, args.omega_a,
                                              args.squeeze)
                          .omega_crit;

  bool all_converged = true;
  for (const auto& point : scan) all_converged = all_converged && point.converged;
  if (!all_converged && !args.allow_unconverged) {
    std::cerr << "gap scan failed to converge at one or more points "
                 "(use --allow-unconverged to keep going)\n";
    return kExitNumeric;
  }

  if (args.format == "json") {
    json doc;
    doc["points"] = json::array();
    for (const auto& point : scan) {
      doc["points"].push_back({{"omega", point.omega},
                               {"gap", point.gap},
                               {"mean_photons", point.mean_photons},
                               {"cutoff_used", point.cutoff_used},
                               {"converged", point.converged}});
    }
    doc["gap_minimum_omega"] = minimum.omega;
    doc["gap_minimum"] = minimum.gap;
    doc["omega_crit_caseB"] = crit;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "omega gap mean_photons cutoff converged\n";
    for (const auto& point : scan) {
      std::cout << fmt(point.omega) << " " << fmt(point.gap) << " "
                << fmt(point.mean_photons) << " " << point.cutoff_used << " "
                << (point.converged ? "true" : "false") << "\n";
    }
    std::cout << "gap_minimum_omega: " << fmt(minimum.omega) << "\n";
    std::cout << "gap_minimum: " << fmt(minimum.gap) << "\n";
    std::cout << "omega_crit_caseB: " << fmt(crit) << "\n";
  }
  return kExitOk;
}

int run_validate(bool full, bool perturb) {
  sqjc::ValidateOptions options;
  options.full = full;
  options.perturb_chain_one = perturb;
  const std::vector<sqjc::SuiteResult> results = sqjc::run_validation(options);

  bool all_passed = true;
  for (const auto& suite : results) {
    std::cout << (suite.passed ? "[PASS] " : "[FAIL] ") << suite.name << ": "
              << suite.detail << "\n";
    all_passed = all_passed && suite.passed;
  }
  return all_passed ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Squeezed-exchange cavity models: spectra, critical points and phase "
      "sweeps (energies in units of the input frequencies, omega_c = 1 by "
      "default)"};
  app.require_subcommand(1);

  SpectrumArgs spectrum_args;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Diagonalize a model and report low-lying levels");
  spectrum->add_option("--model", spectrum_args.model, "mjc | jcm | rabi")
      ->check(CLI::IsMember({"mjc", "jcm", "rabi"}));
  spectrum->add_option("--omega-c", spectrum_args.omega_c, "cavity frequency");
  spectrum->add_option("--omega-a", spectrum_args.omega_a, "atomic frequency");
  CLI::Option* coupling_opt = spectrum->add_option(
      "--coupling", spectrum_args.coupling, "Omega (lambda for rabi)");
  CLI::Option* squeeze_opt = spectrum->add_option(
      "--squeeze", spectrum_args.squeeze, "squeeze parameter r (mjc only)");
  spectrum->add_option("--levels", spectrum_args.levels, "levels to report")
      ->check(CLI::PositiveNumber);
  spectrum->add_option("--cutoff", spectrum_args.cutoff,
                       "auto or a fixed Fock cutoff");
  spectrum->add_option("--format", spectrum_args.format, "table | json")
      ->check(CLI::IsMember({"table", "json"}));

  CriticalArgs critical_args;
  CLI::App* critical = app.add_subcommand(
      "critical", "Critical couplings for both branches plus the Rabi reference");
  critical->add_option("--omega-c", critical_args.omega_c, "cavity frequency");
  critical->add_option("--omega-a", critical_args.omega_a, "atomic frequency");
  critical->add_option("--squeeze", critical_args.squeeze, "squeeze parameter r");
  critical->add_option("--format", critical_args.format, "table | json")
      ->check(CLI::IsMember({"table", "json"}));

  std::string config_path;
  CLI::App* sweep = app.add_subcommand(
      "sweep",
      "Phase-diagram sweep over (r, Omega) driven by a JSON config "
      "(SQJC_THREADS caps the worker pool)");
  sweep->add_option("--config", config_path, "path to the JSON config")
      ->required();

  GapScanArgs gapscan_args;
  CLI::App* gapscan = app.add_subcommand(
      "gapscan", "Converged gap and photon number across a coupling grid");
  gapscan->add_option("--omega-c", gapscan_args.omega_c, "cavity frequency");
  gapscan->add_option("--omega-a", gapscan_args.omega_a, "atomic frequency");
  gapscan->add_option("--squeeze", gapscan_args.squeeze, "squeeze parameter r");
  gapscan->add_option("--coupling-min", gapscan_args.coupling_min, "grid start")
      ->required();
  gapscan->add_option("--coupling-max", gapscan_args.coupling_max, "grid end")
      ->required();
  gapscan->add_option("--steps", gapscan_args.steps, "grid points")
      ->required()
      ->check(CLI::PositiveNumber);
  gapscan->add_flag("--allow-unconverged", gapscan_args.allow_unconverged,
                    "report unconverged points instead of failing");
  gapscan->add_option("--format", gapscan_args.format, "table | json")
      ->check(CLI::IsMember({"table", "json"}));

  bool validate_quick = false;
  bool validate_full = false;
  bool validate_perturb = false;
  CLI::App* validate =
      app.add_subcommand("validate", "Run the cross-module invariant suites");
  validate->add_flag("--quick", validate_quick, "reduced grids (default)");
  validate->add_flag("--full", validate_full, "complete grids");
  validate->add_flag("--inject-chain1-flip", validate_perturb)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (spectrum->parsed()) {
      if (spectrum_args.model != "mjc" && squeeze_opt->count() > 0) {
        std::cerr << "--squeeze applies to the mjc model only\n";
        return kExitUsage;
      }
      if (spectrum_args.model == "rabi" && coupling_opt->count() == 0) {
        std::cerr << "--coupling (lambda) required for the rabi model\n";
        return kExitUsage;
      }
      if (spectrum_args.cutoff != "auto") {
        try {
          if (std::stoi(spectrum_args.cutoff) < 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
          std::cerr << "--cutoff must be 'auto' or a positive integer\n";
          return kExitUsage;
        }
      }
      return run_spectrum(spectrum_args);
    }
    if (critical->parsed()) return run_critical(critical_args);
    if (sweep->parsed()) return run_sweep_cmd(config_path);
    if (gapscan->parsed()) {
      if (gapscan_args.coupling_max < gapscan_args.coupling_min) {
        std::cerr << "--coupling-max must be >= --coupling-min\n";
        return kExitUsage;
      }
      return run_gapscan(gapscan_args);
    }
    if (validate->parsed()) {
      if (validate_quick && validate_full) {
        std::cerr << "choose one of --quick / --full\n";
        return kExitUsage;
      }
      return run_validate(validate_full, validate_perturb);
    }
  } catch (const std::invalid_argument& err) {
    std::cerr << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << err.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
