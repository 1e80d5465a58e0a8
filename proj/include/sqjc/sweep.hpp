#pragma once

#include "sqjc/ed.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqjc {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& key, const std::string& what)
      : std::runtime_error("config key '" + key + "': " + what), key_(key) {}

  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int steps = 1;

  std::vector<double> points() const;
};

struct SweepConfig {
  double omega_c = 1.0;
  double omega_a = 1.0;
  GridSpec r_grid;
  GridSpec coupling_grid;
  std::optional<int> cutoff;  // nullopt = auto heuristic + convergence loop
  int n_levels = 4;
  bool include_ed = false;
  std::string output_path;
};

// Validates a JSON document against the config schema. Errors carry the
// offending key path.
SweepConfig parse_config(const std::string& json_text);

struct SweepRow {
  double r = 0.0;
  double omega = 0.0;
  double omega_crit_case_a = 0.0;
  double omega_crit_case_b = 0.0;
  std::string phase;  // "normal" | "superradiant"
  std::optional<double> gap_analytic;
  std::optional<double> gap_superradiant;
  std::optional<double> gap_ed;
  std::optional<double> mean_photons_ed;
  std::optional<int> cutoff_used;
  std::optional<bool> converged;
};

// Row-major sweep (r outer, coupling inner). Cells are independent pure
// computations; any worker count produces identical output. n_threads <= 0
// selects hardware concurrency capped by the SQJC_THREADS environment
// variable.
std::vector<SweepRow> run_sweep(const SweepConfig& config, int n_threads = 0);

// Fixed header, 12 significant digits, LF newlines, empty optionals as
// empty fields. Returns the byte count written.
size_t write_csv(const std::vector<SweepRow>& rows, std::ostream& sink);

}  // namespace sqjc
