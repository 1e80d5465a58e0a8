#pragma once

#include "sqjc/models.hpp"

#include <functional>
#include <vector>

namespace sqjc {

struct SpectrumResult {
  std::vector<double> energies;  // ascending, lowest n_levels
  int cutoff_used = 0;
  bool converged = false;

  double gap() const { return energies[1] - energies[0]; }
};

// Lowest n_levels eigenvalues of a Hermitian operator. Single-cutoff call:
// no convergence claim is made.
SpectrumResult spectrum_ed(const OperatorMatrix& h, int n_levels);

using HamiltonianBuilder = std::function<OperatorMatrix(const FockSpace&)>;

struct ConvergenceSettings {
  double tol = 1e-8;
  int n_start = 32;
  int n_max = 512;
};

// Doubles the cutoff from n_start until every requested level changes by
// less than tol between successive cutoffs. Reaching n_max without
// agreement is flagged via converged = false, with best-effort energies.
SpectrumResult converged_spectrum(const HamiltonianBuilder& builder, int n_levels,
                                  const ConvergenceSettings& settings = {});

struct GroundObservables {
  double mean_photons;
  double mean_sigma_z;
  double mean_quadrature;
};

// Ground-state expectation values on the joint basis. A degenerate ground
// space is resolved by maximizing <sigma_z> over the degenerate span, which
// makes observables reproducible at exact level crossings.
GroundObservables ground_observables(const OperatorMatrix& h, const FockSpace& space);

struct GapScanPoint {
  double omega;
  double gap;
  double mean_photons;
  int cutoff_used;
  bool converged;
};

// Converged gap and ground photon number across a coupling grid, holding
// the remaining parameters fixed. Results are in input-grid order.
std::vector<GapScanPoint> gap_scan(const ModelParams& base,
                                   const std::vector<double>& couplings,
                                   const ConvergenceSettings& settings = {});

struct GapMinimum {
  double omega;
  double gap;
};

// Grid minimum with three-point parabolic refinement; falls back to the
// grid point at the scan edge or when the parabola degenerates.
GapMinimum refine_gap_minimum(const std::vector<GapScanPoint>& scan);

// Interior-block distance between the exact projected conjugation and the
// quadratic form generated by the same v. Measures the truncated-commutator
// approximation error.
double bch_truncation_error(const ModelParams& params, double v,
                            const FockSpace& space);

}  // namespace sqjc
