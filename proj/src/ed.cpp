#include "sqjc/ed.hpp"

#include "sqjc/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace sqjc {

namespace {

double real_expectation(const Eigen::VectorXcd& state, const Matrix& op) {
  return (state.adjoint() * op * state)(0, 0).real();
}

}  // namespace

SpectrumResult spectrum_ed(const OperatorMatrix& h, int n_levels) {
  if (n_levels < 1 || n_levels > h.dim()) {
    throw std::invalid_argument("spectrum_ed: n_levels out of range");
  }
  const EigenResult eig = herm_eigen(h);
  SpectrumResult out;
  out.energies.assign(eig.values.data(), eig.values.data() + n_levels);
  out.converged = false;
  return out;
}

SpectrumResult converged_spectrum(const HamiltonianBuilder& builder, int n_levels,
                                  const ConvergenceSettings& settings) {
  if (!(settings.tol > 0.0) || settings.n_start >= settings.n_max) {
    throw std::invalid_argument("converged_spectrum: invalid settings");
  }
  SpectrumResult prev = spectrum_ed(builder(FockSpace(settings.n_start)), n_levels);
  prev.cutoff_used = settings.n_start;
  for (int cutoff = 2 * settings.n_start; cutoff <= settings.n_max; cutoff *= 2) {
    SpectrumResult cur = spectrum_ed(builder(FockSpace(cutoff)), n_levels);
    cur.cutoff_used = cutoff;
    double change = 0.0;
    for (int i = 0; i < n_levels; ++i) {
      change = std::max(change, std::abs(cur.energies[i] - prev.energies[i]));
    }
    if (change < settings.tol) {
      cur.converged = true;
      return cur;
    }
    prev = std::move(cur);
  }
  prev.converged = false;
  return prev;
}

GroundObservables ground_observables(const OperatorMatrix& h, const FockSpace& space) {
  if (h.basis != Basis::Joint || h.dim() != space.joint_dim()) {
    throw std::invalid_argument("ground_observables: joint-basis input required");
  }
  const EigenResult eig = herm_eigen(h);

  const PauliOps pauli = pauli_ops();
  const OperatorMatrix number_joint = tensor(number_op(space), pauli.id);
  const OperatorMatrix sz_joint = tensor(identity(space, Basis::Oscillator), pauli.sz);
  const OperatorMatrix a = annihilation(space);
  const OperatorMatrix quad_joint = tensor(a + a.adjoint(), pauli.id);

  // Collect the (near-)degenerate ground span.
  const double window = 1e-10 * std::max(1.0, std::abs(eig.values(0)));
  int degeneracy = 1;
  while (degeneracy < h.dim() &&
         eig.values(degeneracy) - eig.values(0) <= window) {
    ++degeneracy;
  }

  Eigen::VectorXcd ground = eig.vectors.col(0);
  if (degeneracy > 1) {
    // Maximize <sigma_z> over the span: top eigenvector of the projected
    // sigma_z block, expanded back to the full basis.
    const Matrix span = eig.vectors.leftCols(degeneracy);
    const Matrix sz_block = span.adjoint() * sz_joint.mat * span;
    Eigen::SelfAdjointEigenSolver<Matrix> block_solver(sz_block);
    ground = span * block_solver.eigenvectors().col(degeneracy - 1);
  }
  ground.normalize();

  GroundObservables out;
  out.mean_photons = real_expectation(ground, number_joint.mat);
  out.mean_sigma_z = real_expectation(ground, sz_joint.mat);
  out.mean_quadrature = real_expectation(ground, quad_joint.mat);
  return out;
}

std::vector<GapScanPoint> gap_scan(const ModelParams& base,
                                   const std::vector<double>& couplings,
                                   const ConvergenceSettings& settings) {
  for (size_t i = 1; i < couplings.size(); ++i) {
    if (couplings[i] < couplings[i - 1]) {
      throw std::invalid_argument("gap_scan: coupling grid must be ascending");
    }
  }
  std::vector<GapScanPoint> out;
  out.reserve(couplings.size());
  for (double omega : couplings) {
    const ModelParams point(base.omega_c, base.omega_a, omega, base.squeeze);
    const auto builder = [&point](const FockSpace& space) {
      return build_mjc(point, space);
    };
    const SpectrumResult spectrum = converged_spectrum(builder, 2, settings);
    const FockSpace space(spectrum.cutoff_used);
    const GroundObservables obs = ground_observables(build_mjc(point, space), space);
    out.push_back({omega, spectrum.gap(), obs.mean_photons, spectrum.cutoff_used,
                   spectrum.converged});
  }
  return out;
}

GapMinimum refine_gap_minimum(const std::vector<GapScanPoint>& scan) {
  if (scan.empty()) {
    throw std::invalid_argument("refine_gap_minimum: empty scan");
  }
  size_t best = 0;
  for (size_t i = 1; i < scan.size(); ++i) {
    if (scan[i].gap < scan[best].gap) best = i;
  }
  GapMinimum out{scan[best].omega, scan[best].gap};
  if (best == 0 || best + 1 == scan.size()) return out;

  // Three-point parabola through the bracketing neighbors.
  const double x0 = scan[best - 1].omega, y0 = scan[best - 1].gap;
  const double x1 = scan[best].omega, y1 = scan[best].gap;
  const double x2 = scan[best + 1].omega, y2 = scan[best + 1].gap;
  const double denom = (x1 - x0) * (y1 - y2) - (x1 - x2) * (y1 - y0);
  if (denom == 0.0) return out;
  const double vertex =
      x1 - 0.5 *
               ((x1 - x0) * (x1 - x0) * (y1 - y2) -
                (x1 - x2) * (x1 - x2) * (y1 - y0)) /
               denom;
  if (vertex > x0 && vertex < x2) out.omega = vertex;
  return out;
}

double bch_truncation_error(const ModelParams& params, double v,
                            const FockSpace& space) {
  const OperatorMatrix exact =
      conjugate_project_down(build_mjc(params, space), v, params, space);
  const QuadraticCoeffs coeffs = abc_coefficients(params, v);
  const OperatorMatrix quadratic =
      build_quadratic(coeffs.a, coeffs.b, coeffs.c, space);
  return interior_block_distance(exact, quadratic, default_interior_levels(space));
}

}  // namespace sqjc
