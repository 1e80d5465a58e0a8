#pragma once

#include "sqjc/fock.hpp"

namespace sqjc {

// Model knobs (hbar = 1): cavity frequency, atomic transition frequency,
// exchange coupling Omega, squeeze parameter r, squeeze phase phi.
// Hamiltonian builders require phase = 0; only the squeezed-mode builders
// accept a nonzero phase.
struct ModelParams {
  ModelParams(double omega_c, double omega_a, double coupling,
              double squeeze = 0.0, double phase = 0.0);

  double omega_c;
  double omega_a;
  double coupling;
  double squeeze;
  double phase;
};

struct RabiParams {
  RabiParams(double omega_c, double omega_a, double coupling);

  double omega_c;
  double omega_a;
  double coupling;  // lambda; may be negative
};

// S(zeta) = exp(-(zeta/2) a^dag^2 + (zeta*/2) a^2), zeta = r e^{i phi}.
OperatorMatrix squeeze_operator(const FockSpace& space, double squeeze,
                                double phase = 0.0);

// B = cosh(r) a + e^{i phi} sinh(r) a^dag, built in closed form.
OperatorMatrix squeezed_annihilation(const FockSpace& space, double squeeze,
                                     double phase = 0.0);

// D(alpha) = exp(alpha (a^dag - a)), alpha real.
OperatorMatrix displacement_operator(const FockSpace& space, double alpha);

// omega_c n + omega_a sz/2
//   + (Omega/2)[cosh r (sp a + sm a^dag) + sinh r (sm a + sp a^dag)].
// Identical to the squeezed-exchange form (Omega/2)(sp B + sm B^dag) + frees.
OperatorMatrix build_mjc(const ModelParams& params, const FockSpace& space);

// Rotating-wave model: omega_c n + omega_a sz/2 + (Omega/2)(sp a + sm a^dag).
OperatorMatrix build_jcm(const ModelParams& params, const FockSpace& space);

// omega_c n + omega_a sz/2 - lambda (a + a^dag) sx.
OperatorMatrix build_rabi(const RabiParams& params, const FockSpace& space);

// Displaced frame: omega_c (a^dag + alpha)(a + alpha) + omega_a sz/2
//   + (Omega alpha e^r / 2)(sp + sm) + the squeezed-exchange coupling.
OperatorMatrix build_displaced(const ModelParams& params, double alpha,
                               const FockSpace& space);

// J n + K + L tz + M (a + a^dag) tx with tau matrices structurally equal
// to the sigma matrices.
OperatorMatrix build_generic_rabi(double number_coeff, double constant,
                                  double tz_coeff, double exchange_coeff,
                                  const FockSpace& space);

// Oscillator-only quadratic form A n + B + C (a + a^dag)^2.
OperatorMatrix build_quadratic(double number_coeff, double constant,
                               double quadrature_coeff, const FockSpace& space);

// U = exp(-v (sp B^dag - sm B)), the spin-sector decoupling unitary.
OperatorMatrix decoupling_unitary(const ModelParams& params, double v,
                                  const FockSpace& space);

// Numerically exact spin-down block of U^dag H U, as an oscillator-only
// matrix. Used to measure how well the truncated-commutator quadratic form
// approximates the exact projection.
OperatorMatrix conjugate_project_down(const OperatorMatrix& h, double v,
                                      const ModelParams& params,
                                      const FockSpace& space);

// Cutoff heuristic ceil(10 (sinh^2 r + alpha^2 + 1) + 20): squeezing
// populates ~sinh^2 r photons, displacement ~alpha^2.
int auto_cutoff(const ModelParams& params, double alpha = 0.0);

}  // namespace sqjc
