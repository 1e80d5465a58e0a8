#pragma once

#include "sqjc/models.hpp"

#include <stdexcept>
#include <vector>

namespace sqjc {

// Requested point lies at or beyond a phase boundary: the excitation gap
// would be zero or imaginary there. In-band signal used for phase
// classification, not a crash.
class UnphysicalRegime : public std::domain_error {
 public:
  explicit UnphysicalRegime(const std::string& what) : std::domain_error(what) {}
};

class DegenerateInput : public std::invalid_argument {
 public:
  explicit DegenerateInput(const std::string& what)
      : std::invalid_argument(what) {}
};

// Effective quadratic form A n + B + C (a + a^dag)^2 generated by the
// decoupling transformation at parameter v.
struct QuadraticCoeffs {
  double a;  // n coefficient
  double b;  // constant
  double c;  // (a + a^dag)^2 coefficient
  double v;  // transformation parameter that generated the triple
};

struct BogoliubovResult {
  double beta;           // mode-mixing parameter
  double gap;            // excitation energy sqrt(A (A + 4C))
  double ground_energy;  // B - A/2 + gap/2
};

enum class CriticalBranch { CaseA, CaseB };

struct CriticalPoint {
  CriticalBranch branch;
  double omega_crit;
  double squeeze;
};

struct NormalPhaseCoeffs {
  double half_2b_minus_a;  // (2B - A)/2
  double a;
  double a_plus_4c;
};

struct SuperradiantParams {
  double alpha;        // displacement
  double theta;        // spin-basis tilt, tan(2 theta) = alpha Omega e^r / omega_a
  double omega_tilde;  // tilted transition frequency
  double mu;           // -M / (2L)
  double j, k, l, m;   // generic-Rabi constants
  double g;            // dimensionless coupling Omega / Omega_crit(case B)
};

struct GapResult {
  double gap;
  double constant;  // ground-energy constant accompanying the gap formula
};

struct SuperradiantJcmResult {
  double gap;
  double alpha_sq;
};

struct SuperradiantRabiResult {
  double gap;
  double lambda;
  double alpha_sq;
};

QuadraticCoeffs abc_coefficients(const ModelParams& params, double v);

// The decoupling choice v = Omega / (2 (omega_a + omega_c e^{-2r})).
double v_standard(const ModelParams& params);

// Real roots of A(v) = 0 (case A), ascending. Empty result signals the
// normal phase; a degenerate root marks the critical coupling.
std::vector<double> v_roots_case_a(const ModelParams& params);

// Real roots of A(v) + 4 C(v) = 0 (case B), ascending.
std::vector<double> v_roots_case_b(const ModelParams& params);

// Case A: Omega_c^2 = 4 omega_c (omega_c + omega_a e^{-2r}) e^{4r}.
// Case B: Omega_c^2 = 4 omega_c (omega_a + omega_c e^{-2r}) e^{-2r}.
CriticalPoint critical_coupling(CriticalBranch branch, double omega_c,
                                double omega_a, double squeeze);

// Diagonalize A n + B + C (a + a^dag)^2. Requires A > 0 and A + 4C > 0;
// throws UnphysicalRegime otherwise.
BogoliubovResult bogoliubov(const QuadraticCoeffs& coeffs);

// Closed forms of (2B - A)/2, A, A + 4C at v = v_standard.
NormalPhaseCoeffs normal_phase_coeffs(const ModelParams& params);

// Normal-phase gap of the rotating-wave model (squeeze = 0 required):
// omega_c sqrt((1 + 3x)(1 - x)) with x = Omega^2 / (4 omega_c (omega_a + omega_c)).
GapResult jcm_gap(const ModelParams& params);

// Normal-phase gap omega_c sqrt(1 - 4 lambda^2/(omega_a omega_c)).
GapResult rabi_gap(double omega_c, double omega_a, double lambda);

// Tilted-spin constants for a displaced frame. Requires coupling > 0
// (mu is undefined otherwise).
SuperradiantParams superradiant_setup(const ModelParams& params, double alpha);

// Excitation energy J sqrt(1 + 8 mu (M + mu L)/J) of the projected
// generic-Rabi form.
double superradiant_gap_generic(double number_coeff, double tz_coeff,
                                double exchange_coeff, double mu);

// Superradiant branch at squeeze = 0: alpha^2 chosen so that
// cos(2 theta) = Omega_c^2/Omega^2, giving gap = omega_c sqrt(1 - Omega_c^4/Omega^4).
SuperradiantJcmResult superradiant_gap_jcm(double omega_c, double omega_a,
                                           double omega);

// Superradiant branch of the Rabi model at dimensionless coupling g >= 1:
// gap = omega_c sqrt(1 - g^-4).
SuperradiantRabiResult superradiant_gap_rabi(double omega_c, double omega_a,
                                             double g);

}  // namespace sqjc
