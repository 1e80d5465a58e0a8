#include "sqjc/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sqjc {

namespace {

// Quadratic p v^2 + q v + s = 0 with degenerate-discriminant snapping: a
// discriminant within a few ulps of zero counts as a double root, so a
// coupling constructed from the critical formula lands on the degenerate
// branch instead of flickering between zero and two roots.
std::vector<double> quadratic_roots(double p, double q, double s) {
  const double disc = q * q - 4.0 * p * s;
  const double scale = std::max(q * q, std::abs(4.0 * p * s));
  const double snap = 16.0 * std::numeric_limits<double>::epsilon() * scale;
  if (disc < -snap) return {};
  if (disc <= snap) return {-q / (2.0 * p)};
  const double root = std::sqrt(disc);
  std::vector<double> out = {(-q - root) / (2.0 * p), (-q + root) / (2.0 * p)};
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

QuadraticCoeffs abc_coefficients(const ModelParams& params, double v) {
  const double wc = params.omega_c;
  const double wa = params.omega_a;
  const double om = params.coupling;
  const double r = params.squeeze;
  const double e2r = std::exp(-2.0 * r);

  QuadraticCoeffs out;
  out.v = v;
  out.a = wc * (1.0 + v * v) + v * (om + wa * v) * e2r;
  out.b = -0.5 * wa * (1.0 - v * v) + 0.5 * v * (om + wa * v) * e2r +
          wc * v * v * std::cosh(r) * std::cosh(r);
  out.c = -0.5 * v * om * std::cosh(2.0 * r) + 0.5 * wa * v * v * std::sinh(2.0 * r);
  return out;
}

double v_standard(const ModelParams& params) {
  return params.coupling /
         (2.0 * (params.omega_a + params.omega_c * std::exp(-2.0 * params.squeeze)));
}

std::vector<double> v_roots_case_a(const ModelParams& params) {
  const double e2r = std::exp(-2.0 * params.squeeze);
  // A(v) = (omega_c + omega_a e^{-2r}) v^2 + Omega e^{-2r} v + omega_c
  return quadratic_roots(params.omega_c + params.omega_a * e2r,
                         params.coupling * e2r, params.omega_c);
}

std::vector<double> v_roots_case_b(const ModelParams& params) {
  const double e2r = std::exp(2.0 * params.squeeze);
  // A(v) + 4C(v) = (omega_c + omega_a e^{2r}) v^2 - Omega e^{2r} v + omega_c
  return quadratic_roots(params.omega_c + params.omega_a * e2r,
                         -params.coupling * e2r, params.omega_c);
}

CriticalPoint critical_coupling(CriticalBranch branch, double omega_c,
                                double omega_a, double squeeze) {
  if (!(omega_c > 0.0) || !(omega_a > 0.0)) {
    throw std::invalid_argument("critical_coupling: frequencies must be positive");
  }
  if (squeeze < 0.0) {
    throw std::invalid_argument("critical_coupling: squeeze must be nonnegative");
  }
  double omega_crit = 0.0;
  if (branch == CriticalBranch::CaseA) {
    omega_crit = 2.0 * std::exp(2.0 * squeeze) *
                 std::sqrt(omega_c * (omega_c + omega_a * std::exp(-2.0 * squeeze)));
  } else {
    omega_crit = 2.0 * std::exp(-squeeze) *
                 std::sqrt(omega_c * (omega_a + omega_c * std::exp(-2.0 * squeeze)));
  }
  return {branch, omega_crit, squeeze};
}

BogoliubovResult bogoliubov(const QuadraticCoeffs& coeffs) {
  const double a = coeffs.a;
  const double a4c = coeffs.a + 4.0 * coeffs.c;
  if (!(a > 0.0) || !(a4c > 0.0)) {
    throw UnphysicalRegime("bogoliubov: requires A > 0 and A + 4C > 0");
  }
  BogoliubovResult out;
  // e^{-4 beta} = (A + 4C)/A; log1p keeps beta accurate as C -> 0.
  out.beta = -0.25 * std::log1p(4.0 * coeffs.c / a);
  out.gap = std::sqrt(a * a4c);
  out.ground_energy = coeffs.b - 0.5 * a + 0.5 * out.gap;
  return out;
}

NormalPhaseCoeffs normal_phase_coeffs(const ModelParams& params) {
  const double wc = params.omega_c;
  const double wa = params.omega_a;
  const double om2 = params.coupling * params.coupling;
  const double r = params.squeeze;
  const double em2r = std::exp(-2.0 * r);
  const double denom = wa + wc * em2r;

  NormalPhaseCoeffs out;
  out.half_2b_minus_a =
      -0.5 * (wa + wc) + 0.125 * om2 * (wa + wc * std::cosh(2.0 * r)) / (denom * denom);
  out.a = wc + 0.25 * om2 * (wc * (1.0 + 2.0 * em2r * em2r) + 3.0 * wa * em2r) /
                   (denom * denom);
  out.a_plus_4c = wc - 0.25 * om2 * std::exp(2.0 * r) / denom;
  return out;
}

GapResult jcm_gap(const ModelParams& params) {
  if (params.squeeze != 0.0) {
    throw std::invalid_argument("jcm_gap: defined for squeeze = 0");
  }
  const double wc = params.omega_c;
  const double wa = params.omega_a;
  const double x = params.coupling * params.coupling / (4.0 * wc * (wa + wc));
  if (x >= 1.0) {
    throw UnphysicalRegime("jcm_gap: coupling at or beyond the critical point");
  }
  GapResult out;
  out.gap = wc * std::sqrt((1.0 + 3.0 * x) * (1.0 - x));
  out.constant = -0.5 * (wa + wc) +
                 params.coupling * params.coupling / (8.0 * (wa + wc));
  return out;
}

GapResult rabi_gap(double omega_c, double omega_a, double lambda) {
  if (!(omega_c > 0.0) || !(omega_a > 0.0)) {
    throw std::invalid_argument("rabi_gap: frequencies must be positive");
  }
  const double x = 4.0 * lambda * lambda / (omega_a * omega_c);
  if (x >= 1.0) {
    throw UnphysicalRegime("rabi_gap: coupling at or beyond the critical point");
  }
  GapResult out;
  out.gap = omega_c * std::sqrt(1.0 - x);
  out.constant = -0.5 * (omega_a + omega_c) +
                 omega_c * lambda * lambda / (omega_a * omega_a);
  return out;
}

SuperradiantParams superradiant_setup(const ModelParams& params, double alpha) {
  if (params.coupling == 0.0) {
    throw DegenerateInput("superradiant_setup: mu undefined at zero coupling");
  }
  const double wc = params.omega_c;
  const double wa = params.omega_a;
  const double er = std::exp(params.squeeze);
  const double drive = alpha * params.coupling * er;

  SuperradiantParams out;
  out.alpha = alpha;
  out.theta = 0.5 * std::atan2(drive, wa);
  out.omega_tilde = std::sqrt(wa * wa + drive * drive);
  const double cos2t = std::cos(2.0 * out.theta);
  out.j = wc;
  out.k = wc * alpha * alpha;
  out.l = params.coupling * params.coupling * er * er / (8.0 * wc);
  out.m = 0.25 * params.coupling * cos2t * er;
  out.mu = -wc * cos2t / (params.coupling * er);
  out.g = params.coupling /
          critical_coupling(CriticalBranch::CaseB, wc, wa, params.squeeze).omega_crit;
  return out;
}

double superradiant_gap_generic(double number_coeff, double tz_coeff,
                                double exchange_coeff, double mu) {
  const double radicand =
      1.0 + 8.0 * mu * (exchange_coeff + mu * tz_coeff) / number_coeff;
  if (radicand < 0.0) {
    throw UnphysicalRegime("superradiant_gap_generic: negative excitation energy");
  }
  return number_coeff * std::sqrt(radicand);
}

SuperradiantJcmResult superradiant_gap_jcm(double omega_c, double omega_a,
                                           double omega) {
  const double omega_crit =
      critical_coupling(CriticalBranch::CaseB, omega_c, omega_a, 0.0).omega_crit;
  if (omega < omega_crit) {
    throw UnphysicalRegime("superradiant_gap_jcm: normal phase below the critical coupling");
  }
  const double ratio2 = (omega_crit * omega_crit) / (omega * omega);
  SuperradiantJcmResult out;
  out.alpha_sq = (omega_a * omega_a / (omega * omega)) *
                 (1.0 / (ratio2 * ratio2) - 1.0);
  out.gap = omega_c * std::sqrt(1.0 - ratio2 * ratio2);
  return out;
}

SuperradiantRabiResult superradiant_gap_rabi(double omega_c, double omega_a,
                                             double g) {
  if (!(omega_c > 0.0) || !(omega_a > 0.0)) {
    throw std::invalid_argument("superradiant_gap_rabi: frequencies must be positive");
  }
  if (g < 1.0) {
    throw UnphysicalRegime("superradiant_gap_rabi: normal phase below g = 1");
  }
  SuperradiantRabiResult out;
  out.lambda = 0.5 * g * std::sqrt(omega_a * omega_c);
  out.alpha_sq = (omega_a / (4.0 * g * g * omega_c)) * (g * g * g * g - 1.0);
  out.gap = omega_c * std::sqrt(1.0 - 1.0 / (g * g * g * g));
  return out;
}

}  // namespace sqjc
