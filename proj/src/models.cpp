#include "sqjc/models.hpp"

#include <cmath>
#include <stdexcept>

namespace sqjc {

namespace {

void require_zero_phase(const ModelParams& params, const char* who) {
  if (params.phase != 0.0) {
    throw std::invalid_argument(std::string(who) +
                                ": squeeze phase must be zero");
  }
}

}  // namespace

ModelParams::ModelParams(double omega_c_, double omega_a_, double coupling_,
                         double squeeze_, double phase_)
    : omega_c(omega_c_),
      omega_a(omega_a_),
      coupling(coupling_),
      squeeze(squeeze_),
      phase(phase_) {
  if (!(omega_c > 0.0)) throw std::invalid_argument("omega_c must be positive");
  if (!(omega_a > 0.0)) throw std::invalid_argument("omega_a must be positive");
  if (coupling < 0.0) throw std::invalid_argument("coupling must be nonnegative");
  if (squeeze < 0.0) throw std::invalid_argument("squeeze must be nonnegative");
}

RabiParams::RabiParams(double omega_c_, double omega_a_, double coupling_)
    : omega_c(omega_c_), omega_a(omega_a_), coupling(coupling_) {
  if (!(omega_c > 0.0)) throw std::invalid_argument("omega_c must be positive");
  if (!(omega_a > 0.0)) throw std::invalid_argument("omega_a must be positive");
}

OperatorMatrix squeeze_operator(const FockSpace& space, double squeeze,
                                double phase) {
  if (squeeze < 0.0) {
    throw std::invalid_argument("squeeze_operator: squeeze must be nonnegative");
  }
  const Complex zeta = std::polar(squeeze, phase);
  const OperatorMatrix a = annihilation(space);
  const OperatorMatrix ad = a.adjoint();
  const OperatorMatrix generator =
      (-0.5 * zeta) * (ad * ad) + (0.5 * std::conj(zeta)) * (a * a);
  return unitary_exp(generator);
}

OperatorMatrix squeezed_annihilation(const FockSpace& space, double squeeze,
                                     double phase) {
  if (squeeze < 0.0) {
    throw std::invalid_argument(
        "squeezed_annihilation: squeeze must be nonnegative");
  }
  const OperatorMatrix a = annihilation(space);
  return std::cosh(squeeze) * a +
         (std::polar(1.0, phase) * std::sinh(squeeze)) * a.adjoint();
}

OperatorMatrix displacement_operator(const FockSpace& space, double alpha) {
  const OperatorMatrix a = annihilation(space);
  return unitary_exp(alpha * (a.adjoint() - a));
}

OperatorMatrix build_mjc(const ModelParams& params, const FockSpace& space) {
  require_zero_phase(params, "build_mjc");
  const PauliOps s = pauli_ops();
  const OperatorMatrix a = annihilation(space);
  const OperatorMatrix ad = a.adjoint();

  OperatorMatrix h = params.omega_c * tensor(number_op(space), s.id) +
                     (0.5 * params.omega_a) * tensor(identity(space, Basis::Oscillator), s.sz);
  const double half = 0.5 * params.coupling;
  h = h + (half * std::cosh(params.squeeze)) * (tensor(a, s.sp) + tensor(ad, s.sm));
  h = h + (half * std::sinh(params.squeeze)) * (tensor(a, s.sm) + tensor(ad, s.sp));
  return h;
}

OperatorMatrix build_jcm(const ModelParams& params, const FockSpace& space) {
  const PauliOps s = pauli_ops();
  const OperatorMatrix a = annihilation(space);
  OperatorMatrix h = params.omega_c * tensor(number_op(space), s.id) +
                     (0.5 * params.omega_a) * tensor(identity(space, Basis::Oscillator), s.sz);
  h = h + (0.5 * params.coupling) * (tensor(a, s.sp) + tensor(a.adjoint(), s.sm));
  return h;
}

OperatorMatrix build_rabi(const RabiParams& params, const FockSpace& space) {
  const PauliOps s = pauli_ops();
  const OperatorMatrix a = annihilation(space);
  OperatorMatrix h = params.omega_c * tensor(number_op(space), s.id) +
                     (0.5 * params.omega_a) * tensor(identity(space, Basis::Oscillator), s.sz);
  h = h + (-params.coupling) * tensor(a + a.adjoint(), s.sx);
  return h;
}

OperatorMatrix build_displaced(const ModelParams& params, double alpha,
                               const FockSpace& space) {
  require_zero_phase(params, "build_displaced");
  const PauliOps s = pauli_ops();
  const OperatorMatrix a = annihilation(space);
  const OperatorMatrix ad = a.adjoint();
  const OperatorMatrix osc_id = identity(space, Basis::Oscillator);
  const double er = std::exp(params.squeeze);

  // (a^dag + alpha)(a + alpha) = n + alpha (a + a^dag) + alpha^2
  OperatorMatrix shifted_number =
      number_op(space) + alpha * (a + ad) + (alpha * alpha) * osc_id;

  OperatorMatrix h = params.omega_c * tensor(shifted_number, s.id) +
                     (0.5 * params.omega_a) * tensor(osc_id, s.sz) +
                     (0.5 * params.coupling * alpha * er) * tensor(osc_id, s.sx);
  const double half = 0.5 * params.coupling;
  h = h + (half * std::cosh(params.squeeze)) * (tensor(a, s.sp) + tensor(ad, s.sm));
  h = h + (half * std::sinh(params.squeeze)) * (tensor(a, s.sm) + tensor(ad, s.sp));
  return h;
}

OperatorMatrix build_generic_rabi(double number_coeff, double constant,
                                  double tz_coeff, double exchange_coeff,
                                  const FockSpace& space) {
  const PauliOps s = pauli_ops();
  const OperatorMatrix a = annihilation(space);
  const OperatorMatrix osc_id = identity(space, Basis::Oscillator);
  return number_coeff * tensor(number_op(space), s.id) +
         constant * tensor(osc_id, s.id) + tz_coeff * tensor(osc_id, s.sz) +
         exchange_coeff * tensor(a + a.adjoint(), s.sx);
}

OperatorMatrix build_quadratic(double number_coeff, double constant,
                               double quadrature_coeff, const FockSpace& space) {
  const OperatorMatrix a = annihilation(space);
  const OperatorMatrix quad = a + a.adjoint();
  return number_coeff * number_op(space) +
         constant * identity(space, Basis::Oscillator) +
         quadrature_coeff * (quad * quad);
}

OperatorMatrix decoupling_unitary(const ModelParams& params, double v,
                                  const FockSpace& space) {
  require_zero_phase(params, "decoupling_unitary");
  const PauliOps s = pauli_ops();
  const OperatorMatrix b = squeezed_annihilation(space, params.squeeze);
  return unitary_exp((-v) * (tensor(b.adjoint(), s.sp) - tensor(b, s.sm)));
}

OperatorMatrix conjugate_project_down(const OperatorMatrix& h, double v,
                                      const ModelParams& params,
                                      const FockSpace& space) {
  if (h.basis != Basis::Joint || h.dim() != space.joint_dim()) {
    throw std::invalid_argument("conjugate_project_down: joint-basis input required");
  }
  const OperatorMatrix u = decoupling_unitary(params, v, space);
  const Matrix rotated = u.mat.adjoint() * h.mat * u.mat;
  const int d = space.osc_dim();
  Matrix down = Matrix::Zero(d, d);
  for (int n = 0; n < d; ++n) {
    for (int m = 0; m < d; ++m) {
      down(n, m) = rotated(2 * n, 2 * m);
    }
  }
  return {std::move(down), Basis::Oscillator};
}

int auto_cutoff(const ModelParams& params, double alpha) {
  const double sh = std::sinh(params.squeeze);
  return static_cast<int>(std::ceil(10.0 * (sh * sh + alpha * alpha + 1.0) + 20.0));
}

}  // namespace sqjc
