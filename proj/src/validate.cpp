#include "sqjc/validate.hpp"

#include "sqjc/analytic.hpp"
#include "sqjc/ed.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace sqjc {

namespace {

// Deterministic uniform independent of the standard-library distribution
// implementation.
class UniformSource {
 public:
  explicit UniformSource(unsigned seed) : engine_(seed) {}

  double in(double lo, double hi) {
    const double unit = static_cast<double>(engine_()) /
                        (static_cast<double>(engine_.max()) + 1.0);
    return lo + (hi - lo) * unit;
  }

 private:
  std::mt19937 engine_;
};

std::string format_max(const char* label, double value) {
  std::ostringstream out;
  out << label << " " << value;
  return out.str();
}

struct Tracker {
  double worst = 0.0;
  bool ok = true;

  void check(double deviation, double tol) {
    worst = std::max(worst, deviation);
    if (!(deviation <= tol)) ok = false;
  }
};

SuiteResult operator_identities(const ValidateOptions& options) {
  SuiteResult result{"operator identities", true, ""};
  Tracker tracker;

  // Truncation identity [a, a^dag] = I except the bottom diagonal entry -N,
  // to machine precision relative to the truncation size.
  const int n_top = options.full ? 200 : 50;
  for (int n = 1; n <= n_top; ++n) {
    const FockSpace space(n);
    const OperatorMatrix a = annihilation(space);
    Matrix expected = Matrix::Identity(space.osc_dim(), space.osc_dim());
    expected(n, n) = -static_cast<double>(n);
    tracker.check(max_abs_diff(commutator(a, a.adjoint()).mat, expected) /
                      std::max(1.0, static_cast<double>(n)),
                  1e-14);
  }

  // Squeeze conjugation against the closed-form squeezed mode. Conjugating
  // the leading k levels by squeeze r needs ~k e^{2r} retained levels, so
  // the cutoff scales with r.
  {
    const std::vector<std::pair<double, int>> cases =
        options.full
            ? std::vector<std::pair<double, int>>{{0.3, 120}, {0.8, 200}, {1.2, 480}}
            : std::vector<std::pair<double, int>>{{0.5, 120}};
    const double pi = std::acos(-1.0);
    for (const auto& [r, cutoff] : cases) {
      const FockSpace space(cutoff);
      const OperatorMatrix s_plus = squeeze_operator(space, r);
      // S(-zeta) = S(r e^{i(phi + pi)}) built independently, not as adjoint.
      const OperatorMatrix s_minus = squeeze_operator(space, r, pi);
      const OperatorMatrix conjugated = s_plus * annihilation(space) * s_minus;
      tracker.check(
          interior_block_distance(conjugated, squeezed_annihilation(space, r), 20),
          1e-8);
      tracker.check(
          max_abs_diff((s_plus * s_minus).mat,
                       Matrix::Identity(space.osc_dim(), space.osc_dim())),
          1e-9);
    }
  }

  // Squeezed-mode commutator on the interior block.
  {
    const FockSpace space(40);
    const OperatorMatrix b = squeezed_annihilation(space, 0.7);
    tracker.check(
        interior_block_distance(commutator(b, b.adjoint()),
                                identity(space, Basis::Oscillator), 20),
        1e-12);
  }

  // Unitarity of spectral exponentials for random anti-Hermitian input.
  {
    UniformSource rng(options.seed ^ 0x5a5au);
    const FockSpace space(11);
    const int d = space.osc_dim();
    for (int sample = 0; sample < 5; ++sample) {
      Matrix raw(d, d);
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          raw(i, j) = Complex(rng.in(-1, 1), rng.in(-1, 1));
        }
      }
      Matrix anti = 0.5 * (raw - raw.adjoint());
      anti *= 5.0 / std::max(1.0, max_abs(anti));
      const OperatorMatrix u = unitary_exp({anti, Basis::Oscillator});
      tracker.check(max_abs_diff((u.adjoint() * u).mat, Matrix::Identity(d, d)),
                    1e-9);
    }
  }

  result.passed = tracker.ok;
  result.detail = format_max("max deviation", tracker.worst);
  return result;
}

SuiteResult limit_reductions(const ValidateOptions& options) {
  SuiteResult result{"limit reductions", true, ""};
  Tracker tracker;
  const FockSpace space(options.full ? 24 : 12);
  const PauliOps pauli = pauli_ops();

  // Zero squeeze reduces exactly to the rotating-wave model.
  {
    const ModelParams params(1.0, 0.8, 0.6, 0.0);
    tracker.check(
        max_abs_diff(build_mjc(params, space).mat, build_jcm(params, space).mat),
        0.0);
  }

  // Photon form vs squeezed-exchange form of the same Hamiltonian.
  {
    const ModelParams params(1.0, 1.3, 0.9, 0.8);
    const OperatorMatrix b = squeezed_annihilation(space, params.squeeze);
    const OperatorMatrix exchange =
        params.omega_c * tensor(number_op(space), pauli.id) +
        (0.5 * params.omega_a) *
            tensor(identity(space, Basis::Oscillator), pauli.sz) +
        (0.5 * params.coupling) * (tensor(b, pauli.sp) + tensor(b.adjoint(), pauli.sm));
    tracker.check(max_abs_diff(build_mjc(params, space).mat, exchange.mat), 1e-13);
  }

  // Strong-squeeze limit approaches the Rabi model, deviation ~ e^{-2r}.
  {
    const double lambda = -0.5;
    const OperatorMatrix rabi =
        build_rabi(RabiParams(1.0, 1.0, lambda), space);
    const double h_scale = max_abs(rabi.mat);
    double previous = std::numeric_limits<double>::infinity();
    for (double r : {2.0, 3.0, 4.0}) {
      const ModelParams params(1.0, 1.0, 4.0 * std::abs(lambda) * std::exp(-r), r);
      const double deviation =
          max_abs_diff(build_mjc(params, space).mat, rabi.mat);
      tracker.check(deviation, 2.0 * std::exp(-2.0 * r) * h_scale);
      if (!(deviation < previous)) tracker.ok = false;
      previous = deviation;
    }
  }

  // Both critical branches coincide at zero squeeze, and the closed-form
  // rotating-wave gap matches the generic normal-phase coefficients.
  {
    const double case_a =
        critical_coupling(CriticalBranch::CaseA, 1.0, 1.0, 0.0).omega_crit;
    const double case_b =
        critical_coupling(CriticalBranch::CaseB, 1.0, 1.0, 0.0).omega_crit;
    tracker.check(std::abs(case_a - case_b), 0.0);

    const ModelParams params(1.0, 1.0, 2.0, 0.0);
    const NormalPhaseCoeffs coeffs = normal_phase_coeffs(params);
    tracker.check(std::abs(jcm_gap(params).gap -
                           std::sqrt(coeffs.a * coeffs.a_plus_4c)),
                  1e-12);
  }

  result.passed = tracker.ok;
  result.detail = format_max("max deviation", tracker.worst);
  return result;
}

SuiteResult identity_chain_one(const ValidateOptions& options) {
  SuiteResult result{"identity chain I", true, ""};
  Tracker tracker;
  UniformSource rng(options.seed);
  const int tuples = options.full ? 200 : 40;

  for (int i = 0; i < tuples; ++i) {
    const ModelParams params(rng.in(0.1, 10.0), rng.in(0.1, 10.0),
                             rng.in(0.0, 5.0), rng.in(0.0, 2.0));
    const NormalPhaseCoeffs closed = normal_phase_coeffs(params);
    double closed_a4c = closed.a_plus_4c;
    if (options.perturb_chain_one) {
      // Flip the sign of the coupling term: wc - t  ->  wc + t.
      closed_a4c = 2.0 * params.omega_c - closed_a4c;
    }

    const QuadraticCoeffs generated = abc_coefficients(params, v_standard(params));
    const double half = generated.b - 0.5 * generated.a;
    const double a4c = generated.a + 4.0 * generated.c;

    const auto rel = [](double x, double y) {
      return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
    };
    tracker.check(rel(closed.half_2b_minus_a, half), 1e-11);
    tracker.check(rel(closed.a, generated.a), 1e-11);
    tracker.check(rel(closed_a4c, a4c), 1e-11);
  }

  result.passed = tracker.ok;
  std::ostringstream detail;
  detail << "max relative deviation " << tracker.worst << " over " << tuples
         << " tuples";
  result.detail = detail.str();
  return result;
}

SuiteResult identity_chain_two(const ValidateOptions& options) {
  SuiteResult result{"identity chain II", true, ""};
  Tracker tracker;

  const int cutoff = options.full ? 200 : 120;
  const std::vector<std::pair<double, double>> pairs =
      options.full
          ? std::vector<std::pair<double, double>>{{1.0, 0.0}, {1.0, 0.5}, {1.0, 2.0}, {2.0, -0.25}}
          : std::vector<std::pair<double, double>>{{1.0, 0.5}};

  const FockSpace space(cutoff);
  for (const auto& [a, c] : pairs) {
    const BogoliubovResult analytic = bogoliubov({a, 0.0, c, 0.0});
    const SpectrumResult spectrum =
        spectrum_ed(build_quadratic(a, 0.0, c, space), 6);
    tracker.check(std::abs(spectrum.energies[0] - analytic.ground_energy), 1e-6);
    for (int level = 0; level + 1 < 6; ++level) {
      tracker.check(std::abs(spectrum.energies[level + 1] -
                             spectrum.energies[level] - analytic.gap),
                    1e-6);
    }
  }

  result.passed = tracker.ok;
  result.detail = format_max("max ladder deviation", tracker.worst);
  return result;
}

SuiteResult identity_chain_three(const ValidateOptions& options) {
  SuiteResult result{"identity chain III", true, ""};
  Tracker tracker;
  const int grid = options.full ? 40 : 10;

  // Superradiant closed form vs the tilted-spin pipeline, rotating-wave case.
  for (int i = 1; i <= grid; ++i) {
    const double wc = 1.0, wa = 1.4;
    const double crit =
        critical_coupling(CriticalBranch::CaseB, wc, wa, 0.0).omega_crit;
    const double omega = crit * (1.0 + 2.0 * static_cast<double>(i) / grid);
    const SuperradiantJcmResult closed = superradiant_gap_jcm(wc, wa, omega);

    const ModelParams params(wc, wa, omega, 0.0);
    const SuperradiantParams setup =
        superradiant_setup(params, std::sqrt(closed.alpha_sq));
    const double pipeline =
        superradiant_gap_generic(setup.j, setup.l, setup.m, setup.mu);
    tracker.check(std::abs(closed.gap - pipeline), 1e-12);
  }

  // Rabi branch vs the cos^2(2 theta) = g^-4 route.
  for (int i = 1; i <= grid; ++i) {
    const double wc = 0.7, wa = 2.0;
    const double g = 1.0 + 2.0 * static_cast<double>(i) / grid;
    const SuperradiantRabiResult closed = superradiant_gap_rabi(wc, wa, g);
    const double cos2t = 1.0 / (g * g);
    const double pipeline = wc * std::sqrt(1.0 - cos2t * cos2t);
    tracker.check(std::abs(closed.gap - pipeline), 1e-12);
  }

  // Square-root gap closure on both sides of the critical point.
  {
    const double wc = 1.0, wa = 1.0;
    const double crit =
        critical_coupling(CriticalBranch::CaseB, wc, wa, 0.0).omega_crit;
    for (double delta : {1e-3, 1e-4, 1e-5}) {
      const double bound = 2.2 * std::sqrt(delta) * wc;
      const ModelParams below(wc, wa, crit * std::sqrt(1.0 - delta), 0.0);
      tracker.check(jcm_gap(below).gap, bound);
      tracker.check(
          superradiant_gap_jcm(wc, wa, crit * std::sqrt(1.0 + delta)).gap, bound);
    }
  }

  result.passed = tracker.ok;
  result.detail = format_max("max deviation", tracker.worst);
  return result;
}

SuiteResult ground_constant(const ValidateOptions&) {
  SuiteResult result{"ground-state constant", true, ""};
  const double a = 1.0, b = 0.7, c = 0.5;
  const BogoliubovResult analytic = bogoliubov({a, b, c, 0.0});
  const SpectrumResult spectrum =
      spectrum_ed(build_quadratic(a, b, c, FockSpace(200)), 2);

  const double half_quantum = b - 0.5 * a + 0.5 * analytic.gap;
  const double full_quantum = b - 0.5 * a + analytic.gap;
  const bool matches_half = std::abs(spectrum.energies[0] - half_quantum) < 1e-6;
  const bool rejects_full = std::abs(spectrum.energies[0] - full_quantum) > 0.1;

  result.passed = matches_half && rejects_full;
  result.detail =
      "ground constant = B - A/2 + eps/2 (half quantum; the full-quantum "
      "variant is off by eps/2)";
  return result;
}

}  // namespace

std::vector<SuiteResult> run_validation(const ValidateOptions& options) {
  std::vector<SuiteResult> results;
  results.push_back(operator_identities(options));
  results.push_back(limit_reductions(options));
  results.push_back(identity_chain_one(options));
  results.push_back(identity_chain_two(options));
  results.push_back(identity_chain_three(options));
  if (options.full) {
    results.push_back(ground_constant(options));
  }
  return results;
}

}  // namespace sqjc
