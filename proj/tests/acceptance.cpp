// Acceptance suite: one pass/fail line per criterion, every tolerance pinned
// in code. Criterion 8 is exploratory and is recorded without gating the
// exit code.

#include "sqjc/analytic.hpp"
#include "sqjc/ed.hpp"
#include "sqjc/sweep.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace sqjc;

namespace {

int g_failures = 0;

class Criterion {
 public:
  Criterion(int index, std::string name, double budget_seconds)
      : index_(index),
        name_(std::move(name)),
        budget_seconds_(budget_seconds),
        start_(std::chrono::steady_clock::now()) {}

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok_ = false;
      problems_ += (problems_.empty() ? "" : "; ") + what;
    }
  }

  void note(const std::string& text) {
    notes_ += (notes_.empty() ? "" : ", ") + text;
  }

  void report(bool gating = true) {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    expect(elapsed <= budget_seconds_,
           "runtime " + std::to_string(elapsed) + "s exceeds " +
               std::to_string(budget_seconds_) + "s");

    const char* tag = ok_ ? "[PASS]" : (gating ? "[FAIL]" : "[RECORDED fail]");
    if (!gating && ok_) tag = "[RECORDED pass]";
    std::cout << tag << " criterion " << index_ << ": " << name_;
    std::cout << " [" << static_cast<int>(elapsed * 1000) << " ms]";
    if (!notes_.empty()) std::cout << " (" << notes_ << ")";
    if (!ok_) std::cout << " -- " << problems_;
    std::cout << "\n" << std::flush;
    if (!ok_ && gating) ++g_failures;
  }

 private:
  int index_;
  std::string name_;
  double budget_seconds_;
  std::chrono::steady_clock::time_point start_;
  bool ok_ = true;
  std::string problems_;
  std::string notes_;
};

std::string fmt(double value) {
  std::ostringstream out;
  out.precision(3);
  out << value;
  return out.str();
}

double uniform(std::mt19937& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng()) /
                           (static_cast<double>(rng.max()) + 1.0));
}

// ---------------------------------------------------------------------------

void criterion_1_operator_algebra() {
  Criterion crit(1, "operator algebra", 10.0);

  // The sqrt(n) entries carry ~ulp(n) rounding, so the identity holds to
  // 1e-14 relative to the truncation size (an absolute 1e-14 at N = 200
  // would demand sub-ulp products).
  double worst_commutator = 0.0;
  for (int n = 1; n <= 200; ++n) {
    const FockSpace space(n);
    const OperatorMatrix a = annihilation(space);
    Matrix expected = Matrix::Identity(space.osc_dim(), space.osc_dim());
    expected(n, n) = -static_cast<double>(n);
    const double defect =
        max_abs_diff(commutator(a, a.adjoint()).mat, expected) /
        std::max(1.0, static_cast<double>(n));
    worst_commutator = std::max(worst_commutator, defect);
  }
  crit.expect(worst_commutator <= 1e-14,
              "ladder commutator defect " + fmt(worst_commutator));
  crit.note("commutator defect " + fmt(worst_commutator) + " of N");

  const FockSpace space(120);
  const double pi = std::acos(-1.0);
  const auto conjugation_defect = [&pi](int cutoff, double r) {
    const FockSpace work(cutoff);
    const OperatorMatrix s = squeeze_operator(work, r);
    const OperatorMatrix s_inv = squeeze_operator(work, r, pi);
    const OperatorMatrix conjugated = s * annihilation(work) * s_inv;
    return interior_block_distance(conjugated, squeezed_annihilation(work, r), 20);
  };

  // The k = 20 block of the closed form is cutoff-independent, so the
  // conjugation is evaluated on a working space covering the squeeze spread
  // ~20 e^{2r} (fixing the working space at 120 regardless of r would test
  // box-reflection artifacts instead of the identity: defects printed below).
  double worst_conjugation = 0.0;
  for (const auto& [r, cutoff] :
       std::vector<std::pair<double, int>>{{0.4, 120}, {0.8, 200}, {1.2, 480}}) {
    worst_conjugation = std::max(worst_conjugation, conjugation_defect(cutoff, r));
  }
  crit.expect(worst_conjugation <= 1e-6,
              "squeeze conjugation defect " + fmt(worst_conjugation));
  crit.note("conjugation defect " + fmt(worst_conjugation) +
            " on spread-adequate cutoffs (fixed N=120 box artifacts: r=0.8 " +
            fmt(conjugation_defect(120, 0.8)) + ", r=1.2 " +
            fmt(conjugation_defect(120, 1.2)) + ")");

  const OperatorMatrix b = squeezed_annihilation(space, 1.2);
  const double commutator_defect = interior_block_distance(
      commutator(b, b.adjoint()), identity(space, Basis::Oscillator), 20);
  crit.expect(commutator_defect <= 1e-12,
              "squeezed-mode commutator defect " + fmt(commutator_defect));

  crit.report();
}

void criterion_2_hamiltonian_equivalences() {
  Criterion crit(2, "Hamiltonian equivalences", 10.0);
  const FockSpace space(40);
  const PauliOps pauli = pauli_ops();

  {
    const ModelParams params(1.0, 0.8, 0.6, 0.0);
    const double defect =
        max_abs_diff(build_mjc(params, space).mat, build_jcm(params, space).mat);
    crit.expect(defect == 0.0, "zero-squeeze reduction defect " + fmt(defect));
  }
  {
    const ModelParams params(1.0, 1.3, 0.9, 0.8);
    const OperatorMatrix b = squeezed_annihilation(space, params.squeeze);
    const OperatorMatrix exchange =
        params.omega_c * tensor(number_op(space), pauli.id) +
        (0.5 * params.omega_a) *
            tensor(identity(space, Basis::Oscillator), pauli.sz) +
        (0.5 * params.coupling) *
            (tensor(b, pauli.sp) + tensor(b.adjoint(), pauli.sm));
    const double defect = max_abs_diff(build_mjc(params, space).mat, exchange.mat);
    crit.expect(defect <= 1e-13, "exchange-form defect " + fmt(defect));
    crit.note("form defect " + fmt(defect));
  }
  {
    const double lambda = -0.5;
    const OperatorMatrix rabi = build_rabi(RabiParams(1.0, 1.0, lambda), space);
    const double scale = max_abs(rabi.mat);
    double previous = std::numeric_limits<double>::infinity();
    for (double r : {2.0, 3.0, 4.0}) {
      const ModelParams params(1.0, 1.0, 4.0 * std::abs(lambda) * std::exp(-r), r);
      const double deviation =
          max_abs_diff(build_mjc(params, space).mat, rabi.mat);
      crit.expect(deviation <= 2.0 * std::exp(-2.0 * r) * scale,
                  "strong-squeeze deviation " + fmt(deviation) + " at r=" + fmt(r));
      crit.expect(deviation < previous, "deviation not decreasing at r=" + fmt(r));
      previous = deviation;
    }
    crit.note("final deviation " + fmt(previous));
  }
  crit.report();
}

void criterion_3_bogoliubov_vs_ed() {
  Criterion crit(3, "Bogoliubov vs exact diagonalization", 20.0);
  const FockSpace space(200);
  double worst = 0.0;
  for (const auto& [a, c] : std::vector<std::pair<double, double>>{
           {1.0, 0.0}, {1.0, 0.5}, {1.0, 2.0}, {2.0, -0.25}}) {
    const BogoliubovResult analytic = bogoliubov({a, 0.0, c, 0.0});
    const SpectrumResult spectrum =
        spectrum_ed(build_quadratic(a, 0.0, c, space), 6);

    const double ground_defect =
        std::abs(spectrum.energies[0] - (-0.5 * a + 0.5 * analytic.gap));
    crit.expect(ground_defect <= 1e-6,
                "ground defect " + fmt(ground_defect) + " at C=" + fmt(c));
    worst = std::max(worst, ground_defect);

    for (int i = 0; i + 1 < 6; ++i) {
      const double spacing_defect = std::abs(
          spectrum.energies[i + 1] - spectrum.energies[i] - analytic.gap);
      crit.expect(spacing_defect <= 1e-6,
                  "spacing defect " + fmt(spacing_defect) + " at C=" + fmt(c));
      worst = std::max(worst, spacing_defect);
    }

    // the full-quantum ground constant is clearly rejected
    const double full_quantum_defect =
        std::abs(spectrum.energies[0] - (-0.5 * a + analytic.gap));
    crit.expect(full_quantum_defect > 0.4 * analytic.gap,
                "full-quantum constant not distinguishable at C=" + fmt(c));
  }
  crit.note("max ladder defect " + fmt(worst) +
            ", ground constant = -A/2 + gap/2 (half quantum)");
  crit.report();
}

void criterion_4_identity_chain_one() {
  Criterion crit(4, "normal-phase closed forms vs generating coefficients", 1.0);
  std::mt19937 rng(20240403);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const ModelParams params(uniform(rng, 0.1, 10.0), uniform(rng, 0.1, 10.0),
                             uniform(rng, 0.0, 5.0), uniform(rng, 0.0, 2.0));
    const NormalPhaseCoeffs closed = normal_phase_coeffs(params);
    const QuadraticCoeffs gen = abc_coefficients(params, v_standard(params));
    const auto rel = [](double x, double y) {
      return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
    };
    worst = std::max({worst, rel(closed.half_2b_minus_a, gen.b - 0.5 * gen.a),
                      rel(closed.a, gen.a),
                      rel(closed.a_plus_4c, gen.a + 4.0 * gen.c)});
  }
  crit.expect(worst <= 1e-11, "relative defect " + fmt(worst));
  crit.note("max relative defect " + fmt(worst) + " over 200 tuples");
  crit.report();
}

void criterion_5_critical_points() {
  Criterion crit(5, "critical points", 5.0);

  const double case_b =
      critical_coupling(CriticalBranch::CaseB, 1.0, 1.0, 0.0).omega_crit;
  const double case_a =
      critical_coupling(CriticalBranch::CaseA, 1.0, 1.0, 0.0).omega_crit;
  crit.expect(case_b == 2.0 * std::sqrt(1.0 * (1.0 + 1.0)),
              "closed form at zero squeeze");
  crit.expect(case_a == case_b, "branch agreement at zero squeeze");

  double worst_bisection = 0.0;
  for (double r : {0.0, 0.5, 1.0, 2.0}) {
    const double expected =
        critical_coupling(CriticalBranch::CaseB, 1.0, 1.0, r).omega_crit;
    double lo = 0.0, hi = 10.0;
    for (int iter = 0; iter < 80; ++iter) {
      const double mid = 0.5 * (lo + hi);
      (v_roots_case_b(ModelParams(1.0, 1.0, mid, r)).empty() ? lo : hi) = mid;
    }
    worst_bisection = std::max(worst_bisection, std::abs(0.5 * (lo + hi) - expected));
  }
  crit.expect(worst_bisection <= 1e-10,
              "bisection defect " + fmt(worst_bisection));
  crit.note("bisection defect " + fmt(worst_bisection));

  // strong-squeeze mapping lambda = Omega_c e^r / 4 recovers the Rabi value
  const double r = 8.0;
  const double mapped =
      critical_coupling(CriticalBranch::CaseB, 1.0, 1.0, r).omega_crit *
      std::exp(r) / 4.0;
  const double lambda_defect = std::abs(mapped - 0.5);
  crit.expect(lambda_defect <= 1e-6, "lambda_crit defect " + fmt(lambda_defect));
  crit.note("lambda_crit defect " + fmt(lambda_defect));

  crit.report();
}

void criterion_6_superradiant_identities() {
  Criterion crit(6, "superradiant identities", 1.0);
  double worst_pipeline = 0.0;

  for (int i = 1; i <= 40; ++i) {
    const double wc = 1.0, wa = 1.4;
    const double crit_omega =
        critical_coupling(CriticalBranch::CaseB, wc, wa, 0.0).omega_crit;
    const double omega = crit_omega * (1.0 + 2.0 * i / 40.0);
    const SuperradiantJcmResult closed = superradiant_gap_jcm(wc, wa, omega);
    const SuperradiantParams setup = superradiant_setup(
        ModelParams(wc, wa, omega, 0.0), std::sqrt(closed.alpha_sq));
    const double pipeline =
        superradiant_gap_generic(setup.j, setup.l, setup.m, setup.mu);
    worst_pipeline = std::max(worst_pipeline, std::abs(pipeline - closed.gap));
  }
  for (int i = 1; i <= 40; ++i) {
    const double wc = 0.7, wa = 2.0;
    const double g = 1.0 + 2.0 * i / 40.0;
    const SuperradiantRabiResult closed = superradiant_gap_rabi(wc, wa, g);
    const double cos2t = 1.0 / (g * g);
    worst_pipeline = std::max(
        worst_pipeline,
        std::abs(wc * std::sqrt(1.0 - cos2t * cos2t) - closed.gap));
  }
  crit.expect(worst_pipeline <= 1e-12, "pipeline defect " + fmt(worst_pipeline));
  crit.note("pipeline defect " + fmt(worst_pipeline));

  double worst_ratio = 0.0;
  const double crit_omega =
      critical_coupling(CriticalBranch::CaseB, 1.0, 1.0, 0.0).omega_crit;
  for (double delta : {1e-3, 1e-4, 1e-5, 1e-6}) {
    const double bound = 2.2 * std::sqrt(delta);
    const double below =
        jcm_gap(ModelParams(1.0, 1.0, crit_omega * std::sqrt(1.0 - delta))).gap;
    const double above =
        superradiant_gap_jcm(1.0, 1.0, crit_omega * std::sqrt(1.0 + delta)).gap;
    crit.expect(below <= bound, "normal-side closure at delta=" + fmt(delta));
    crit.expect(above <= bound, "superradiant-side closure at delta=" + fmt(delta));
    worst_ratio = std::max({worst_ratio, below / bound, above / bound});
  }
  crit.note("closure ratio " + fmt(worst_ratio));
  crit.report();
}

void criterion_7_finite_size_transition() {
  Criterion crit(7, "finite-size ground-level crossing", 60.0);
  const FockSpace space(64);
  const double wc = 1.0, wa = 20.0;

  const auto excitation = [&](double omega) {
    const GroundObservables obs =
        ground_observables(build_jcm(ModelParams(wc, wa, omega), space), space);
    return obs.mean_photons + 0.5 * obs.mean_sigma_z + 0.5;
  };

  double lo = 8.0, hi = 9.2;
  crit.expect(excitation(lo) < 0.5 && excitation(hi) > 0.5,
              "bracket does not straddle the crossing");
  for (int iter = 0; iter < 60; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (excitation(mid) < 0.5 ? lo : hi) = mid;
  }
  const double crossing = 0.5 * (lo + hi);

  const double analytic =
      critical_coupling(CriticalBranch::CaseB, wc, wa, 0.0).omega_crit;
  const double relative = std::abs(crossing - analytic) / analytic;
  crit.expect(relative <= 0.03, "crossing offset " + fmt(relative));
  crit.note("crossing " + fmt(crossing) + " vs closed form " + fmt(analytic) +
            " (offset " + fmt(relative) + ")");

  const double gap =
      spectrum_ed(build_jcm(ModelParams(wc, wa, crossing), space), 2).gap();
  crit.expect(gap < 1e-6, "gap at crossing " + fmt(gap));
  crit.note("gap at crossing " + fmt(gap));

  const GroundObservables below = ground_observables(
      build_jcm(ModelParams(wc, wa, crossing * (1.0 - 1e-3)), space), space);
  const GroundObservables above = ground_observables(
      build_jcm(ModelParams(wc, wa, crossing * (1.0 + 1e-3)), space), space);
  crit.expect(std::abs(below.mean_photons) <= 1e-10,
              "photons below crossing " + fmt(below.mean_photons));
  crit.expect(above.mean_photons > 0.4,
              "photons above crossing " + fmt(above.mean_photons));
  crit.note("photons " + fmt(below.mean_photons) + " -> " +
            fmt(above.mean_photons));

  crit.report();
}

void criterion_8_exploratory() {
  Criterion crit(8, "squeezed-model gap minimum and projection error", 300.0);

  // E1 - E0 collapses into a parity doublet beyond the transition instead of
  // reopening, so its scan minimum pins to the window edge. The doublet-aware
  // gap E2 - E1 dips at the transition and reopens on both sides; that
  // minimum is the finite-size precursor measured here.
  double previous_offset = std::numeric_limits<double>::infinity();
  for (double wa : {20.0, 50.0}) {
    const double crit_omega =
        critical_coupling(CriticalBranch::CaseB, 1.0, wa, 1.0).omega_crit;
    ConvergenceSettings settings;
    settings.tol = 1e-6;
    settings.n_start = 32;
    settings.n_max = 256;

    std::vector<GapScanPoint> doublet_aware;
    bool naive_has_interior_min = false;
    double previous_naive = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 24; ++i) {
      const double omega = crit_omega * (0.7 + 0.6 * i / 24.0);
      const ModelParams params(1.0, wa, omega, 1.0);
      const SpectrumResult spectrum = converged_spectrum(
          [&params](const FockSpace& space) { return build_mjc(params, space); },
          3, settings);
      const double naive = spectrum.energies[1] - spectrum.energies[0];
      if (i > 0 && naive > previous_naive) naive_has_interior_min = true;
      previous_naive = naive;
      doublet_aware.push_back({omega, spectrum.energies[2] - spectrum.energies[1],
                               0.0, spectrum.cutoff_used, spectrum.converged});
    }
    const GapMinimum minimum = refine_gap_minimum(doublet_aware);

    const double ratio = minimum.omega / crit_omega;
    crit.expect(ratio >= 0.7 && ratio <= 1.3,
                "doublet-aware minimum ratio " + fmt(ratio) + " at omega_a=" +
                    fmt(wa));
    const double offset = std::abs(ratio - 1.0);
    crit.expect(offset <= previous_offset + 1e-9,
                "minimum not moving toward the critical line at omega_a=" +
                    fmt(wa));
    crit.note("omega_a=" + fmt(wa) + ": E2-E1 minimum at " + fmt(ratio) +
              " of the critical coupling" +
              (naive_has_interior_min ? "" : "; E1-E0 collapses monotonically"
                                             " (parity doublet), no interior"
                                             " minimum"));
    previous_offset = offset;
  }

  {
    const FockSpace space(60);
    const ModelParams params(1.0, 1.0, 0.5, 0.0);
    const double coarse = bch_truncation_error(params, 0.05, space);
    const double fine = bch_truncation_error(params, 0.025, space);
    crit.expect(coarse > 0.0 && coarse / fine >= 3.0,
                "projection error ratio " + fmt(coarse / fine));
    crit.note("projection error shrink ratio " + fmt(coarse / fine));
  }

  crit.report(/*gating=*/false);
}

void criterion_9_determinism() {
  Criterion crit(9, "sweep determinism", 60.0);

  SweepConfig config;
  config.omega_c = 1.0;
  config.omega_a = 1.0;
  config.r_grid = {0.0, 1.0, 5};
  config.coupling_grid = {0.1, 0.6, 5};
  config.include_ed = true;
  config.n_levels = 3;

  std::ostringstream serial, parallel, repeat;
  write_csv(run_sweep(config, 1), serial);
  write_csv(run_sweep(config, 4), parallel);
  write_csv(run_sweep(config, 1), repeat);

  crit.expect(serial.str() == parallel.str(), "serial vs parallel mismatch");
  crit.expect(serial.str() == repeat.str(), "repeat-run mismatch");
  crit.note(std::to_string(serial.str().size()) + " bytes, 25 cells");
  crit.report();
}

}  // namespace

int main() {
  criterion_1_operator_algebra();
  criterion_2_hamiltonian_equivalences();
  criterion_3_bogoliubov_vs_ed();
  criterion_4_identity_chain_one();
  criterion_5_critical_points();
  criterion_6_superradiant_identities();
  criterion_7_finite_size_transition();
  criterion_8_exploratory();
  criterion_9_determinism();

  if (g_failures == 0) {
    std::cout << "all gating criteria passed\n";
    return 0;
  }
  std::cout << g_failures << " gating criteria failed\n";
  return 1;
}
