#include "sqjc/ed.hpp"

#include "oracles.hpp"
#include "sqjc/analytic.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace sqjc;

TEST_SUITE_BEGIN("ed");

TEST_CASE("single-cutoff spectrum") {
  const FockSpace space(12);
  const ModelParams free_params(1.0, 1.0, 0.0);
  const SpectrumResult res = spectrum_ed(build_mjc(free_params, space), 3);
  CHECK(res.energies[0] == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(res.energies[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(res.energies[2] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_FALSE(res.converged);

  CHECK_THROWS_AS(spectrum_ed(build_mjc(free_params, space), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(spectrum_ed(build_mjc(free_params, space), 1000),
                  std::invalid_argument);
}

TEST_CASE("dressed ladder against the closed-form oracle") {
  const FockSpace space(20);
  const ModelParams params(1.0, 1.4, 0.7);
  const SpectrumResult res = spectrum_ed(build_jcm(params, space), 9);
  const auto expected = oracles::jcm_dressed_levels(1.0, 1.4, 0.7, 9);
  for (int i = 0; i < 9; ++i) {
    CHECK(std::abs(res.energies[i] - expected[i]) <= 1e-11);
  }
}

TEST_CASE("bogoliubov ladder from exact diagonalization") {
  const FockSpace space(160);
  const double a = 1.0, c = 0.5;
  const SpectrumResult res = spectrum_ed(build_quadratic(a, 0.0, c, space), 5);
  const BogoliubovResult expected = bogoliubov({a, 0.0, c, 0.0});
  CHECK(std::abs(res.energies[0] - expected.ground_energy) <= 1e-6);
  for (int i = 0; i + 1 < 5; ++i) {
    CHECK(std::abs(res.energies[i + 1] - res.energies[i] - expected.gap) <= 1e-6);
  }
}

TEST_CASE("convergence loop contract") {
  {
    // diagonal model: first doubling already agrees
    const auto builder = [](const FockSpace& space) {
      return build_mjc(ModelParams(1.0, 1.0, 0.0), space);
    };
    ConvergenceSettings settings;
    settings.n_start = 8;
    settings.n_max = 64;
    const SpectrumResult res = converged_spectrum(builder, 3, settings);
    CHECK(res.converged);
    CHECK(res.cutoff_used == 16);
    CHECK(res.energies[0] == doctest::Approx(-0.5).epsilon(1e-14));
  }
  {
    // squeezed model near its critical coupling
    const ModelParams params(1.0, 1.0, 0.78, 1.0);
    const auto builder = [&params](const FockSpace& space) {
      return build_mjc(params, space);
    };
    ConvergenceSettings settings;
    settings.tol = 1e-8;
    settings.n_start = 32;
    settings.n_max = 512;
    const SpectrumResult res = converged_spectrum(builder, 4, settings);
    CHECK(res.converged);
    CHECK(res.cutoff_used <= 256);
  }
  {
    // n_max too small: flagged, best-effort energies still present
    const ModelParams params(1.0, 1.0, 0.78, 1.0);
    const auto builder = [&params](const FockSpace& space) {
      return build_mjc(params, space);
    };
    ConvergenceSettings settings;
    settings.tol = 1e-14;
    settings.n_start = 2;
    settings.n_max = 8;
    const SpectrumResult res = converged_spectrum(builder, 2, settings);
    CHECK_FALSE(res.converged);
    CHECK(res.cutoff_used == 8);
    CHECK(res.energies.size() == 2);
    CHECK_THROWS_AS(converged_spectrum(builder, 2, {1e-8, 64, 64}),
                    std::invalid_argument);
  }
  {
    // variational property: ground energy nonincreasing in the cutoff
    const ModelParams params(1.0, 1.0, 0.9, 0.8);
    double previous = std::numeric_limits<double>::infinity();
    for (int cutoff : {16, 32, 64, 128}) {
      const FockSpace space(cutoff);
      const double ground =
          spectrum_ed(build_mjc(params, space), 1).energies[0];
      CHECK(ground <= previous + 1e-12);
      previous = ground;
    }
  }
}

TEST_CASE("spectra are invariant under in-suite unitaries") {
  const FockSpace space(140);
  const ModelParams params(1.0, 1.0, 1.0, 0.5);
  const OperatorMatrix direct = build_displaced(params, 1.0, space);
  const OperatorMatrix d = tensor(displacement_operator(space, 1.0), pauli_ops().id);
  const OperatorMatrix conjugated{
      d.mat.adjoint() * build_mjc(params, space).mat * d.mat, Basis::Joint};
  const SpectrumResult res_direct = spectrum_ed(direct, 4);
  const SpectrumResult res_conj = spectrum_ed(conjugated, 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(res_direct.energies[i] - res_conj.energies[i]) <= 1e-10);
  }

  // squeeze and decoupling unitaries leave the spectrum alone as well
  const OperatorMatrix h = build_mjc(params, space);
  const SpectrumResult bare = spectrum_ed(h, 4);
  const OperatorMatrix squeeze_joint =
      tensor(squeeze_operator(space, 0.6), pauli_ops().id);
  const OperatorMatrix u = decoupling_unitary(params, 0.3, space);
  for (const OperatorMatrix& unitary : {squeeze_joint, u}) {
    const OperatorMatrix rotated{
        unitary.mat.adjoint() * h.mat * unitary.mat, Basis::Joint};
    const SpectrumResult res = spectrum_ed(rotated, 4);
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(res.energies[i] - bare.energies[i]) <= 1e-10);
    }
  }
}

TEST_CASE("ground observables") {
  {
    const FockSpace space(10);
    const GroundObservables obs =
        ground_observables(build_mjc(ModelParams(1.0, 1.0, 0.0), space), space);
    CHECK(std::abs(obs.mean_photons) <= 1e-12);
    CHECK(obs.mean_sigma_z == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(obs.mean_quadrature) <= 1e-12);
  }
  {
    // rotating-wave ground crossing at coupling^2 = 4 omega_a omega_c
    const FockSpace space(24);
    const GroundObservables below =
        ground_observables(build_jcm(ModelParams(1.0, 1.0, 1.9), space), space);
    CHECK(std::abs(below.mean_photons) <= 1e-10);
    CHECK(std::abs(below.mean_quadrature) <= 1e-10);

    const GroundObservables above =
        ground_observables(build_jcm(ModelParams(1.0, 1.0, 2.1), space), space);
    CHECK(above.mean_photons > 0.0);
    CHECK(above.mean_photons <= space.cutoff());
    CHECK(above.mean_sigma_z >= -1.0);
    CHECK(above.mean_sigma_z <= 1.0);
  }
  {
    // exactly at the crossing: tie resolved toward larger <sigma_z>
    const FockSpace space(24);
    const GroundObservables at_crossing =
        ground_observables(build_jcm(ModelParams(1.0, 1.0, 2.0), space), space);
    CHECK(at_crossing.mean_sigma_z == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(at_crossing.mean_photons == doctest::Approx(0.5).epsilon(1e-8));
  }
}

TEST_CASE("gap scan") {
  {
    const std::vector<GapScanPoint> scan =
        gap_scan(ModelParams(1.0, 1.0, 0.0), {0.5});
    REQUIRE(scan.size() == 1);
    CHECK(scan[0].omega == 0.5);
    CHECK(scan[0].converged);
  }
  {
    // rotating-wave crossing at omega_a/omega_c = 20 within 3 percent of the
    // closed-form critical coupling; photon number nondecreasing. The scan
    // window stays below the next manifold reordering near 9.43.
    std::vector<double> grid;
    for (int i = 0; i <= 16; ++i) grid.push_back(8.5 + 0.05 * i);
    ConvergenceSettings settings;
    settings.n_start = 16;
    const std::vector<GapScanPoint> scan =
        gap_scan(ModelParams(1.0, 20.0, 0.0), grid, settings);

    const GapMinimum minimum = refine_gap_minimum(scan);
    const double analytic_crit =
        critical_coupling(CriticalBranch::CaseB, 1.0, 20.0, 0.0).omega_crit;
    CHECK(std::abs(minimum.omega - analytic_crit) / analytic_crit <= 0.03);

    // nondecreasing up to the slow intra-branch drift of the dressed state
    // (the admixture weight shifts by ~5e-4 per grid step past the crossing)
    for (size_t i = 1; i < scan.size(); ++i) {
      CHECK(scan[i].mean_photons >= scan[i - 1].mean_photons - 1e-2);
    }
    CHECK(scan.front().mean_photons <= 1e-8);
    CHECK(scan.back().mean_photons > 0.4);
  }
  CHECK_THROWS_AS(gap_scan(ModelParams(1.0, 1.0, 0.0), {1.0, 0.5}),
                  std::invalid_argument);
}

TEST_CASE("projection error shrinks superquadratically in v") {
  const FockSpace space(60);
  const ModelParams params(1.0, 1.0, 0.5, 0.0);
  CHECK(bch_truncation_error(params, 0.0, space) <= 1e-13);

  const double coarse = bch_truncation_error(params, 0.05, space);
  const double fine = bch_truncation_error(params, 0.025, space);
  CHECK(coarse > 0.0);
  CHECK(coarse / fine >= 3.0);

  // error grows with the coupling at fixed v
  const double e1 =
      bch_truncation_error(ModelParams(1.0, 1.0, 0.25, 0.0), 0.05, space);
  const double e2 =
      bch_truncation_error(ModelParams(1.0, 1.0, 0.5, 0.0), 0.05, space);
  const double e3 =
      bch_truncation_error(ModelParams(1.0, 1.0, 1.0, 0.0), 0.05, space);
  CHECK(e1 < e2);
  CHECK(e2 < e3);
}

TEST_SUITE_END();
