// Gaussian states: closed-form Wigner values, the saturating family, hull
// sampling, Fock conversion and the phase-space calculus.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wigwitness/channels.hpp"
#include "wigwitness/gaussian.hpp"
#include "wigwitness/witness.hpp"

using namespace wigwitness;

namespace {

int safe_dim(const PureGaussianParams& p) {
  return dim_for_energy(p.n()) + squeezing_tail_levels(p.r());
}

}  // namespace

TEST_CASE("wigner_origin_pure_gaussian: closed cases") {
  // alpha = 0: exponent vanishes for any squeezing
  CHECK(wigner_origin_pure_gaussian({Complex(0, 0), Complex(0.7, 0.3)}) ==
        doctest::Approx(kTwoOverPi).epsilon(1e-14));
  // coherent state: (2/pi) e^{-2}
  CHECK(wigner_origin_pure_gaussian({Complex(1, 0), Complex(0, 0)}) ==
        doctest::Approx(kTwoOverPi * std::exp(-2.0)).epsilon(1e-14));
  // worst-phase family: (2/pi) exp{-2 n_d e^{2r}} at theta=pi/2, phi=0
  const double nd = 0.8, r = 0.4;
  const PureGaussianParams worst{Complex(0.0, std::sqrt(nd)), Complex(r, 0.0)};
  CHECK(wigner_origin_pure_gaussian(worst) ==
        doctest::Approx(kTwoOverPi * std::exp(-2.0 * nd * std::exp(2.0 * r)))
            .epsilon(1e-12));
}

TEST_CASE("closed form agrees with truncated-basis parity on random params") {
  std::mt19937_64 rng(8123);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    PureGaussianParams p;
    p.alpha = std::polar(std::sqrt(2.0 * u(rng)), 2.0 * kPi * u(rng));
    p.xi = std::polar(std::asinh(std::sqrt(1.2 * u(rng))), 2.0 * kPi * u(rng));
    const double numeric =
        kTwoOverPi * parity_expectation(to_fock(p, safe_dim(p)));
    CHECK(std::abs(numeric - wigner_origin_pure_gaussian(p)) < 1e-7);
  }
}

TEST_CASE("minimal W(0) over phases sits at 2 theta - phi = pi") {
  const double nd = 0.7, ns = 0.5;
  const double r = std::asinh(std::sqrt(ns));
  double best = 1e9, best_combo = 0.0;
  const int grid = 360;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const double theta = 2.0 * kPi * i / grid;
      const double phi = 2.0 * kPi * j / grid;
      const double w = wigner_origin_pure_gaussian(
          {std::polar(std::sqrt(nd), theta), std::polar(r, phi)});
      if (w < best) {
        best = w;
        best_combo = std::cos(2.0 * theta - phi);
      }
    }
  }
  CHECK(best_combo == doctest::Approx(-1.0).epsilon(1e-3));
  CHECK(best ==
        doctest::Approx(kTwoOverPi * std::exp(-2.0 * nd * std::exp(2.0 * r)))
            .epsilon(1e-3));
}

TEST_CASE("saturating_state meets the bound with equality") {
  SUBCASE("n = 0 is the vacuum") {
    const PureGaussianParams p = saturating_state(0.0);
    CHECK(std::abs(p.alpha) == 0.0);
    CHECK(std::abs(p.xi) == 0.0);
    CHECK(wigner_origin_pure_gaussian(p) == doctest::Approx(kTwoOverPi));
  }
  SUBCASE("n = 1 splits as n_s = 1/3, n_d = 2/3 and gives (2/pi)e^{-4}") {
    const PureGaussianParams p = saturating_state(1.0);
    CHECK(p.n_s() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(p.n_d() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(wigner_origin_pure_gaussian(p) ==
          doctest::Approx(kTwoOverPi * std::exp(-4.0)).epsilon(1e-12));
  }
  SUBCASE("squeezing fraction tends to 1/2 at large n") {
    const PureGaussianParams p = saturating_state(400.0);
    CHECK(p.n_s() / 400.0 == doctest::Approx(0.5).epsilon(0.01));
  }
  SUBCASE("closed-form W(0) equals the hull bound on a grid") {
    for (double n : {0.1, 0.5, 1.0, 2.0, 3.0}) {
      CHECK(std::abs(wigner_origin_pure_gaussian(saturating_state(n)) -
                     bound_min(n)) < 1e-12);
    }
  }
}

TEST_CASE("mixture helpers are linear and validated") {
  GaussianMixture mix;
  mix.components.push_back({0.5, {Complex(0, 0), Complex(0, 0)}});
  mix.components.push_back({0.5, {Complex(1, 0), Complex(0, 0)}});
  CHECK(mixture_wigner_origin(mix) ==
        doctest::Approx((1.0 + std::exp(-2.0)) / kPi).epsilon(1e-12));
  CHECK(mixture_mean_photon(mix) == doctest::Approx(0.5).epsilon(1e-12));

  GaussianMixture bad;
  bad.components.push_back({0.7, {}});
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK_THROWS_AS(GaussianMixture{}.validate(), std::invalid_argument);
}

TEST_CASE("sample_hull_state: deterministic, normalized, energy-capped") {
  const GaussianMixture a = sample_hull_state(42, 4.0, 3);
  const GaussianMixture b = sample_hull_state(42, 4.0, 3);
  REQUIRE(a.components.size() == 3);
  double wsum = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(a.components[i].weight == b.components[i].weight);
    CHECK(a.components[i].params.alpha == b.components[i].params.alpha);
    CHECK(a.components[i].params.n() <= 4.0);
    wsum += a.components[i].weight;
  }
  CHECK(wsum == doctest::Approx(1.0).epsilon(1e-12));

  const GaussianMixture vac = sample_hull_state(7, 0.0, 1);
  CHECK(vac.components[0].params.n() == 0.0);
}

TEST_CASE("sampled hull states never violate the bound") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const GaussianMixture mix = sample_hull_state(seed, 4.0, 1 + int(seed % 4));
    const double delta =
        mixture_wigner_origin(mix) - bound_min(mixture_mean_photon(mix));
    CHECK(delta >= -1e-9);
  }
}

TEST_CASE("to_fock: vacuum, coherent, and cross-representation parity") {
  const FockOperator vac = to_fock(PureGaussianParams{}, 8);
  CHECK(std::abs(vac.mat(0, 0) - 1.0) < 1e-14);

  const PureGaussianParams coh{Complex(1, 0), Complex(0, 0)};
  const FockOperator rho = to_fock(coh, dim_for_energy(1.0));
  for (int n = 0; n < 5; ++n) {
    const double pn = std::exp(-1.0 - std::lgamma(n + 1.0));
    CHECK(rho.mat(n, n).real() == doctest::Approx(pn).epsilon(1e-10));
  }

  const PureGaussianParams p{Complex(0.4, 0.6), std::polar(0.5, 2.0)};
  CHECK(std::abs(kTwoOverPi * parity_expectation(to_fock(p, safe_dim(p))) -
                 wigner_origin_pure_gaussian(p)) < 1e-8);
}

TEST_CASE("to_fock_vector matches the squeezing-generator exponential route") {
  const PureGaussianParams p{Complex(0.3, -0.2), std::polar(0.6, 1.3)};
  const int dim = safe_dim(p);
  const FockVector direct = to_fock_vector(p, dim);
  Vector via_exp = squeezing_matrix(p.xi, dim).mat.col(0);
  via_exp = displacement_matrix(p.alpha, dim).mat * via_exp;
  CHECK((direct.amps - via_exp).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("to_fock_vector rejects under-dimensioned truncation") {
  const PureGaussianParams p{Complex(3.0, 0), Complex(0, 0)};
  CHECK_THROWS_AS(to_fock_vector(p, 6), TruncationError);
}

TEST_CASE("phase-space calculus matches the Fock pipeline") {
  std::mt19937_64 rng(5150);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 25; ++i) {
    PureGaussianParams p;
    p.alpha = std::polar(std::sqrt(1.5 * u(rng)), 2.0 * kPi * u(rng));
    p.xi = std::polar(std::asinh(std::sqrt(0.8 * u(rng))), 2.0 * kPi * u(rng));
    GaussianMapSpec map;
    map = map.then(GaussianMapSpec::displacement(
        Complex(u(rng) - 0.5, u(rng) - 0.5)));
    map = map.then(GaussianMapSpec::squeezing(0.8 * (u(rng) - 0.5)));
    map = map.then(GaussianMapSpec::loss(u(rng)));

    const GaussianPhase g =
        apply_gaussian_map(GaussianPhase::from_params(p), map);

    const int dim = safe_dim(p) + 40;
    const FockOperator mapped = apply_gaussian_map(to_fock(p, dim), map);
    CHECK(std::abs(g.wigner_origin() -
                   kTwoOverPi * parity_expectation(mapped)) < 1e-7);
    CHECK(std::abs(g.mean_photon() - mean_photon(mapped)) < 1e-6);
  }
}

TEST_CASE("phase-space primitives: vacuum and simple transforms") {
  const GaussianPhase vac;
  CHECK(vac.wigner_origin() == doctest::Approx(kTwoOverPi).epsilon(1e-14));
  CHECK(std::abs(vac.mean_photon()) < 1e-14);

  const GaussianPhase disp = vac.displaced(Complex(0.6, -0.8));
  CHECK(disp.mean_photon() == doctest::Approx(1.0).epsilon(1e-12));

  const GaussianPhase sq = vac.squeezed(Complex(0.5, 0.0));
  CHECK(sq.mean_photon() ==
        doctest::Approx(std::pow(std::sinh(0.5), 2)).epsilon(1e-12));
  // squeezing leaves W(0) of a centered state unchanged
  CHECK(sq.wigner_origin() == doctest::Approx(kTwoOverPi).epsilon(1e-12));

  const GaussianPhase lossy = disp.lossy(0.3);
  CHECK(lossy.mean_photon() == doctest::Approx(0.7).epsilon(1e-12));
  CHECK_THROWS_AS(disp.lossy(1.5), std::domain_error);
}
