// Witness indicators: hull bound, Delta_1/Delta_2, map optimizers, loss
// thresholds.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wigwitness/exemplars.hpp"
#include "wigwitness/gaussian.hpp"
#include "wigwitness/optim.hpp"
#include "wigwitness/oracle.hpp"
#include "wigwitness/witness.hpp"

using namespace wigwitness;

TEST_CASE("bound_min: values and log-convexity in nbar") {
  CHECK(bound_min(0.0) == doctest::Approx(kTwoOverPi).epsilon(1e-14));
  CHECK(bound_min(1.0) ==
        doctest::Approx(kTwoOverPi * std::exp(-4.0)).epsilon(1e-14));
  // exponent -2n(1+n) is concave, so the bound is strictly decreasing
  double prev = bound_min(0.0);
  for (double n = 0.05; n < 3.0; n += 0.05) {
    const double b = bound_min(n);
    CHECK(b < prev);
    prev = b;
  }
  CHECK_THROWS_AS(bound_min(-0.1), std::domain_error);
}

TEST_CASE("wigner_at matches the conjugation-route oracle") {
  const FockOperator rho = density(coherent_state(Complex(0.6, -0.3), 40));
  for (Complex z : {Complex(0, 0), Complex(0.4, 0.1), Complex(-0.7, 0.5)}) {
    CHECK(std::abs(wigner_at(rho, z) - wigner_via_parity(rho, z)) < 1e-10);
  }
}

TEST_CASE("delta1: Fock |1> violates, vacuum and coherent do not") {
  const WitnessReport one = delta1(density(fock_state(1, 20)));
  CHECK(one.wigner_at_origin == doctest::Approx(-kTwoOverPi).epsilon(1e-12));
  CHECK(one.delta < -kDecisionTol);
  CHECK(one.verdict == Verdict::QuantumNonGaussian);

  const WitnessReport vac = delta1(density(fock_state(0, 20)));
  CHECK(std::abs(vac.delta) < 1e-12);
  CHECK(vac.verdict == Verdict::Inconclusive);

  const WitnessReport coh = delta1(density(coherent_state(Complex(0.8, 0), 30)));
  CHECK(coh.delta > 0.0);
  CHECK(coh.verdict == Verdict::Inconclusive);
}

TEST_CASE("delta2 with the identity map reproduces delta1") {
  const FockOperator rho = pac_to_fock({0.5}, dim_for_energy(3.0));
  const WitnessReport r1 = delta1(rho);
  const WitnessReport r2 = delta2(rho, GaussianMapSpec::identity());
  CHECK(r2.delta == doctest::Approx(r1.delta).epsilon(1e-12));
  CHECK(r2.map_used.str() == "id");
}

TEST_CASE("delta2: squeezing leaves W(0) fixed but can relax the bound") {
  const PssParams p{0.4};
  const int dim = dim_for_energy(pss_mean_photon(p)) + squeezing_tail_levels(0.4);
  const FockOperator rho = apply_loss(pss_to_fock(p, dim), 0.3);
  const WitnessReport base = delta1(rho);
  const WitnessReport sq = delta2(rho, GaussianMapSpec::squeezing(-0.2));
  CHECK(std::abs(sq.wigner_at_origin - base.wigner_at_origin) < 1e-9);
  CHECK(sq.mean_photon < base.mean_photon);
  CHECK(sq.delta < base.delta);
}

TEST_CASE("delta1_lossy_fock: closed form against the Kraus pipeline") {
  CHECK(std::abs(delta1_lossy_fock(0, 0.4)) < 1e-15);
  CHECK(delta1_lossy_fock(1, 0.0) ==
        doctest::Approx(kTwoOverPi * (-1.0 - std::exp(-4.0))).epsilon(1e-14));
  for (int m : {1, 2, 3}) {
    for (double eps : {0.1, 0.45, 0.8}) {
      const FockOperator lossy = apply_loss(density(fock_state(m, 30)), eps);
      const WitnessReport rep = delta1(lossy);
      CHECK(std::abs(delta1_lossy_fock(m, eps) - rep.delta) < 1e-10);
    }
  }
  CHECK_THROWS_AS(delta1_lossy_fock(-1, 0.5), std::domain_error);
  CHECK_THROWS_AS(delta1_lossy_fock(1, 1.5), std::domain_error);
}

TEST_CASE("pac_displaced_mean_photon matches the Fock pipeline") {
  const double alpha = 0.7, eps = 0.35;
  const Complex beta(0.4, -0.6);
  const int dim = dim_for_energy(8.0);
  FockOperator rho = apply_loss(pac_to_fock({alpha}, dim), eps);
  rho = apply_gaussian_map(rho, GaussianMapSpec::displacement(beta));
  CHECK(std::abs(pac_displaced_mean_photon(alpha, eps, beta) -
                 mean_photon(rho)) < 1e-8);
}

TEST_CASE("pss_squeezed_mean_photon matches the Fock pipeline") {
  const double r = 0.4, eps = 0.3, s = -0.25;
  const int dim = dim_for_energy(8.0) + squeezing_tail_levels(r + std::abs(s));
  FockOperator rho = apply_loss(pss_to_fock({r}, dim), eps);
  rho = apply_gaussian_map(rho, GaussianMapSpec::squeezing(s));
  CHECK(std::abs(pss_squeezed_mean_photon(r, eps, s) - mean_photon(rho)) <
        1e-7);
}

TEST_CASE("pss_optimal_squeezing agrees with a brute-force minimizer") {
  for (double r : {0.1, 0.3, 0.5, 1.0}) {
    for (double eps : {0.55, 0.7, 0.85}) {
      const SqueezingOpt opt = pss_optimal_squeezing(r, eps);
      const auto energy = [&](double s) {
        return pss_squeezed_mean_photon(r, eps, s);
      };
      const ScalarMinResult brute =
          golden_section_minimize(energy, -2.0, 2.0, 1e-10, 400);
      CHECK(std::abs(opt.s - brute.x) < 1e-5);
      CHECK(energy(opt.s) <= brute.fx + 1e-12);
    }
  }
  // eps = 1 leaves the vacuum: no squeezing helps
  CHECK(std::abs(pss_optimal_squeezing(0.5, 1.0).s) < 1e-8);
}

TEST_CASE("optimize_displacement: vacuum stays put, never loses to beta=0") {
  const DisplacementOpt vac =
      optimize_displacement(density(fock_state(0, 20)), -2.0, 2.0);
  CHECK(std::abs(vac.beta) < 1e-6);
  CHECK(std::abs(vac.report.delta) < 1e-9);

  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 5; ++i) {
    const FockOperator rho = apply_loss(
        density(coherent_state(Complex(u(rng), u(rng) - 0.5), 40)), u(rng));
    const DisplacementOpt opt = optimize_displacement(rho, -3.0, 3.0);
    CHECK(opt.report.delta <=
          delta2(rho, GaussianMapSpec::identity()).delta + 1e-12);
  }
}

TEST_CASE("optimize_displacement recovers a hidden violation") {
  // lossy PAC at alpha=0.6, eps=0.8: Delta_1 >= 0 but a displacement finds
  // the negative region
  const FockOperator rho =
      apply_loss(pac_to_fock({0.6}, dim_for_energy(4.0)), 0.8);
  CHECK(delta1(rho).delta >= 0.0);
  const DisplacementOpt opt = optimize_displacement(rho, -3.0, 3.0);
  CHECK(opt.report.delta < -kDecisionTol);
  CHECK(opt.report.verdict == Verdict::QuantumNonGaussian);
  // the optimal displacement roughly recenters the attenuated coherent core
  CHECK(opt.beta.real() < 0.0);
}

TEST_CASE("optimize_squeezing minimizes the mapped energy") {
  const PssParams p{0.3};
  const int dim = dim_for_energy(8.0) + squeezing_tail_levels(1.0);
  const FockOperator rho = apply_loss(pss_to_fock(p, dim), 0.7);
  const SqueezeMapOpt opt = optimize_squeezing(rho);
  const SqueezingOpt closed = pss_optimal_squeezing(0.3, 0.7);
  CHECK(std::abs(opt.s - closed.s) < 1e-5);
  CHECK(opt.report.delta <= delta1(rho).delta + 1e-12);
}

TEST_CASE("lossy_report and delta_lossy agree with the generic pipeline") {
  // Fock family, criterion 1
  const WitnessReport f = lossy_report(StateFamily::Fock, 2, 0.3, 1);
  CHECK(f.delta == doctest::Approx(delta1_lossy_fock(2, 0.3)).epsilon(1e-10));
  CHECK(delta_lossy(StateFamily::Fock, 2, 0.3, 1) ==
        doctest::Approx(f.delta));

  // PSS family, criterion 2 equals the squeezed-report at the optimal s
  const double r = 0.3, eps = 0.7;
  const WitnessReport c2 = lossy_report(StateFamily::Pss, r, eps, 2);
  const SqueezingOpt s = pss_optimal_squeezing(r, eps);
  const WitnessReport direct = pss_squeezed_report(r, eps, s.s);
  CHECK(std::abs(c2.delta - direct.delta) < 1e-9);
  CHECK(c2.delta <= lossy_report(StateFamily::Pss, r, eps, 1).delta + 1e-12);

  // PAC family, criterion 2 beats or ties criterion 1
  const WitnessReport pac2 = lossy_report(StateFamily::Pac, 0.6, 0.8, 2);
  CHECK(pac2.delta <= lossy_report(StateFamily::Pac, 0.6, 0.8, 1).delta + 1e-12);
}

TEST_CASE("eps_max: known thresholds and criterion ordering") {
  // Fock |1>: violates at every eps < 1
  const EpsMaxResult m1 = eps_max(StateFamily::Fock, 1, 1, 0.01);
  REQUIRE(m1.eps_max.has_value());
  CHECK(*m1.eps_max == doctest::Approx(1.0).epsilon(1e-5));

  // vacuum: never violates
  CHECK_FALSE(eps_max(StateFamily::Fock, 0, 1, 0.05).eps_max.has_value());

  // PSS r=0.3: criterion 2 extends the threshold past criterion 1
  const EpsMaxResult p1 = eps_max(StateFamily::Pss, 0.3, 1, 0.01);
  const EpsMaxResult p2 = eps_max(StateFamily::Pss, 0.3, 2, 0.01);
  REQUIRE(p1.eps_max.has_value());
  REQUIRE(p2.eps_max.has_value());
  CHECK(*p1.eps_max == doctest::Approx(0.668).epsilon(0.01));
  CHECK(*p2.eps_max == doctest::Approx(0.966).epsilon(0.01));
  CHECK(*p2.eps_max > *p1.eps_max + 0.1);
}
