// End-to-end acceptance suite. Each check prints one PASS/FAIL line with its
// wall time; the binary exits nonzero if any check fails or overruns its
// budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "wigwitness/channels.hpp"
#include "wigwitness/exemplars.hpp"
#include "wigwitness/gaussian.hpp"
#include "wigwitness/optim.hpp"
#include "wigwitness/oracle.hpp"
#include "wigwitness/witness.hpp"

using namespace wigwitness;

namespace {

int g_failures = 0;

void run_check(const std::string& name, double budget_s,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (elapsed > budget_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over budget");
  }
  std::printf("%s: %s (%.2fs / %.0fs)%s%s\n", ok ? "PASS" : "FAIL",
              name.c_str(), elapsed, budget_s, detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

}  // namespace

int main() {
  // 1. Lossy Fock closed form vs the Kraus pipeline, m = 0..6, eps grid 0.01.
  run_check("lossy Fock delta closed form matches Kraus pipeline", 5.0,
            [](std::string& detail) {
              double worst = 0.0;
              for (int m = 0; m <= 6; ++m) {
                const FockOperator rho = density(fock_state(m, 2 * m + 10));
                for (int k = 0; k <= 100; ++k) {
                  const double eps = 0.01 * k;
                  const double pipeline = delta1(apply_loss(rho, eps)).delta;
                  worst = std::max(
                      worst, std::abs(pipeline - delta1_lossy_fock(m, eps)));
                }
              }
              detail = "max dev " + std::to_string(worst);
              return worst < 1e-9;
            });

  // 2. Single photon survives any loss below unity.
  run_check("single photon violates the bound at every partial loss", 1.0,
            [](std::string&) {
              for (int k = 1; k <= 99; ++k) {
                if (delta1_lossy_fock(1, 0.01 * k) >= 0.0) return false;
              }
              return true;
            });

  // 3. Loss thresholds for Fock states decrease with m and approach 1/2.
  run_check("Fock loss thresholds strictly decrease toward one half", 10.0,
            [](std::string& detail) {
              double prev = 2.0;
              double last = 0.0;
              for (int m = 1; m <= 10; ++m) {
                const EpsMaxResult res = eps_max(StateFamily::Fock, m, 1, 1e-3);
                if (!res.eps_max) return false;
                if (*res.eps_max >= prev) return false;
                prev = last = *res.eps_max;
              }
              detail = "threshold at m=10: " + std::to_string(last);
              return last > 0.5 && last < 0.55;
            });

  // 4. The extremal Gaussian family sits exactly on the bound.
  run_check("bound-saturating Gaussian states give delta within 1e-8", 5.0,
            [](std::string& detail) {
              double worst = 0.0;
              for (double n : {0.0, 0.5, 1.0, 2.0, 3.0}) {
                const PureGaussianParams p = saturating_state(n);
                const int dim = std::max(
                    120, dim_for_energy(n) + squeezing_tail_levels(p.r()));
                worst = std::max(worst,
                                 std::abs(delta1(to_fock(p, dim)).delta));
              }
              detail = "max |delta| " + std::to_string(worst);
              return worst < 1e-8;
            });

  // 5. Soundness: no sampled Gaussian mixture, bare or mapped, violates.
  run_check("hull campaign finds no violation in 10000 samples x 10 maps",
            120.0, [](std::string& detail) {
              const OracleReport rep = run_hull_campaign(10000, 4.0, 10, 7);
              detail = std::to_string(rep.checks_run) + " checks, floor " +
                       std::to_string(-rep.max_abs_deviation);
              return rep.failures.empty() && rep.checks_run == 110000;
            });

  // 6. Every closed form agrees with the number-basis pipeline.
  run_check("closed-form cross-validation within 1e-7 on full grids", 60.0,
            [](std::string& detail) {
              const OracleReport rep = cross_validate_closed_forms();
              detail = std::to_string(rep.checks_run) + " checks, max dev " +
                       std::to_string(rep.max_abs_deviation);
              return rep.failures.empty() && rep.checks_run >= 300 &&
                     rep.max_abs_deviation < 1e-7;
            });

  // 7. Analytic optimal squeezing equals the numeric minimizer.
  run_check("analytic optimal squeezing matches numeric minimum", 10.0,
            [](std::string& detail) {
              double worst = 0.0;
              for (double r : {0.1, 0.3, 0.5, 1.0}) {
                for (double eps : {0.55, 0.7, 0.85}) {
                  const SqueezingOpt opt = pss_optimal_squeezing(r, eps);
                  const ScalarMinResult brute = golden_section_minimize(
                      [&](double s) {
                        return pss_squeezed_mean_photon(r, eps, s);
                      },
                      -2.0, 2.0, 1e-10, 400);
                  worst = std::max(worst, std::abs(opt.s - brute.x));
                }
              }
              detail = "max |s - s_numeric| " + std::to_string(worst);
              return worst < 1e-5;
            });

  // 8. Squeezing maps extend the detectable-loss range for subtracted states.
  run_check("squeezing maps never shrink and sometimes extend thresholds",
            120.0, [](std::string& detail) {
              double e1_at_03 = 0.0, e2_at_03 = 0.0;
              double e1_last = 0.0, e2_last = 0.0;
              for (int k = 1; k <= 30; ++k) {
                const double r = 0.05 * k;
                const EpsMaxResult r1 = eps_max(StateFamily::Pss, r, 1, 2e-3);
                const EpsMaxResult r2 = eps_max(StateFamily::Pss, r, 2, 2e-3);
                if (!r1.eps_max || !r2.eps_max) return false;
                if (*r2.eps_max < *r1.eps_max - 1e-4) return false;
                if (std::abs(r - 0.3) < 1e-9) {
                  e1_at_03 = *r1.eps_max;
                  e2_at_03 = *r2.eps_max;
                }
                e1_last = *r1.eps_max;
                e2_last = *r2.eps_max;
              }
              detail = "r=0.3: " + std::to_string(e1_at_03) + " -> " +
                       std::to_string(e2_at_03) + "; r=1.5: " +
                       std::to_string(e1_last) + ", " + std::to_string(e2_last);
              return e2_at_03 > e1_at_03 + 0.05 && e1_last > 0.5 &&
                     e1_last < 0.62 && e2_last > 0.5 && e2_last < 0.62;
            });

  // 9. The optimal recentering displacement tracks the attenuated amplitude.
  run_check("optimal displacement recenters lossy added-photon states", 30.0,
            [](std::string& detail) {
              double worst_rel = 0.0;
              for (double alpha : {1.5, 2.0, 2.5}) {
                for (double eps : {0.8, 0.9}) {
                  const int dim =
                      dim_for_energy(pac_mean_photon({alpha}) + 2.0);
                  const FockOperator rho =
                      apply_loss(pac_to_fock({alpha}, dim), eps);
                  const DisplacementOpt opt = optimize_displacement(
                      rho, -(alpha + 3.0), alpha + 3.0);
                  const double expected = -alpha * std::sqrt(1.0 - eps);
                  const double rel =
                      std::abs(opt.beta.real() - expected) / std::abs(expected);
                  worst_rel = std::max(worst_rel, rel);
                  if (std::abs(opt.beta.imag()) > 1e-4) return false;
                }
              }
              detail = "max relative offset " + std::to_string(worst_rel);
              return worst_rel < 0.10;
            });

  // 10. Loss channel energy scaling and composition on random states.
  run_check("loss scales energy by transmissivity and composes exactly", 30.0,
            [](std::string& detail) {
              std::mt19937_64 rng(2024);
              std::uniform_real_distribution<double> u(0.0, 1.0);
              double worst_energy = 0.0, worst_compose = 0.0;
              for (int i = 0; i < 100; ++i) {
                const int dim = 16;
                Matrix g(dim, dim);
                for (int a = 0; a < dim; ++a) {
                  for (int b = 0; b < dim; ++b) {
                    g(a, b) = Complex(u(rng) - 0.5, u(rng) - 0.5);
                  }
                }
                Matrix m = g * g.adjoint();
                m /= m.trace();
                const FockOperator rho(std::move(m));
                const double e1 = u(rng), e2 = u(rng);
                worst_energy = std::max(
                    worst_energy,
                    std::abs(mean_photon(apply_loss(rho, e1)) -
                             (1.0 - e1) * mean_photon(rho)));
                const Matrix two =
                    apply_loss(apply_loss(rho, e1), e2).mat;
                const Matrix one =
                    apply_loss(rho, compose_loss(e1, e2)).mat;
                worst_compose = std::max(
                    worst_compose, (two - one).cwiseAbs().maxCoeff());
              }
              detail = "energy dev " + std::to_string(worst_energy) +
                       ", composition dev " + std::to_string(worst_compose);
              return worst_energy < 1e-8 && worst_compose < 1e-10;
            });

  // 11. Convolution route equals the Kraus route at the origin.
  run_check("lossy Wigner convolution matches Kraus evaluation at origin",
            60.0, [](std::string& detail) {
              double worst = 0.0;
              const WignerFn pac = [](Complex l) {
                return pac_wigner({0.4}, {l});
              };
              const WignerFn pss = [](Complex l) {
                return pss_wigner({0.3}, {l});
              };
              const int pac_dim = dim_for_energy(pac_mean_photon({0.4}) + 1.0);
              const int pss_dim = dim_for_energy(pss_mean_photon({0.3})) +
                                  squeezing_tail_levels(0.3);
              const FockOperator pac_rho = pac_to_fock({0.4}, pac_dim);
              const FockOperator pss_rho = pss_to_fock({0.3}, pss_dim);
              for (double eps : {0.3, 0.6, 0.9}) {
                const double pac_kraus =
                    kTwoOverPi * parity_expectation(apply_loss(pac_rho, eps));
                const double pss_kraus =
                    kTwoOverPi * parity_expectation(apply_loss(pss_rho, eps));
                worst = std::max(
                    worst, std::abs(lossy_wigner(pac, eps, {Complex(0, 0)}) -
                                    pac_kraus));
                worst = std::max(
                    worst, std::abs(lossy_wigner(pss, eps, {Complex(0, 0)}) -
                                    pss_kraus));
              }
              detail = "max dev " + std::to_string(worst);
              return worst < 1e-6;
            });

  if (g_failures != 0) {
    std::printf("%d acceptance check(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance checks passed\n");
  return 0;
}
