#include "wigwitness/oracle.hpp"

#include <cmath>
#include <random>

#include "wigwitness/channels.hpp"
#include "wigwitness/exemplars.hpp"
#include "wigwitness/gaussian.hpp"
#include "wigwitness/parallel.hpp"
#include "wigwitness/witness.hpp"

namespace wigwitness {

void OracleReport::record(const std::string& id, double expected, double got,
                          double tol) {
  ++checks_run;
  const double dev = std::abs(expected - got);
  if (dev > max_abs_deviation) max_abs_deviation = dev;
  if (dev > tol) failures.push_back({id, expected, got});
}

double wigner_via_parity(const FockOperator& rho, Complex z) {
  require_state(rho);
  if (z == Complex(0, 0)) return kTwoOverPi * parity_expectation(rho);
  const FockOperator D = displacement_matrix(-z, static_cast<int>(rho.dim()));
  const FockOperator shifted = apply_unitary(D, rho);
  const double deficit = std::abs(1.0 - shifted.mat.trace().real());
  if (deficit > Tolerances{}.truncation_tol) {
    throw TruncationError(
        "wigner_via_parity: displaced state leaks past truncation (deficit " +
        std::to_string(deficit) + "); increase dim");
  }
  return kTwoOverPi * parity_expectation(shifted);
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (i + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

GaussianMapSpec random_map(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  switch (kind(rng)) {
    case 0: {
      std::normal_distribution<double> comp(0.0, 1.0 / std::sqrt(2.0));
      const double re = comp(rng);
      const double im = comp(rng);
      return GaussianMapSpec::displacement(Complex(re, im));
    }
    case 1: {
      std::uniform_real_distribution<double> s(-1.0, 1.0);
      return GaussianMapSpec::squeezing(s(rng));
    }
    default: {
      std::uniform_real_distribution<double> e(0.0, 1.0);
      return GaussianMapSpec::loss(e(rng));
    }
  }
}

// Delta of a hull state pushed through a Gaussian map, evaluated per
// component in the phase-space representation (each component stays
// Gaussian, so both W(0) and the energy are exact).
double hull_delta(const GaussianMixture& mix, const GaussianMapSpec& map) {
  double w0 = 0.0;
  double nbar = 0.0;
  for (const auto& c : mix.components) {
    const GaussianPhase g =
        apply_gaussian_map(GaussianPhase::from_params(c.params), map);
    w0 += c.weight * g.wigner_origin();
    nbar += c.weight * g.mean_photon();
  }
  return w0 - bound_min(std::max(nbar, 0.0));
}

}  // namespace

OracleReport run_hull_campaign(long n_samples, double max_energy, int n_maps,
                               std::uint64_t seed) {
  if (n_samples < 0) {
    throw std::invalid_argument("run_hull_campaign: n_samples must be >= 0");
  }
  struct SampleResult {
    double min_delta = 0.0;
    int min_index = -1;  // -1 = bare Delta_1, otherwise map index
  };
  std::vector<SampleResult> results(n_samples);
  parallel_for(n_samples, [&](std::size_t i) {
    std::mt19937_64 rng(mix_seed(seed, i));
    std::uniform_int_distribution<int> ncomp(1, 4);
    const GaussianMixture mix =
        sample_hull_state(rng(), max_energy, ncomp(rng));
    SampleResult r;
    r.min_delta = mixture_wigner_origin(mix) - bound_min(mixture_mean_photon(mix));
    for (int j = 0; j < n_maps; ++j) {
      const double d = hull_delta(mix, random_map(rng));
      if (d < r.min_delta) {
        r.min_delta = d;
        r.min_index = j;
      }
    }
    results[i] = r;
  });

  OracleReport report;
  report.checks_run = n_samples * (1 + std::max(n_maps, 0));
  double most_negative = 0.0;
  for (long i = 0; i < n_samples; ++i) {
    most_negative = std::min(most_negative, results[i].min_delta);
    if (results[i].min_delta < -1e-9) {
      const std::string where =
          results[i].min_index < 0
              ? "delta1"
              : "map:" + std::to_string(results[i].min_index);
      report.failures.push_back(
          {"hull-sample:" + std::to_string(i) + "/" + where, 0.0,
           results[i].min_delta});
    }
  }
  report.max_abs_deviation = most_negative < 0 ? -most_negative : 0.0;
  return report;
}

namespace {

void check_grid(OracleReport& report, const std::string& name, int n,
                double tol,
                const std::function<std::pair<double, double>(std::size_t)>& eval) {
  std::vector<std::pair<double, double>> vals(n);
  parallel_for(n, [&](std::size_t i) { vals[i] = eval(i); });
  for (int i = 0; i < n; ++i) {
    report.record(name + "[" + std::to_string(i) + "]", vals[i].first,
                  vals[i].second, tol);
  }
}

}  // namespace

OracleReport cross_validate_closed_forms(const GridSpec& spec) {
  OracleReport report;

  // Wigner origin of a pure Gaussian state vs displaced-squeezed-vacuum parity.
  check_grid(report, "wigner-gauss-origin", spec.pure_gaussian_samples, 1e-7,
             [&](std::size_t i) {
               std::mt19937_64 rng(mix_seed(spec.seed, 1000 + i));
               std::uniform_real_distribution<double> u(0.0, 1.0);
               PureGaussianParams p;
               p.alpha = std::polar(std::sqrt(2.0 * u(rng)), 2.0 * kPi * u(rng));
               p.xi = std::polar(std::asinh(std::sqrt(1.2 * u(rng))),
                                 2.0 * kPi * u(rng));
               const int dim =
                   dim_for_energy(p.n()) + squeezing_tail_levels(p.r());
               const double closed = wigner_origin_pure_gaussian(p);
               const double numeric =
                   kTwoOverPi * parity_expectation(to_fock(p, dim));
               return std::make_pair(closed, numeric);
             });

  // Lossy-Fock Delta_1 closed form vs the Kraus + parity pipeline.
  {
    const int mmax = spec.lossy_fock_m_max;
    const int ne = spec.lossy_fock_eps_points;
    check_grid(report, "delta1-lossy-fock", (mmax + 1) * ne, 1e-9,
               [&](std::size_t idx) {
                 const int m = static_cast<int>(idx) / ne;
                 const double eps = double(idx % ne) / (ne - 1);
                 const FockOperator rho = density(fock_state(m, m + 1));
                 const double pipeline = delta1(apply_loss(rho, eps)).delta;
                 return std::make_pair(delta1_lossy_fock(m, eps), pipeline);
               });
  }

  // PAC Wigner closed form vs displaced parity.
  check_grid(report, "pac-wigner", spec.pac_wigner_samples, 1e-7,
             [&](std::size_t i) {
               std::mt19937_64 rng(mix_seed(spec.seed, 2000 + i));
               std::uniform_real_distribution<double> u(0.0, 1.0);
               const PacParams p{2.0 * u(rng)};
               const Complex lambda =
                   std::polar(2.0 * u(rng), 2.0 * kPi * u(rng));
               const double reach =
                   std::pow(std::sqrt(pac_mean_photon(p)) + std::abs(lambda), 2);
               const int dim = dim_for_energy(reach);
               const double numeric =
                   wigner_via_parity(pac_to_fock(p, dim), lambda);
               return std::make_pair(pac_wigner(p, {lambda}), numeric);
             });

  // PSS Wigner closed form vs displaced parity.
  check_grid(report, "pss-wigner", spec.pss_wigner_samples, 1e-7,
             [&](std::size_t i) {
               std::mt19937_64 rng(mix_seed(spec.seed, 3000 + i));
               std::uniform_real_distribution<double> u(0.0, 1.0);
               const PssParams p{0.05 + 0.95 * u(rng)};
               const Complex lambda =
                   std::polar(1.5 * u(rng), 2.0 * kPi * u(rng));
               const double reach =
                   std::pow(std::sqrt(pss_mean_photon(p)) + std::abs(lambda), 2);
               const int dim = dim_for_energy(reach) + squeezing_tail_levels(p.r);
               const double numeric =
                   wigner_via_parity(pss_to_fock(p, dim), lambda);
               return std::make_pair(pss_wigner(p, {lambda}), numeric);
             });

  // Displaced lossy-PAC mean photon number vs the Kraus + moment pipeline.
  check_grid(report, "pac-displaced-nbar", spec.pac_displaced_samples, 1e-8,
             [&](std::size_t i) {
               std::mt19937_64 rng(mix_seed(spec.seed, 4000 + i));
               std::uniform_real_distribution<double> u(0.0, 1.0);
               const double alpha = 2.0 * u(rng);
               const double eps = u(rng);
               const Complex beta =
                   std::polar(2.0 * u(rng), 2.0 * kPi * u(rng));
               const double reach = std::pow(
                   std::sqrt(pac_mean_photon({alpha})) + std::abs(beta), 2);
               const int dim = dim_for_energy(reach);
               const FockOperator lossy =
                   apply_loss(pac_to_fock({alpha}, dim), eps);
               const FockOperator shifted =
                   apply_unitary(displacement_matrix(beta, dim), lossy);
               return std::make_pair(pac_displaced_mean_photon(alpha, eps, beta),
                                     mean_photon(shifted));
             });

  // Squeezed lossy-PSS mean photon number vs the Kraus + moment pipeline.
  check_grid(report, "pss-squeezed-nbar", spec.pss_squeezed_samples, 1e-8,
             [&](std::size_t i) {
               std::mt19937_64 rng(mix_seed(spec.seed, 5000 + i));
               std::uniform_real_distribution<double> u(0.0, 1.0);
               const double r = 0.05 + 0.75 * u(rng);
               const double eps = u(rng);
               const double s = -0.8 + 1.6 * u(rng);
               const double n0 = pss_mean_photon({r});
               const int dim =
                   dim_for_energy(n0 * std::exp(2.0 * std::abs(s)) + 2.0) +
                   squeezing_tail_levels(r + std::abs(s));
               const FockOperator lossy = apply_loss(pss_to_fock({r}, dim), eps);
               const FockOperator squeezed = apply_unitary(
                   squeezing_matrix(Complex(s, 0.0), dim), lossy);
               return std::make_pair(pss_squeezed_mean_photon(r, eps, s),
                                     mean_photon(squeezed));
             });

  return report;
}

}  // namespace wigwitness
