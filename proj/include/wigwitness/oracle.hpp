#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wigwitness/fock.hpp"

namespace wigwitness {

struct OracleFailure {
  std::string id;
  double expected;
  double got;
};

struct OracleReport {
  long checks_run = 0;
  double max_abs_deviation = 0.0;
  std::vector<OracleFailure> failures;

  void record(const std::string& id, double expected, double got, double tol);
};

/// Brute-force Wigner evaluation: conjugate by D(-z), then take the parity
/// expectation. The independent cross-check for every closed-form and
/// fast-path Wigner value in the library.
double wigner_via_parity(const FockOperator& rho, Complex z);

/// Soundness campaign: sampled hull states, each evaluated bare and under
/// n_maps random Gaussian maps; a failure is any Delta below -1e-9.
/// max_abs_deviation reports the most negative Delta seen (0 if none).
OracleReport run_hull_campaign(long n_samples, double max_energy, int n_maps,
                               std::uint64_t seed);

/// Grid sizes for cross_validate_closed_forms. Defaults give >= 50 points
/// per formula.
struct GridSpec {
  int pure_gaussian_samples = 60;   // Wigner origin of D(a)S(xi)|0>
  int lossy_fock_m_max = 10;        // Delta_1 closed form, per-m eps grid
  int lossy_fock_eps_points = 11;
  int pac_wigner_samples = 60;
  int pss_wigner_samples = 60;
  int pac_displaced_samples = 60;   // displaced-PAC mean photon number
  int pss_squeezed_samples = 60;    // squeezed-PSS mean photon number
  std::uint64_t seed = 20130521;
};

/// Validates each closed form against the Fock-basis parity/moment pipeline.
OracleReport cross_validate_closed_forms(const GridSpec& spec = {});

}  // namespace wigwitness
