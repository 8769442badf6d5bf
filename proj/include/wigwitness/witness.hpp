#pragma once

#include <optional>

#include "wigwitness/channels.hpp"
#include "wigwitness/fock.hpp"

namespace wigwitness {

/// Verdict separation from round-off at dim <= 200.
inline constexpr double kDecisionTol = 1e-9;

enum class Verdict { QuantumNonGaussian, Inconclusive };

/// Outcome of one witness evaluation. delta < -decision_tol certifies
/// quantum non-Gaussianity; delta >= 0 is inconclusive (hull states are
/// never excluded).
struct WitnessReport {
  double wigner_at_origin = 0.0;
  double mean_photon = 0.0;
  double bound = 0.0;
  double delta = 0.0;
  GaussianMapSpec map_used;
  Verdict verdict = Verdict::Inconclusive;
};

/// Hull lower bound on W(0): B_min(n) = (2/pi) exp{-2 n (1+n)}.
double bound_min(double nbar);

/// Wigner value W[rho](z) through the displaced-parity trace
/// (2/pi) Tr[rho D(2z) Pi]; exact at truncation level, O(dim^2) per point.
double wigner_at(const FockOperator& rho, Complex z);

/// First indicator: Delta_1 = W[rho](0) - B_min(nbar).
WitnessReport delta1(const FockOperator& rho);

/// Second indicator: Delta_2 = W[E_G(rho)](0) - B_min(nbar after the map).
WitnessReport delta2(const FockOperator& rho, const GaussianMapSpec& g);

/// Closed form for lossy Fock states:
/// (2/pi) { (2 eps - 1)^m - exp[-2 (1-eps) m ((1-eps) m + 1)] }.
double delta1_lossy_fock(int m, double eps);

/// Mean photon number of a lossy PAC state after an extra displacement beta:
/// (1-eps) n0 + |beta|^2 + sqrt(1-eps) (beta^* <a>_0 + beta <a^dag>_0).
double pac_displaced_mean_photon(double alpha, double eps, Complex beta);

/// Mean photon number of a lossy PSS state after an extra squeezing s:
/// (1-eps) [n0 (mu_s^2 + nu_s^2) + mu_s nu_s (<a^2>_0 + <a^dag2>_0)] + nu_s^2.
double pss_squeezed_mean_photon(double r, double eps, double s);

struct SqueezingOpt {
  double s = 0.0;
  /// False when the closed form left the arccosh domain and the golden-section
  /// fallback was used instead.
  bool analytic = true;
};

/// Squeezing that minimizes pss_squeezed_mean_photon (and hence Delta_pss),
/// from the analytic mu_opt expression when its domain allows.
SqueezingOpt pss_optimal_squeezing(double r, double eps);

struct DisplacementOpt {
  Complex beta{0.0, 0.0};
  WitnessReport report;
  bool converged = false;
};

/// Minimize Delta_2 over displacements with real part in [box_lo, box_hi].
/// Grid pre-scan plus golden section on the real axis (Wigner symmetry for
/// the real-parameter families), then a 2D simplex polish.
DisplacementOpt optimize_displacement(const FockOperator& rho, double box_lo,
                                      double box_hi);

struct SqueezeMapOpt {
  double s = 0.0;
  WitnessReport report;
};

/// Minimize Delta_2 over real squeezing maps for an arbitrary state. W(0) is
/// squeezing-invariant, so this only minimizes the mapped energy, computed
/// from the state's second moments without building squeezing matrices.
SqueezeMapOpt optimize_squeezing(const FockOperator& rho);

enum class StateFamily { Fock, Pac, Pss };

/// Full report for Delta_pac(beta): Wigner value of the lossy PAC state at
/// -beta (convolution quadrature over the closed form) against the
/// displaced-energy bound.
WitnessReport pac_displaced_report(double alpha, double eps, Complex beta);

/// Full report for Delta_pss(s): squeezing-invariant W(0) of the lossy PSS
/// state against the squeezed-energy bound.
WitnessReport pss_squeezed_report(double r, double eps, double s);

/// Report for one family state after loss eps; criterion 2 optimizes over
/// the family's map parameters (displacement for PAC, squeezing for PSS).
WitnessReport lossy_report(StateFamily family, double param, double eps,
                           int criterion);

struct EpsMaxResult {
  /// Empty when no violation occurs at any loss value.
  std::optional<double> eps_max;
  int criterion = 1;
  GaussianMapSpec map_at_max;
};

/// Largest loss at which the criterion still detects quantum non-Gaussianity:
/// coarse scan at eps_grid, then bisection of the final sign change to
/// eps_tol. Map families per state: displacement for PAC, squeezing for PSS,
/// identity for Fock.
EpsMaxResult eps_max(StateFamily family, double param, int criterion,
                     double eps_grid = 1e-3, double eps_tol = 1e-6);

/// Delta along the loss sweep for one family, used by eps_max and the figure
/// sweeps. For criterion 2 the value is already optimized over the family's
/// map parameters.
double delta_lossy(StateFamily family, double param, double eps, int criterion);

}  // namespace wigwitness
