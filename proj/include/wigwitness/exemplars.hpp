#pragma once

#include "wigwitness/fock.hpp"

namespace wigwitness {

/// Photon-added coherent state a^dag |alpha> / sqrt(1 + alpha^2),
/// real alpha >= 0 (the indicator is phase insensitive).
struct PacParams {
  double alpha = 0.0;
};

/// Photon-subtracted squeezed state a S(r) |0> / sinh r, r > 0.
struct PssParams {
  double r = 0.0;
};

/// Complex phase-space coordinate.
struct PhasePoint {
  Complex lambda{0.0, 0.0};
};

FockVector pac_vector(const PacParams& p, int dim, const Tolerances& tol = {});
FockOperator pac_to_fock(const PacParams& p, int dim, const Tolerances& tol = {});

/// Closed-form Wigner function of the PAC state.
double pac_wigner(const PacParams& p, PhasePoint z);

/// (alpha^4 + 3 alpha^2 + 1) / (1 + alpha^2)
double pac_mean_photon(const PacParams& p);
/// <a>_0 = alpha (2 + alpha^2) / (1 + alpha^2)
double pac_moment_a(const PacParams& p);

FockVector pss_vector(const PssParams& p, int dim, const Tolerances& tol = {});
FockOperator pss_to_fock(const PssParams& p, int dim, const Tolerances& tol = {});

/// Closed-form Wigner function of the PSS state.
double pss_wigner(const PssParams& p, PhasePoint z);

/// 3 sinh^2 r + 1
double pss_mean_photon(const PssParams& p);
/// <a^2>_0 = 3 cosh r sinh r
double pss_moment_a2(const PssParams& p);

/// Wigner value at the origin of a Fock state after loss:
/// (2/pi) (2 eps - 1)^m.
double fock_wigner_origin_lossy(int m, double eps);

}  // namespace wigwitness
