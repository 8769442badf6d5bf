#pragma once

#include <cstdint>
#include <vector>

#include "wigwitness/fock.hpp"

namespace wigwitness {

/// Parameters of a pure Gaussian state D(alpha) S(xi) |0>.
struct PureGaussianParams {
  Complex alpha{0.0, 0.0};
  Complex xi{0.0, 0.0};

  double r() const { return std::abs(xi); }
  double phi() const { return std::arg(xi); }
  double theta() const { return std::arg(alpha); }
  double n_d() const { return std::norm(alpha); }
  double n_s() const {
    const double s = std::sinh(r());
    return s * s;
  }
  double n() const { return n_d() + n_s(); }
};

/// Discrete probability-weighted mixture of pure Gaussian states.
struct GaussianMixture {
  struct Component {
    double weight;
    PureGaussianParams params;
  };
  std::vector<Component> components;

  void validate(double norm_tol = 1e-10) const;
};

/// Wigner function at the origin of a pure Gaussian state:
/// (2/pi) exp{-2|alpha|^2 [cosh 2r - cos(2 theta - phi) sinh 2r]}.
double wigner_origin_pure_gaussian(const PureGaussianParams& p);

/// The pure Gaussian state of mean photon number n that meets the hull bound
/// with equality: n_s = n^2/(1+2n) and displacement along the squeezed
/// quadrature (theta = pi/2, phi = 0).
PureGaussianParams saturating_state(double n);

double mixture_wigner_origin(const GaussianMixture& mix);
double mixture_mean_photon(const GaussianMixture& mix);

/// Reproducible random hull state: component energies from exponential
/// distributions (rejected above max_energy), uniform phases, flat-simplex
/// weights.
GaussianMixture sample_hull_state(std::uint64_t seed, double max_energy,
                                  int n_components);

/// Fock-basis amplitudes of D(alpha) S(xi) |0>. Throws TruncationError when
/// the truncated vector loses more than truncation_tol of its norm.
FockVector to_fock_vector(const PureGaussianParams& p, int dim,
                          const Tolerances& tol = {});

FockOperator to_fock(const PureGaussianParams& p, int dim,
                     const Tolerances& tol = {});
FockOperator to_fock(const GaussianMixture& mix, int dim,
                     const Tolerances& tol = {});

/// Phase-space form of a single-mode Gaussian state (possibly mixed):
/// 2x2 covariance of (x, p) with vacuum = I/4, mean = (Re alpha, Im alpha).
/// Closed under displacement, squeezing and loss, so hull components can be
/// pushed through Gaussian maps without Fock-basis numerics.
struct GaussianPhase {
  Eigen::Matrix2d cov = 0.25 * Eigen::Matrix2d::Identity();
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();

  static GaussianPhase from_params(const PureGaussianParams& p);

  GaussianPhase displaced(Complex beta) const;
  GaussianPhase squeezed(Complex xi) const;
  GaussianPhase lossy(double eps) const;

  double wigner_origin() const;
  double mean_photon() const;
};

}  // namespace wigwitness
