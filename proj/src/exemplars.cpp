#include "wigwitness/exemplars.hpp"

#include <cmath>

namespace wigwitness {

FockVector pac_vector(const PacParams& p, int dim, const Tolerances& tol) {
  if (p.alpha < 0) throw std::domain_error("pac_vector: alpha must be >= 0");
  if (dim < 2) throw std::invalid_argument("pac_vector: dim must be >= 2");
  const FockVector coh = coherent_state(p.alpha, dim);
  Vector v = Vector::Zero(dim);
  // a^dag |alpha>, normalized by sqrt(1 + alpha^2).
  const double norm = std::sqrt(1.0 + p.alpha * p.alpha);
  for (int n = 0; n + 1 < dim; ++n) {
    v(n + 1) = std::sqrt(n + 1.0) * coh.amps(n) / norm;
  }
  FockVector out{std::move(v)};
  if (out.norm_deficit() > tol.truncation_tol) {
    throw TruncationError("pac_vector: norm deficit " +
                          std::to_string(out.norm_deficit()) + " at dim " +
                          std::to_string(dim));
  }
  return out;
}

FockOperator pac_to_fock(const PacParams& p, int dim, const Tolerances& tol) {
  return density(pac_vector(p, dim, tol));
}

double pac_wigner(const PacParams& p, PhasePoint z) {
  const double a = p.alpha;
  const Complex l = z.lambda;
  const double expo = -2.0 * std::norm(a - l);
  const double bracket =
      -1.0 + a * a + 4.0 * std::norm(l) - 2.0 * a * (l + std::conj(l)).real();
  return kTwoOverPi * std::exp(expo) / (1.0 + a * a) * bracket;
}

double pac_mean_photon(const PacParams& p) {
  const double a2 = p.alpha * p.alpha;
  return (a2 * a2 + 3.0 * a2 + 1.0) / (1.0 + a2);
}

double pac_moment_a(const PacParams& p) {
  const double a2 = p.alpha * p.alpha;
  return p.alpha * (2.0 + a2) / (1.0 + a2);
}

FockVector pss_vector(const PssParams& p, int dim, const Tolerances& tol) {
  if (p.r <= 0) {
    throw std::domain_error("pss_vector: r must be > 0 (state is undefined at r = 0)");
  }
  if (dim < 2) throw std::invalid_argument("pss_vector: dim must be >= 2");
  // S(r)|0> = (1/sqrt(cosh r)) sum_k (tanh r)^k sqrt((2k)!)/(2^k k!) |2k>;
  // applying a and dividing by sinh r leaves support on odd indices.
  const double t = std::tanh(p.r);
  Vector v = Vector::Zero(dim);
  double c = 1.0 / std::sqrt(std::cosh(p.r));  // amplitude of |2k>
  for (int k = 1; 2 * k - 1 < dim; ++k) {
    c *= t * std::sqrt((2.0 * k - 1.0) / (2.0 * k));
    v(2 * k - 1) = c * std::sqrt(2.0 * k) / std::sinh(p.r);
  }
  FockVector out{std::move(v)};
  if (out.norm_deficit() > tol.truncation_tol) {
    throw TruncationError("pss_vector: norm deficit " +
                          std::to_string(out.norm_deficit()) + " at dim " +
                          std::to_string(dim));
  }
  return out;
}

FockOperator pss_to_fock(const PssParams& p, int dim, const Tolerances& tol) {
  return density(pss_vector(p, dim, tol));
}

double pss_wigner(const PssParams& p, PhasePoint z) {
  if (p.r <= 0) throw std::domain_error("pss_wigner: r must be > 0");
  const Complex l = z.lambda;
  const double c2 = std::cosh(2.0 * p.r);
  const double s2 = std::sinh(2.0 * p.r);
  const double quad = (l * l + std::conj(l) * std::conj(l)).real();
  const double expo = -2.0 * std::norm(l) * c2 + quad * s2;
  const double bracket = 1.0 - 4.0 * std::norm(l) * c2 + 2.0 * quad * s2;
  return -kTwoOverPi * std::exp(expo) * bracket;
}

double pss_mean_photon(const PssParams& p) {
  const double s = std::sinh(p.r);
  return 3.0 * s * s + 1.0;
}

double pss_moment_a2(const PssParams& p) {
  return 3.0 * std::cosh(p.r) * std::sinh(p.r);
}

double fock_wigner_origin_lossy(int m, double eps) {
  if (m < 0) throw std::domain_error("fock_wigner_origin_lossy: m must be >= 0");
  if (eps < 0 || eps > 1) {
    throw std::domain_error("fock_wigner_origin_lossy: eps must be in [0,1]");
  }
  return kTwoOverPi * std::pow(2.0 * eps - 1.0, m);
}

}  // namespace wigwitness
