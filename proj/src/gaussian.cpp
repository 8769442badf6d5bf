#include "wigwitness/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace wigwitness {

void GaussianMixture::validate(double norm_tol) const {
  if (components.empty()) {
    throw std::invalid_argument("GaussianMixture: no components");
  }
  double total = 0.0;
  for (const auto& c : components) {
    if (c.weight < 0) {
      throw std::invalid_argument("GaussianMixture: negative weight");
    }
    total += c.weight;
  }
  if (std::abs(total - 1.0) > norm_tol) {
    throw std::invalid_argument("GaussianMixture: weights sum to " +
                                std::to_string(total));
  }
}

double wigner_origin_pure_gaussian(const PureGaussianParams& p) {
  // With S(xi) = exp{xi a^dag^2/2 - xi^* a^2/2} the relative phase in the
  // exponent is 2 theta - phi: S^dag a S = a cosh r + e^{i phi} a^dag sinh r,
  // so the displaced-parity trace picks up cos(2 theta - phi).
  const double r = p.r();
  const double f = std::cosh(2.0 * r) -
                   std::cos(2.0 * p.theta() - p.phi()) * std::sinh(2.0 * r);
  return kTwoOverPi * std::exp(-2.0 * p.n_d() * f);
}

PureGaussianParams saturating_state(double n) {
  if (n < 0) throw std::domain_error("saturating_state: n must be >= 0");
  const double ns = n * n / (1.0 + 2.0 * n);
  const double nd = n - ns;
  const double r = std::asinh(std::sqrt(ns));
  PureGaussianParams p;
  p.alpha = Complex(0.0, std::sqrt(nd));  // theta = pi/2
  p.xi = Complex(r, 0.0);                 // phi = 0, so 2 theta - phi = pi
  return p;
}

double mixture_wigner_origin(const GaussianMixture& mix) {
  mix.validate();
  double w = 0.0;
  for (const auto& c : mix.components) {
    w += c.weight * wigner_origin_pure_gaussian(c.params);
  }
  return w;
}

double mixture_mean_photon(const GaussianMixture& mix) {
  mix.validate();
  double n = 0.0;
  for (const auto& c : mix.components) n += c.weight * c.params.n();
  return n;
}

GaussianMixture sample_hull_state(std::uint64_t seed, double max_energy,
                                  int n_components) {
  if (n_components < 1) {
    throw std::invalid_argument("sample_hull_state: n_components must be >= 1");
  }
  if (max_energy < 0) {
    throw std::domain_error("sample_hull_state: max_energy must be >= 0");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);

  GaussianMixture mix;
  mix.components.reserve(n_components);
  for (int i = 0; i < n_components; ++i) {
    double nd = 0.0, ns = 0.0;
    if (max_energy > 0) {
      const double mean = max_energy / 4.0;
      std::exponential_distribution<double> expo(1.0 / mean);
      do {
        nd = expo(rng);
        ns = expo(rng);
      } while (nd + ns > max_energy);
    }
    PureGaussianParams p;
    const double theta = angle(rng);
    const double phi = angle(rng);
    p.alpha = std::polar(std::sqrt(nd), theta);
    p.xi = std::polar(std::asinh(std::sqrt(ns)), phi);
    mix.components.push_back({0.0, p});
  }

  // Flat-simplex weights from sorted uniform spacings.
  std::vector<double> cuts(n_components - 1);
  for (auto& c : cuts) c = unif(rng);
  std::sort(cuts.begin(), cuts.end());
  double prev = 0.0;
  for (int i = 0; i < n_components; ++i) {
    const double next = (i + 1 < n_components) ? cuts[i] : 1.0;
    mix.components[i].weight = next - prev;
    prev = next;
  }
  return mix;
}

FockVector to_fock_vector(const PureGaussianParams& p, int dim,
                          const Tolerances& tol) {
  // Squeezed vacuum by its even-photon series
  //   c_{2k} = c_{2k-2} e^{i phi} tanh r sqrt((2k-1)/(2k)),  c_0 = sech^{1/2} r
  // (cheaper and better conditioned than exponentiating the generator),
  // then displace.
  Vector v = Vector::Zero(dim);
  const double r = p.r();
  const Complex t = std::polar(std::tanh(r), p.phi());
  Complex c = 1.0 / std::sqrt(std::cosh(r));
  v(0) = c;
  for (int k = 1; 2 * k < dim; ++k) {
    c *= t * std::sqrt((2.0 * k - 1.0) / (2.0 * k));
    v(2 * k) = c;
  }
  if (p.alpha != Complex(0, 0)) {
    v = displacement_matrix(p.alpha, dim).mat * v;
  }
  FockVector out{std::move(v)};
  if (out.norm_deficit() > tol.truncation_tol) {
    throw TruncationError("to_fock_vector: norm deficit " +
                          std::to_string(out.norm_deficit()) + " at dim " +
                          std::to_string(dim));
  }
  return out;
}

FockOperator to_fock(const PureGaussianParams& p, int dim,
                     const Tolerances& tol) {
  return density(to_fock_vector(p, dim, tol));
}

FockOperator to_fock(const GaussianMixture& mix, int dim,
                     const Tolerances& tol) {
  mix.validate(tol.norm_tol);
  Matrix rho = Matrix::Zero(dim, dim);
  for (const auto& c : mix.components) {
    const FockVector v = to_fock_vector(c.params, dim, tol);
    rho += c.weight * (v.amps * v.amps.adjoint());
  }
  return FockOperator(std::move(rho));
}

namespace {

Eigen::Matrix2d symplectic_squeeze(Complex xi) {
  const double r = std::abs(xi);
  const double phi = std::arg(xi);
  Eigen::Matrix2d R;
  R << std::cos(phi), std::sin(phi), std::sin(phi), -std::cos(phi);
  return std::cosh(r) * Eigen::Matrix2d::Identity() + std::sinh(r) * R;
}

}  // namespace

GaussianPhase GaussianPhase::from_params(const PureGaussianParams& p) {
  GaussianPhase g;
  const Eigen::Matrix2d S = symplectic_squeeze(p.xi);
  g.cov = 0.25 * S * S.transpose();
  g.mean = Eigen::Vector2d(p.alpha.real(), p.alpha.imag());
  return g;
}

GaussianPhase GaussianPhase::displaced(Complex beta) const {
  GaussianPhase g = *this;
  g.mean += Eigen::Vector2d(beta.real(), beta.imag());
  return g;
}

GaussianPhase GaussianPhase::squeezed(Complex xi) const {
  const Eigen::Matrix2d S = symplectic_squeeze(xi);
  GaussianPhase g;
  g.cov = S * cov * S.transpose();
  g.mean = S * mean;
  return g;
}

GaussianPhase GaussianPhase::lossy(double eps) const {
  if (eps < 0 || eps > 1) {
    throw std::domain_error("GaussianPhase::lossy: eps must be in [0,1]");
  }
  GaussianPhase g;
  g.cov = (1.0 - eps) * cov + 0.25 * eps * Eigen::Matrix2d::Identity();
  g.mean = std::sqrt(1.0 - eps) * mean;
  return g;
}

double GaussianPhase::wigner_origin() const {
  const double det = cov.determinant();
  const double q = mean.dot(cov.inverse() * mean);
  return std::exp(-0.5 * q) / (2.0 * kPi * std::sqrt(det));
}

double GaussianPhase::mean_photon() const {
  return cov.trace() + mean.squaredNorm() - 0.5;
}

}  // namespace wigwitness
