#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "wigwitness/exemplars.hpp"
#include "wigwitness/fock.hpp"
#include "wigwitness/gaussian.hpp"

namespace wigwitness {

/// Loss fraction eps = 1 - e^{-gamma t}; detector efficiency eta = 1 - eps.
struct LossParam {
  double epsilon = 0.0;

  explicit LossParam(double eps);
  static LossParam from_gamma_t(double gamma_t);
  double transmissivity() const { return 1.0 - epsilon; }
  double detector_efficiency() const { return 1.0 - epsilon; }
};

/// Beam-splitter loss channel (vacuum ancilla) as a Kraus sum,
/// <n-k|A_k|n> = sqrt(C(n,k) (1-eps)^{n-k} eps^k).
FockOperator apply_loss(const FockOperator& rho, double eps);

/// Divisibility: 1 - eps = (1 - eps1)(1 - eps2).
double compose_loss(double eps1, double eps2);

/// Parity expectation of a lossy state from the input photon-number
/// populations: sum_n p_n (2 eps - 1)^n. Algebraically identical to
/// parity_expectation(apply_loss(rho, eps)) since loss acts on the diagonal
/// independently of the off-diagonal sector.
double lossy_parity(const Eigen::VectorXd& populations, double eps);

using WignerFn = std::function<double(Complex)>;

/// Wigner value of the lossy state at z via the Gaussian convolution kernel,
/// evaluated with adaptive tensor-product Gauss-Hermite quadrature seeded by
/// the kernel weight (40x40 nodes, doubled until successive estimates differ
/// by less than quad_tol). Throws on non-convergence.
double lossy_wigner(const WignerFn& w0, double eps, PhasePoint z,
                    double quad_tol = 1e-8);

/// A Gaussian map: displacement, real squeezing, loss, or a left-to-right
/// composition. An empty step list is the identity map.
struct GaussianMapSpec {
  struct Displacement {
    Complex beta;
  };
  struct Squeezing {
    double s;
  };
  struct Loss {
    double epsilon;
  };
  using Step = std::variant<Displacement, Squeezing, Loss>;

  std::vector<Step> steps;

  static GaussianMapSpec identity() { return {}; }
  static GaussianMapSpec displacement(Complex beta) {
    return {{Displacement{beta}}};
  }
  static GaussianMapSpec squeezing(double s) { return {{Squeezing{s}}}; }
  static GaussianMapSpec loss(double eps) { return {{Loss{eps}}}; }

  /// Composition: this map first, then g.
  GaussianMapSpec then(const GaussianMapSpec& g) const;

  /// Mini-grammar: `id | disp:re,im | sq:s | loss:eps | then(spec;spec;...)`.
  static GaussianMapSpec parse(const std::string& text);
  std::string str() const;
};

FockOperator apply_gaussian_map(const FockOperator& rho,
                                const GaussianMapSpec& g);

/// Same map applied in the Gaussian phase-space representation.
GaussianPhase apply_gaussian_map(const GaussianPhase& g0,
                                 const GaussianMapSpec& g);

}  // namespace wigwitness
