#include "wigwitness/channels.hpp"

#include <cmath>
#include <sstream>

#include "wigwitness/quadrature.hpp"

namespace wigwitness {

LossParam::LossParam(double eps) : epsilon(eps) {
  if (eps < 0 || eps > 1) {
    throw std::domain_error("LossParam: eps must be in [0,1]");
  }
}

LossParam LossParam::from_gamma_t(double gamma_t) {
  if (gamma_t < 0) throw std::domain_error("LossParam: gamma t must be >= 0");
  return LossParam(1.0 - std::exp(-gamma_t));
}

FockOperator apply_loss(const FockOperator& rho, double eps) {
  if (eps < 0 || eps > 1) {
    throw std::domain_error("apply_loss: eps must be in [0,1]");
  }
  const int dim = static_cast<int>(rho.dim());
  if (eps == 0.0) return rho;
  if (eps == 1.0) {
    Matrix out = Matrix::Zero(dim, dim);
    out(0, 0) = rho.mat.trace();
    return FockOperator(std::move(out));
  }
  const double log_t = std::log1p(-eps);  // log(1-eps)
  const double log_e = std::log(eps);
  // Each Kraus operator A_k is a single sub-diagonal band, so the sum runs in
  // O(dim^3) without forming the operators.
  Matrix out = Matrix::Zero(dim, dim);
  std::vector<double> lgam(dim + 1);
  for (int n = 0; n <= dim; ++n) lgam[n] = std::lgamma(n + 1.0);
  std::vector<double> coef(dim);
  for (int k = 0; k < dim; ++k) {
    // coef[i] = <i|A_k|i+k> = sqrt(C(i+k,k) (1-eps)^i eps^k)
    const int band = dim - k;
    for (int i = 0; i < band; ++i) {
      const double log_binom = lgam[i + k] - lgam[i] - lgam[k];
      coef[i] = std::exp(0.5 * (log_binom + i * log_t + k * log_e));
    }
    for (int i = 0; i < band; ++i) {
      for (int j = 0; j < band; ++j) {
        out(i, j) += coef[i] * coef[j] * rho.mat(i + k, j + k);
      }
    }
  }
  return FockOperator(std::move(out));
}

double compose_loss(double eps1, double eps2) {
  if (eps1 < 0 || eps1 > 1 || eps2 < 0 || eps2 > 1) {
    throw std::domain_error("compose_loss: eps must be in [0,1]");
  }
  return 1.0 - (1.0 - eps1) * (1.0 - eps2);
}

double lossy_parity(const Eigen::VectorXd& populations, double eps) {
  if (eps < 0 || eps > 1) {
    throw std::domain_error("lossy_parity: eps must be in [0,1]");
  }
  const double q = 2.0 * eps - 1.0;
  double s = 0.0;
  double qn = 1.0;
  for (Eigen::Index n = 0; n < populations.size(); ++n) {
    s += populations(n) * qn;
    qn *= q;
  }
  return s;
}

double lossy_wigner(const WignerFn& w0, double eps, PhasePoint z,
                    double quad_tol) {
  if (eps < 0 || eps > 1) {
    throw std::domain_error("lossy_wigner: eps must be in [0,1]");
  }
  if (eps == 0.0) return w0(z.lambda);
  if (eps == 1.0) return kTwoOverPi * std::exp(-2.0 * std::norm(z.lambda));

  // Kernel K_eps(z, l') is Gaussian in l' with center z/sqrt(1-eps) and
  // width sigma = sqrt(eps / (2 (1-eps))) per quadrature; after the
  // Gauss-Hermite substitution the prefactor collapses to 1/(pi (1-eps)).
  const double sigma = std::sqrt(eps / (2.0 * (1.0 - eps)));
  const Complex center = z.lambda / std::sqrt(1.0 - eps);
  const double prefactor = 1.0 / (kPi * (1.0 - eps));

  double prev = 0.0;
  bool have_prev = false;
  for (int n = 40; n <= 640; n *= 2) {
    const GaussHermiteRule& rule = gauss_hermite(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = center.real() + sigma * rule.nodes(i);
      double row = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p = center.imag() + sigma * rule.nodes(j);
        row += rule.weights(j) * w0(Complex(x, p));
      }
      sum += rule.weights(i) * row;
    }
    const double est = prefactor * sum;
    if (have_prev && std::abs(est - prev) < quad_tol) return est;
    prev = est;
    have_prev = true;
  }
  std::ostringstream msg;
  msg << "lossy_wigner: quadrature did not converge to " << quad_tol
      << " at 640 nodes (eps=" << eps << ", z=" << z.lambda
      << ", last estimate " << prev << ")";
  throw std::runtime_error(msg.str());
}

GaussianMapSpec GaussianMapSpec::then(const GaussianMapSpec& g) const {
  GaussianMapSpec out = *this;
  out.steps.insert(out.steps.end(), g.steps.begin(), g.steps.end());
  return out;
}

namespace {

GaussianMapSpec::Step parse_step(const std::string& tok) {
  const auto colon = tok.find(':');
  const std::string kind = tok.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : tok.substr(colon + 1);
  if (kind == "disp") {
    const auto comma = arg.find(',');
    const double re = std::stod(arg.substr(0, comma));
    const double im = comma == std::string::npos ? 0.0 : std::stod(arg.substr(comma + 1));
    return GaussianMapSpec::Displacement{Complex(re, im)};
  }
  if (kind == "sq") return GaussianMapSpec::Squeezing{std::stod(arg)};
  if (kind == "loss") {
    const double eps = std::stod(arg);
    if (eps < 0 || eps > 1) {
      throw std::invalid_argument("map spec: loss eps must be in [0,1]");
    }
    return GaussianMapSpec::Loss{eps};
  }
  throw std::invalid_argument("map spec: unknown step '" + tok + "'");
}

}  // namespace

GaussianMapSpec GaussianMapSpec::parse(const std::string& text) {
  if (text.empty() || text == "id") return identity();
  GaussianMapSpec spec;
  if (text.rfind("then(", 0) == 0) {
    if (text.back() != ')') {
      throw std::invalid_argument("map spec: unbalanced then(...)");
    }
    const std::string inner = text.substr(5, text.size() - 6);
    if (inner.empty()) {
      throw std::invalid_argument("map spec: composition list is empty");
    }
    std::stringstream ss(inner);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
      spec.steps.push_back(parse_step(tok));
    }
    return spec;
  }
  spec.steps.push_back(parse_step(text));
  return spec;
}

std::string GaussianMapSpec::str() const {
  if (steps.empty()) return "id";
  std::ostringstream out;
  if (steps.size() > 1) out << "then(";
  bool first = true;
  for (const auto& s : steps) {
    if (!first) out << ';';
    first = false;
    std::visit(
        [&](const auto& step) {
          using T = std::decay_t<decltype(step)>;
          if constexpr (std::is_same_v<T, Displacement>) {
            out << "disp:" << step.beta.real() << ',' << step.beta.imag();
          } else if constexpr (std::is_same_v<T, Squeezing>) {
            out << "sq:" << step.s;
          } else {
            out << "loss:" << step.epsilon;
          }
        },
        s);
  }
  if (steps.size() > 1) out << ')';
  return out.str();
}

FockOperator apply_gaussian_map(const FockOperator& rho,
                                const GaussianMapSpec& g) {
  FockOperator out = rho;
  const int dim = static_cast<int>(rho.dim());
  for (const auto& step : g.steps) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, GaussianMapSpec::Displacement>) {
            out = apply_unitary(displacement_matrix(s.beta, dim), out);
          } else if constexpr (std::is_same_v<T, GaussianMapSpec::Squeezing>) {
            out = apply_unitary(squeezing_matrix(Complex(s.s, 0.0), dim), out);
          } else {
            out = apply_loss(out, s.epsilon);
          }
        },
        step);
  }
  return out;
}

GaussianPhase apply_gaussian_map(const GaussianPhase& g0,
                                 const GaussianMapSpec& g) {
  GaussianPhase out = g0;
  for (const auto& step : g.steps) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, GaussianMapSpec::Displacement>) {
            out = out.displaced(s.beta);
          } else if constexpr (std::is_same_v<T, GaussianMapSpec::Squeezing>) {
            out = out.squeezed(Complex(s.s, 0.0));
          } else {
            out = out.lossy(s.epsilon);
          }
        },
        step);
  }
  return out;
}

}  // namespace wigwitness
