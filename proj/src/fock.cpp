#include "wigwitness/fock.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace wigwitness {

void Tolerances::validate() const {
  if (norm_tol <= 0 || herm_tol <= 0 || trace_tol <= 0 || psd_tol <= 0 ||
      truncation_tol <= 0) {
    throw std::invalid_argument("Tolerances: all tolerances must be positive");
  }
}

FockVector::FockVector(Vector a) : amps(std::move(a)) {
  if (amps.size() < 1) {
    throw std::invalid_argument("FockVector: dim must be >= 1");
  }
}

FockOperator::FockOperator(Matrix m) : mat(std::move(m)) {
  if (mat.rows() < 1 || mat.rows() != mat.cols()) {
    throw std::invalid_argument("FockOperator: matrix must be square, dim >= 1");
  }
}

int dim_for_energy(double nbar) {
  if (nbar < 0) throw std::domain_error("dim_for_energy: nbar must be >= 0");
  return static_cast<int>(std::ceil(4.0 * nbar + 8.0 * std::sqrt(nbar) + 20.0));
}

int squeezing_tail_levels(double r) {
  const double t2 = std::pow(std::tanh(std::abs(r)), 2);
  if (t2 <= 0.0) return 0;
  // tail weight after k levels ~ t2^{k/2}; solve t2^{k/2} < 1e-12
  return static_cast<int>(56.0 / -std::log(t2)) + 2;
}

FockVector fock_state(int m, int dim) {
  if (dim < 1) throw std::invalid_argument("fock_state: dim must be >= 1");
  if (m < 0 || m >= dim) {
    throw std::invalid_argument("fock_state: photon number " +
                                std::to_string(m) + " out of range for dim " +
                                std::to_string(dim));
  }
  Vector v = Vector::Zero(dim);
  v(m) = 1.0;
  return FockVector(std::move(v));
}

FockVector coherent_state(Complex beta, int dim) {
  if (dim < 1) throw std::invalid_argument("coherent_state: dim must be >= 1");
  Vector v = Vector::Zero(dim);
  const double x = std::norm(beta);
  if (x == 0.0) {
    v(0) = 1.0;
    return FockVector(std::move(v));
  }
  const double logb = std::log(std::abs(beta));
  const double argb = std::arg(beta);
  for (int n = 0; n < dim; ++n) {
    const double logmag = -0.5 * x + n * logb - 0.5 * std::lgamma(n + 1.0);
    v(n) = std::polar(std::exp(logmag), n * argb);
  }
  return FockVector(std::move(v));
}

FockOperator density(const FockVector& v) {
  return FockOperator(v.amps * v.amps.adjoint());
}

Matrix annihilation(int dim) {
  Matrix a = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

namespace {

// L_p^{(k)}(x) by upward recurrence in the degree.
double assoc_laguerre(int p, int k, double x) {
  if (p == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + k - x;
  for (int j = 1; j < p; ++j) {
    const double next = ((2.0 * j + 1.0 + k - x) * cur - (j + k) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

// <m|D(beta)|n> for m >= n:
//   sqrt(n!/m!) beta^{m-n} e^{-|beta|^2/2} L_n^{(m-n)}(|beta|^2).
// Magnitude assembled in log space so that the huge/tiny factors never meet.
Complex displacement_element_upper(int m, int n, Complex beta) {
  const int d = m - n;
  const double x = std::norm(beta);
  const double lag = assoc_laguerre(n, d, x);
  if (lag == 0.0) return 0.0;
  double logmag = 0.5 * (std::lgamma(n + 1.0) - std::lgamma(m + 1.0)) - 0.5 * x +
                  std::log(std::abs(lag));
  double phase_angle = 0.0;
  if (d > 0) {
    logmag += d * std::log(std::abs(beta));
    phase_angle = d * std::arg(beta);
  }
  const double sign = lag > 0 ? 1.0 : -1.0;
  return std::polar(sign * std::exp(logmag), phase_angle);
}

}  // namespace

FockOperator displacement_matrix(Complex beta, int dim) {
  if (dim < 1) throw std::invalid_argument("displacement_matrix: dim must be >= 1");
  if (beta == Complex(0, 0)) return FockOperator(Matrix::Identity(dim, dim));
  Matrix D(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n <= m; ++n) {
      D(m, n) = displacement_element_upper(m, n, beta);
      if (n != m) {
        // <n|D(beta)|m> = conj(<m|D(-beta)|n>)
        D(n, m) = std::conj(displacement_element_upper(m, n, -beta));
      }
    }
  }
  return FockOperator(std::move(D));
}

FockOperator squeezing_matrix(Complex xi, int dim) {
  if (dim < 1) throw std::invalid_argument("squeezing_matrix: dim must be >= 1");
  if (xi == Complex(0, 0)) return FockOperator(Matrix::Identity(dim, dim));
  const int pad = 2 * dim;
  if (xi.imag() == 0.0) {
    // Real squeezing has a real generator; the real-arithmetic exponential is
    // several times faster and these are the overwhelmingly common calls.
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(pad, pad);
    for (int n = 0; n + 2 < pad; ++n) {
      const double c = std::sqrt((n + 1.0) * (n + 2.0));
      gen(n + 2, n) = 0.5 * xi.real() * c;
      gen(n, n + 2) = -0.5 * xi.real() * c;
    }
    const Eigen::MatrixXd S = gen.exp();
    return FockOperator(S.topLeftCorner(dim, dim).cast<Complex>());
  }
  Matrix gen = Matrix::Zero(pad, pad);
  for (int n = 0; n + 2 < pad; ++n) {
    const double c = std::sqrt((n + 1.0) * (n + 2.0));
    gen(n + 2, n) = 0.5 * xi * c;
    gen(n, n + 2) = -0.5 * std::conj(xi) * c;
  }
  Matrix S = gen.exp();
  return FockOperator(S.topLeftCorner(dim, dim));
}

void require_state(const FockOperator& rho, const Tolerances& tol) {
  const double herm_dev = (rho.mat - rho.mat.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > tol.herm_tol) {
    throw std::invalid_argument("require_state: not Hermitian (deviation " +
                                std::to_string(herm_dev) + ")");
  }
  const double trace_dev = std::abs(rho.mat.trace() - Complex(1.0, 0.0));
  // Truncated states may legitimately carry a small trace deficit.
  if (trace_dev > tol.truncation_tol) {
    throw std::invalid_argument("require_state: trace deviates from 1 by " +
                                std::to_string(trace_dev));
  }
}

bool is_state(const FockOperator& rho, const Tolerances& tol) {
  const double herm_dev = (rho.mat - rho.mat.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > tol.herm_tol) return false;
  if (std::abs(rho.mat.trace() - Complex(1.0, 0.0)) > tol.truncation_tol) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.mat, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol.psd_tol;
}

double mean_photon(const FockOperator& rho) {
  require_state(rho);
  double n = 0.0;
  for (Eigen::Index k = 0; k < rho.dim(); ++k) n += double(k) * rho.mat(k, k).real();
  return n;
}

Complex moment_a(const FockOperator& rho) {
  // Tr[rho a] = sum_n sqrt(n+1) rho_{n+1,n}
  Complex s = 0.0;
  for (Eigen::Index n = 0; n + 1 < rho.dim(); ++n) {
    s += std::sqrt(double(n + 1)) * rho.mat(n + 1, n);
  }
  return s;
}

Complex moment_a2(const FockOperator& rho) {
  // Tr[rho a^2] = sum_n sqrt((n+1)(n+2)) rho_{n+2,n}
  Complex s = 0.0;
  for (Eigen::Index n = 0; n + 2 < rho.dim(); ++n) {
    s += std::sqrt((n + 1.0) * (n + 2.0)) * rho.mat(n + 2, n);
  }
  return s;
}

double parity_expectation(const FockOperator& rho) {
  double s = 0.0;
  for (Eigen::Index n = 0; n < rho.dim(); ++n) {
    s += (n % 2 == 0 ? 1.0 : -1.0) * rho.mat(n, n).real();
  }
  return s;
}

Eigen::VectorXd populations(const FockOperator& rho) {
  return rho.mat.diagonal().real();
}

FockOperator apply_unitary(const FockOperator& U, const FockOperator& rho) {
  if (U.dim() != rho.dim()) {
    throw std::invalid_argument("apply_unitary: dimension mismatch");
  }
  return FockOperator(U.mat * rho.mat * U.mat.adjoint());
}

FockOperator apply_unitary(const FockOperator& U, const FockOperator& rho,
                           const Tolerances& tol) {
  FockOperator out = apply_unitary(U, rho);
  const double deficit = std::abs(1.0 - out.mat.trace().real());
  if (deficit > tol.truncation_tol) {
    throw TruncationError("apply_unitary: trace deficit " +
                          std::to_string(deficit) +
                          " exceeds truncation tolerance; increase dim");
  }
  return out;
}

}  // namespace wigwitness
