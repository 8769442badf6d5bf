#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace wigwitness {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoOverPi = 2.0 / kPi;

/// Numerical tolerances used throughout the library. Defaults are sized for
/// double precision at truncation dimensions up to ~200.
struct Tolerances {
  double norm_tol = 1e-10;
  double herm_tol = 1e-10;
  double trace_tol = 1e-10;
  double psd_tol = 1e-9;
  double truncation_tol = 1e-8;

  void validate() const;
};

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Pure state in the truncated number basis: amplitudes indexed by photon
/// number 0..dim-1.
struct FockVector {
  Vector amps;

  FockVector() = default;
  explicit FockVector(Vector a);

  Eigen::Index dim() const { return amps.size(); }
  double norm_deficit() const { return std::abs(1.0 - amps.squaredNorm()); }
};

/// Operator (or density matrix) in the truncated number basis.
struct FockOperator {
  Matrix mat;

  FockOperator() = default;
  explicit FockOperator(Matrix m);

  Eigen::Index dim() const { return mat.rows(); }
};

/// Truncation dimension heuristic: keeps high-energy tails below ~1e-12 for
/// mean photon numbers up to a few.
int dim_for_energy(double nbar);

/// Extra truncation levels for squeezed states, whose number-tail only falls
/// off geometrically (ratio tanh^2 r per photon pair) rather than at the
/// Poisson-like rate dim_for_energy assumes. Sized to push the tail weight
/// below ~1e-12.
int squeezing_tail_levels(double r);

FockVector fock_state(int m, int dim);
FockVector coherent_state(Complex beta, int dim);

/// Density operator |v><v|.
FockOperator density(const FockVector& v);

/// Matrix of the annihilation operator a.
Matrix annihilation(int dim);

/// Matrix of D(beta) = exp{beta a^dag - beta^* a} from the closed-form
/// associated-Laguerre matrix elements (exact per element, no generator
/// exponentiation).
FockOperator displacement_matrix(Complex beta, int dim);

/// Matrix of S(xi) = exp{xi (a^dag)^2 / 2 - xi^* a^2 / 2}. Built by
/// exponentiating the truncated generator at padded dimension 2*dim and
/// cropping, which confines truncation error to the discarded rows.
FockOperator squeezing_matrix(Complex xi, int dim);

/// Cheap state checks (Hermiticity and unit trace). Throws
/// std::invalid_argument on violation.
void require_state(const FockOperator& rho, const Tolerances& tol = {});

/// Full state validation including the minimum-eigenvalue check.
bool is_state(const FockOperator& rho, const Tolerances& tol = {});

/// Tr[rho a^dag a]
double mean_photon(const FockOperator& rho);
/// Tr[rho a]
Complex moment_a(const FockOperator& rho);
/// Tr[rho a^2]
Complex moment_a2(const FockOperator& rho);
/// Tr[rho (-1)^{a^dag a}], in [-1, 1]
double parity_expectation(const FockOperator& rho);

/// Photon-number populations (the diagonal).
Eigen::VectorXd populations(const FockOperator& rho);

/// U rho U^dag
FockOperator apply_unitary(const FockOperator& U, const FockOperator& rho);

/// As above, but throws TruncationError if the output trace deficit exceeds
/// tol.truncation_tol.
FockOperator apply_unitary(const FockOperator& U, const FockOperator& rho,
                           const Tolerances& tol);

}  // namespace wigwitness
