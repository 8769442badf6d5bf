#pragma once

#include <Eigen/Dense>

namespace wigwitness {

/// Gauss-Hermite rule: integral of exp(-t^2) f(t) dt ~ sum_i w_i f(t_i).
struct GaussHermiteRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Nodes and weights via Golub-Welsch. Results are cached per order.
const GaussHermiteRule& gauss_hermite(int n);

}  // namespace wigwitness
