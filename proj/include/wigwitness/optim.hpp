#pragma once

#include <functional>

#include <Eigen/Dense>

namespace wigwitness {

struct ScalarMinResult {
  double x = 0.0;
  double fx = 0.0;
  int evals = 0;
  bool converged = false;
};

/// Derivative-free golden-section minimization on [lo, hi].
ScalarMinResult golden_section_minimize(const std::function<double(double)>& f,
                                        double lo, double hi,
                                        double x_tol = 1e-8,
                                        int max_iter = 200);

struct Simplex2DResult {
  Eigen::Vector2d x = Eigen::Vector2d::Zero();
  double fx = 0.0;
  int evals = 0;
  bool converged = false;
};

/// Nelder-Mead on two variables; safety net for non-axis-aligned minima.
Simplex2DResult nelder_mead_2d(
    const std::function<double(const Eigen::Vector2d&)>& f,
    const Eigen::Vector2d& x0, double step, double x_tol = 1e-8,
    int max_iter = 500);

}  // namespace wigwitness
