#include "wigwitness/optim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace wigwitness {

ScalarMinResult golden_section_minimize(const std::function<double(double)>& f,
                                        double lo, double hi, double x_tol,
                                        int max_iter) {
  if (!(lo < hi)) {
    throw std::invalid_argument("golden_section_minimize: lo must be < hi");
  }
  constexpr double invphi = 0.6180339887498949;  // 1/phi
  ScalarMinResult res;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  res.evals = 2;
  for (int it = 0; it < max_iter; ++it) {
    if (b - a < x_tol) {
      res.converged = true;
      break;
    }
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
    ++res.evals;
  }
  if (f1 < f2) {
    res.x = x1;
    res.fx = f1;
  } else {
    res.x = x2;
    res.fx = f2;
  }
  return res;
}

Simplex2DResult nelder_mead_2d(
    const std::function<double(const Eigen::Vector2d&)>& f,
    const Eigen::Vector2d& x0, double step, double x_tol, int max_iter) {
  std::array<Eigen::Vector2d, 3> v = {x0, x0 + Eigen::Vector2d(step, 0.0),
                                      x0 + Eigen::Vector2d(0.0, step)};
  std::array<double, 3> fv;
  Simplex2DResult res;
  for (int i = 0; i < 3; ++i) fv[i] = f(v[i]);
  res.evals = 3;

  auto order = [&]() {
    // sort so that fv[0] <= fv[1] <= fv[2]
    for (int i = 0; i < 2; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (fv[j] < fv[i]) {
          std::swap(fv[i], fv[j]);
          std::swap(v[i], v[j]);
        }
      }
    }
  };

  for (int it = 0; it < max_iter; ++it) {
    order();
    if ((v[2] - v[0]).norm() < x_tol && (v[1] - v[0]).norm() < x_tol) {
      res.converged = true;
      break;
    }
    const Eigen::Vector2d centroid = 0.5 * (v[0] + v[1]);
    const Eigen::Vector2d xr = centroid + (centroid - v[2]);
    const double fr = f(xr);
    ++res.evals;
    if (fr < fv[0]) {
      const Eigen::Vector2d xe = centroid + 2.0 * (centroid - v[2]);
      const double fe = f(xe);
      ++res.evals;
      if (fe < fr) {
        v[2] = xe;
        fv[2] = fe;
      } else {
        v[2] = xr;
        fv[2] = fr;
      }
    } else if (fr < fv[1]) {
      v[2] = xr;
      fv[2] = fr;
    } else {
      const Eigen::Vector2d xc = centroid + 0.5 * (v[2] - centroid);
      const double fc = f(xc);
      ++res.evals;
      if (fc < fv[2]) {
        v[2] = xc;
        fv[2] = fc;
      } else {
        // shrink toward the best vertex
        for (int i = 1; i < 3; ++i) {
          v[i] = v[0] + 0.5 * (v[i] - v[0]);
          fv[i] = f(v[i]);
          ++res.evals;
        }
      }
    }
  }
  order();
  res.x = v[0];
  res.fx = fv[0];
  return res;
}

}  // namespace wigwitness
