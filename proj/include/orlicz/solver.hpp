#pragma once

#include <functional>

#include "orlicz/grid.hpp"

namespace orlicz {

struct SolverConfig {
  double grad_tol = 1e-10;
  int max_iters = 200;
  double hessian_floor = 1e-10;
  double shrink = 0.5;    // backtracking shrink factor
  double armijo = 1e-4;   // sufficient-decrease constant
};

struct SolverReport {
  int iterations = 0;
  double objective = 0.0;
  double grad_norm = 0.0;
  bool converged = false;
};

/// Smooth convex objective on nodal vectors. `hess` (optional) accumulates
/// the raw tridiagonal curvature; when absent the solver falls back to
/// floored gradient descent with backtracking.
struct Objective {
  std::function<double(const GridFunction&)> value;
  std::function<GridFunction(const GridFunction&)> grad;
  std::function<void(const GridFunction&, Eigen::VectorXd& diag,
                     Eigen::VectorXd& off)>
      hess;
};

/// Damped Newton with tridiagonal curvature and Armijo backtracking. The
/// stopping norm is the quadrature-dual norm sqrt(sum g_i^2 / w_i) of the
/// raw gradient. Throws on NaN objectives; non-convergence is reported,
/// not thrown.
std::pair<GridFunction, SolverReport> minimize(const Objective& obj,
                                               GridFunction x0,
                                               const Grid& grid,
                                               const SolverConfig& cfg);

}  // namespace orlicz
