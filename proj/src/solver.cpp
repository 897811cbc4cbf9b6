#include "orlicz/solver.hpp"

#include <cmath>
#include <stdexcept>

namespace orlicz {

namespace {

// Thomas algorithm for a symmetric tridiagonal system (diag, off).
Eigen::VectorXd solve_tridiag(Eigen::VectorXd diag, const Eigen::VectorXd& off,
                              Eigen::VectorXd rhs) {
  const int n = static_cast<int>(diag.size());
  for (int i = 1; i < n; ++i) {
    const double m = off[i - 1] / diag[i - 1];
    diag[i] -= m * off[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  Eigen::VectorXd x(n);
  x[n - 1] = rhs[n - 1] / diag[n - 1];
  for (int i = n - 2; i >= 0; --i)
    x[i] = (rhs[i] - off[i] * x[i + 1]) / diag[i];
  return x;
}

double dual_norm(const Grid& grid, const GridFunction& g) {
  return std::sqrt((g.array().square() / grid.weights).sum());
}

}  // namespace

std::pair<GridFunction, SolverReport> minimize(const Objective& obj,
                                               GridFunction x0,
                                               const Grid& grid,
                                               const SolverConfig& cfg) {
  const int n = grid.n;
  GridFunction x = std::move(x0);
  double fx = obj.value(x);
  if (std::isnan(fx)) throw std::runtime_error("minimize: NaN objective");

  SolverReport rep;
  bool stalled = false;
  int no_progress = 0;
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    const GridFunction g = obj.grad(x);
    rep.grad_norm = dual_norm(grid, g);
    rep.iterations = iter;
    rep.objective = fx;
    if (rep.grad_norm <= cfg.grad_tol) {
      rep.converged = true;
      return {x, rep};
    }

    Eigen::VectorXd dir;
    if (obj.hess) {
      Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
      Eigen::VectorXd off = Eigen::VectorXd::Zero(std::max(0, n - 1));
      obj.hess(x, diag, off);
      for (int i = 0; i < n; ++i) {
        if (!std::isfinite(diag[i]))
          diag[i] = 1e16;  // inf curvature at a degenerate origin
        else if (diag[i] < cfg.hessian_floor)
          diag[i] = cfg.hessian_floor;
      }
      for (int i = 0; i + 1 < n; ++i)
        if (!std::isfinite(off[i])) off[i] = 0.0;
      dir = -solve_tridiag(diag, off, g);
      if (dir.dot(g) >= 0.0) dir = -g;  // curvature model failed; steepest descent
    } else {
      dir = -g;
    }

    // Armijo backtracking. A floored curvature model can make the Newton
    // step too small to move the iterate at all (e.g. when every node sits
    // exactly on a kink of alpha), so retry with steepest descent before
    // declaring a stall.
    bool accepted = false;
    const double f_before = fx;
    for (int attempt = 0; attempt < 2 && !accepted; ++attempt) {
      const double slope = g.dot(dir);
      double t = 1.0;
      for (int ls = 0; ls < 60; ++ls) {
        const GridFunction cand = x + t * dir;
        const double fc = obj.value(cand);
        if (std::isnan(fc)) throw std::runtime_error("minimize: NaN objective");
        if (fc < fx + cfg.armijo * t * slope) {
          x = cand;
          fx = fc;
          accepted = true;
          break;
        }
        t *= cfg.shrink;
      }
      if (!accepted) dir = -g;
    }
    if (!accepted) {  // step underflow: stationary to rounding
      stalled = true;
      break;
    }
    if (f_before - fx <= 4.0 * 1e-16 * (1.0 + std::abs(f_before))) {
      if (++no_progress >= 3) {  // decrease is below rounding granularity
        stalled = true;
        break;
      }
    } else {
      no_progress = 0;
    }
  }

  const GridFunction g = obj.grad(x);
  rep.grad_norm = dual_norm(grid, g);
  rep.objective = fx;
  // An Armijo stall with a small relative gradient means the objective is
  // optimal to machine precision even though the absolute tolerance is out
  // of reach for this scaling.
  rep.converged = rep.grad_norm <= cfg.grad_tol ||
                  (stalled && rep.grad_norm <= 1e-6 * (1.0 + std::abs(fx)));
  return {x, rep};
}

}  // namespace orlicz
