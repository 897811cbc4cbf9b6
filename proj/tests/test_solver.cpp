#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "orlicz/solver.hpp"

using namespace orlicz;

TEST_CASE("decoupled cubic program has the closed-form solution") {
  const Grid grid = Grid::make(0.0, 1.0, 5);
  GridFunction target(5);
  target << 0.3, -1.2, 2.0, 0.0, -0.04;
  // minimize sum_i w_i (|x_i|^3/3 - g_i x_i): alpha(x) = |x|^2 sign(x) = g
  Objective obj;
  obj.value = [&](const GridFunction& x) {
    return (grid.weights *
            (x.array().abs().pow(3.0) / 3.0 - target.array() * x.array()))
        .sum();
  };
  obj.grad = [&](const GridFunction& x) {
    GridFunction g(x.size());
    for (int i = 0; i < x.size(); ++i)
      g[i] = grid.weights[i] * (std::copysign(x[i] * x[i], x[i]) - target[i]);
    return g;
  };
  obj.hess = [&](const GridFunction& x, Eigen::VectorXd& diag,
                 Eigen::VectorXd& off) {
    for (int i = 0; i < x.size(); ++i)
      diag[i] += grid.weights[i] * 2.0 * std::abs(x[i]);
    (void)off;
  };
  SolverConfig cfg;
  cfg.grad_tol = 1e-12;
  auto [x, rep] = minimize(obj, GridFunction::Ones(5), grid, cfg);
  CHECK(rep.converged);
  for (int i = 0; i < 5; ++i) {
    const double exact =
        std::copysign(std::sqrt(std::abs(target[i])), target[i]);
    // absolute slack for the degenerate root at zero curvature
    CHECK(std::abs(x[i] - exact) <= 1e-5 + 1e-6 * std::abs(exact));
  }
}

TEST_CASE("tridiagonal quadratic solves in one Newton step") {
  const Grid grid = Grid::make(0.0, 1.0, 8);
  Eigen::VectorXd b = Eigen::VectorXd::LinSpaced(8, -1.0, 1.0);
  // f(x) = 1/2 x^T T x - b^T x with T = tridiag(-1, 3, -1)
  auto apply_T = [](const GridFunction& x) {
    GridFunction y = 3.0 * x;
    for (int i = 0; i + 1 < x.size(); ++i) {
      y[i] -= x[i + 1];
      y[i + 1] -= x[i];
    }
    return y;
  };
  Objective obj;
  obj.value = [&](const GridFunction& x) {
    return 0.5 * x.dot(apply_T(x)) - b.dot(x);
  };
  obj.grad = [&](const GridFunction& x) {
    return GridFunction(apply_T(x) - b);
  };
  obj.hess = [&](const GridFunction&, Eigen::VectorXd& diag,
                 Eigen::VectorXd& off) {
    diag.array() += 3.0;
    off.array() += -1.0;
  };
  SolverConfig cfg;
  auto [x, rep] = minimize(obj, GridFunction::Zero(8), grid, cfg);
  CHECK(rep.converged);
  CHECK(rep.iterations <= 2);
  CHECK((apply_T(x) - b).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("gradient-only fallback still converges") {
  const Grid grid = Grid::make(0.0, 1.0, 3);
  Objective obj;
  obj.value = [](const GridFunction& x) { return 0.5 * x.squaredNorm(); };
  obj.grad = [](const GridFunction& x) { return x; };
  SolverConfig cfg;
  cfg.grad_tol = 1e-8;
  cfg.max_iters = 2000;
  auto [x, rep] = minimize(obj, GridFunction::Constant(3, 2.0), grid, cfg);
  CHECK(rep.converged);
  CHECK(x.cwiseAbs().maxCoeff() <= 1e-6);
}

TEST_CASE("NaN objectives are reported as errors") {
  const Grid grid = Grid::make(0.0, 1.0, 2);
  Objective obj;
  obj.value = [](const GridFunction&) {
    return std::numeric_limits<double>::quiet_NaN();
  };
  obj.grad = [](const GridFunction& x) { return x; };
  CHECK_THROWS_AS(minimize(obj, GridFunction::Zero(2), grid, SolverConfig{}),
                  std::runtime_error);
}
