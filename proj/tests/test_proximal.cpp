#include <doctest.h>

#include <cmath>
#include <numbers>

#include "orlicz/proximal.hpp"

using namespace orlicz;

namespace {

ProximalOperator quadratic_operator(const Grid& grid) {
  SolverConfig cfg;
  cfg.grad_tol = 1e-12;
  return {ModularSpace::make(grid, PhiFunction::power(2.0, grid.n)),
          Energy::mx_laplacian(grid, 2.0), cfg};
}

// Dense stiffness matrix of the discrete Dirichlet Laplacian: the raw
// gradient of the quadratic energy is L w with L = tridiag(-1,2,-1)/h.
Eigen::MatrixXd stiffness(const Grid& grid) {
  const int n = grid.n;
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    L(i, i) = 2.0 / grid.h;
    if (i + 1 < n) L(i, i + 1) = L(i + 1, i) = -1.0 / grid.h;
  }
  return L;
}

}  // namespace

TEST_CASE("quadratic resolvent equals the linear solve") {
  const Grid grid = Grid::make(0.0, 1.0, 24);
  const ProximalOperator P = quadratic_operator(grid);
  GridFunction u(grid.n);
  for (int i = 0; i < grid.n; ++i)
    u[i] = 0.3 * std::sin(std::numbers::pi * grid.nodes[i]) +
           0.1 * std::sin(3.0 * std::numbers::pi * grid.nodes[i]);
  const double lambda = 0.05;
  // Optimality: w (v - u)/lambda + L v = 0  =>  (W/lambda + L) v = W u/lambda
  Eigen::MatrixXd A = stiffness(grid);
  for (int i = 0; i < grid.n; ++i) A(i, i) += grid.weights[i] / lambda;
  const Eigen::VectorXd rhs = (grid.weights / lambda) * u.array();
  const GridFunction exact = A.ldlt().solve(rhs.matrix());
  const GridFunction v = resolvent(P, lambda, u);
  CHECK((v - exact).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("moreau-yosida value interleaves the energies") {
  const Grid grid = Grid::make(0.0, 1.0, 16);
  const ProximalOperator P = quadratic_operator(grid);
  GridFunction u(grid.n);
  for (int i = 0; i < grid.n; ++i)
    u[i] = 0.2 * std::sin(std::numbers::pi * grid.nodes[i]);
  const double lambda = 0.1;
  const GridFunction v = resolvent(P, lambda, u);
  const double my = moreau_yosida_value(P, lambda, u);
  CHECK(P.energy.value(v) <= my + 1e-12);
  CHECK(my <= P.energy.value(u) + 1e-12);
}

TEST_CASE("yosida approximation is the dual of the rate") {
  const Grid grid = Grid::make(0.0, 1.0, 12);
  const ProximalOperator P = quadratic_operator(grid);
  GridFunction u(grid.n);
  for (int i = 0; i < grid.n; ++i) u[i] = grid.nodes[i] * (1 - grid.nodes[i]);
  const double lambda = 0.25;
  const GridFunction v = resolvent(P, lambda, u);
  const GridFunction b = yosida(P, lambda, u);
  const GridFunction expected = apply_A(P.space, (u - v) / lambda);
  CHECK((b - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("resolvent sweep shrinks monotonically") {
  const Grid grid = Grid::make(0.0, 1.0, 16);
  const ProximalOperator P = quadratic_operator(grid);
  GridFunction u(grid.n);
  for (int i = 0; i < grid.n; ++i)
    u[i] = 0.1 * std::sin(std::numbers::pi * grid.nodes[i]);
  const auto rows = resolvent_convergence(P, u, {1.0, 0.5, 0.25, 0.125});
  REQUIRE(rows.size() == 4);
  for (size_t j = 1; j < rows.size(); ++j) {
    CHECK(rows[j].distance < rows[j - 1].distance);
    CHECK(rows[j].energy >= rows[j - 1].energy - 1e-12);
  }
}

TEST_CASE("invalid lambda is rejected") {
  const Grid grid = Grid::make(0.0, 1.0, 4);
  const ProximalOperator P = quadratic_operator(grid);
  CHECK_THROWS_AS(resolvent(P, 0.0, GridFunction::Zero(4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(resolvent(P, -1.0, GridFunction::Zero(4)),
                  std::invalid_argument);
}
