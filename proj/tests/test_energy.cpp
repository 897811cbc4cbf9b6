#include <doctest.h>

#include <cmath>

#include "orlicz/energy.hpp"

using namespace orlicz;

namespace {

GridFunction fd_gradient(const Energy& E, const GridFunction& w) {
  const int n = static_cast<int>(w.size());
  GridFunction g(n);
  const double step = 1e-6;
  for (int i = 0; i < n; ++i) {
    GridFunction wp = w, wm = w;
    wp[i] += step;
    wm[i] -= step;
    g[i] = (E.value(wp) - E.value(wm)) / (2.0 * step);
  }
  return g;
}

}  // namespace

TEST_CASE("Dirichlet energy of the parabola") {
  const Grid grid = Grid::make(0.0, 1.0, 128);
  const Energy E = Energy::mx_laplacian(grid, 2.0);
  GridFunction u(grid.n);
  for (int i = 0; i < grid.n; ++i)
    u[i] = grid.nodes[i] * (1.0 - grid.nodes[i]);
  // int_0^1 (1/2)|u'|^2 = 1/6
  CHECK(E.value(u) == doctest::Approx(1.0 / 6.0).epsilon(1e-4));
  CHECK(E.value(GridFunction::Zero(grid.n)) == 0.0);
}

TEST_CASE("m-Laplacian gradient against finite differences") {
  const Grid grid = Grid::make(0.0, 1.0, 16);
  Eigen::ArrayXd m = 1.8 + 0.7 * (grid.nodes - grid.a) / (grid.b - grid.a);
  const Energy E = Energy::mx_laplacian(grid, m);
  GridFunction u(grid.n);
  for (int i = 0; i < grid.n; ++i) u[i] = std::sin(3.0 * grid.nodes[i]);
  const GridFunction g = E.grad(u);
  const GridFunction fd = fd_gradient(E, u);
  CHECK((g - fd).cwiseAbs().maxCoeff() <= 1e-5 * (1.0 + g.cwiseAbs().maxCoeff()));
}

TEST_CASE("fractional gradient against finite differences") {
  const Grid grid = Grid::make(0.0, 1.0, 16);
  const Energy E = Energy::fractional(grid, 0.4);
  GridFunction u(grid.n);
  for (int i = 0; i < grid.n; ++i) u[i] = std::cos(2.0 * grid.nodes[i]) - 0.3;
  const GridFunction g = E.grad(u);
  const GridFunction fd = fd_gradient(E, u);
  CHECK((g - fd).cwiseAbs().maxCoeff() <= 1e-5 * (1.0 + g.cwiseAbs().maxCoeff()));
}

TEST_CASE("subgradient is the weighted representer") {
  const Grid grid = Grid::make(0.0, 1.0, 12);
  const Energy E = Energy::mx_laplacian(grid, 2.5);
  GridFunction u(grid.n), d(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    u[i] = std::sin(2.0 * grid.nodes[i]);
    d[i] = std::cos(5.0 * grid.nodes[i]);
  }
  const double directional = E.grad(u).dot(d);
  CHECK(pairing(grid, E.subgradient(u), d) ==
        doctest::Approx(directional).epsilon(1e-12));
}

TEST_CASE("energies are convex along segments") {
  const Grid grid = Grid::make(0.0, 1.0, 10);
  for (const Energy& E :
       {Energy::mx_laplacian(grid, 3.0), Energy::fractional(grid, 0.6),
        Energy::zero(grid)}) {
    GridFunction u = GridFunction::Random(grid.n);
    GridFunction v = GridFunction::Random(grid.n);
    for (double t : {0.25, 0.5, 0.75}) {
      CHECK(E.value(t * u + (1.0 - t) * v) <=
            t * E.value(u) + (1.0 - t) * E.value(v) + 1e-12);
    }
  }
}

TEST_CASE("zero energy is identically zero") {
  const Grid grid = Grid::make(0.0, 1.0, 6);
  const Energy E = Energy::zero(grid);
  GridFunction u = GridFunction::Random(grid.n);
  CHECK(E.value(u) == 0.0);
  CHECK(E.grad(u).isZero(0.0));
  CHECK(E.subgradient(u).isZero(0.0));
}

TEST_CASE("fractional energy vanishes only at zero and is positive") {
  const Grid grid = Grid::make(0.0, 1.0, 8);
  const Energy E = Energy::fractional(grid, 0.5);
  CHECK(E.value(GridFunction::Zero(grid.n)) == 0.0);
  GridFunction u = GridFunction::Constant(grid.n, 1.0);
  CHECK(E.value(u) > 0.0);  // exterior interaction sees the zero extension
}
