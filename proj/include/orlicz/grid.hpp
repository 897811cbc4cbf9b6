#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace orlicz {

using GridFunction = Eigen::VectorXd;

/// Uniform discretization of an interval (a,b) with n interior nodes,
/// homogeneous Dirichlet boundary (zero ghost values at a and b) and
/// midpoint quadrature weights w_i = h. A custom-weight variant is
/// provided for measure-weighted configurations used in the modular
/// counterexample tests.
struct Grid {
  double a = 0.0;
  double b = 1.0;
  int n = 0;
  double h = 0.0;  // node spacing; 0 for custom-weight grids
  Eigen::ArrayXd nodes;
  Eigen::ArrayXd weights;
  bool uniform = true;

  static Grid make(double a, double b, int n) {
    if (!(b > a)) throw std::invalid_argument("Grid: require b > a");
    if (n < 1) throw std::invalid_argument("Grid: require n >= 1");
    Grid g;
    g.a = a;
    g.b = b;
    g.n = n;
    g.h = (b - a) / (n + 1);
    g.nodes = Eigen::ArrayXd::LinSpaced(n, a + g.h, b - g.h);
    g.weights = Eigen::ArrayXd::Constant(n, g.h);
    g.uniform = true;
    return g;
  }

  // Arbitrary cells: nodes and positive weights supplied by the caller.
  static Grid with_weights(double a, double b, Eigen::ArrayXd nodes,
                           Eigen::ArrayXd weights) {
    if (!(b > a)) throw std::invalid_argument("Grid: require b > a");
    if (nodes.size() != weights.size() || nodes.size() < 1)
      throw std::invalid_argument("Grid: nodes/weights size mismatch");
    if ((weights <= 0.0).any())
      throw std::invalid_argument("Grid: weights must be positive");
    Grid g;
    g.a = a;
    g.b = b;
    g.n = static_cast<int>(nodes.size());
    g.h = 0.0;
    g.nodes = std::move(nodes);
    g.weights = std::move(weights);
    g.uniform = false;
    return g;
  }

  double measure() const { return weights.sum(); }

  bool matches(const GridFunction& v) const { return v.size() == n; }
};

/// Discrete L2-type duality pairing <u,v> = sum_i w_i u_i v_i.
inline double pairing(const Grid& g, const GridFunction& u,
                      const GridFunction& v) {
  return (g.weights * u.array() * v.array()).sum();
}

struct TimeGrid {
  double T = 1.0;
  int K = 1;

  TimeGrid() = default;
  TimeGrid(double T_, int K_) : T(T_), K(K_) {
    if (!(T > 0.0) || K < 1)
      throw std::invalid_argument("TimeGrid: require T > 0, K >= 1");
  }

  double tau() const { return T / K; }
};

}  // namespace orlicz
