#pragma once

#include "orlicz/grid.hpp"

namespace orlicz {

enum class EnergyKind { Zero, MxLaplacian, FractionalLaplacian };

/// Convex energy on nodal functions with exact gradient under the
/// quadrature pairing and a tridiagonal curvature model for the inner
/// Newton solver.
///
/// MxLaplacian: sum over the n+1 edges (Dirichlet ghosts at a and b) of
///   h * (1/m_e) |(w_{i+1}-w_i)/h|^{m_e}, with the edge exponent m_e
///   averaged from the per-node table.
/// FractionalLaplacian: Gagliardo double sum with zero extension outside
///   the interval; exterior interactions are the closed-form tail
///   integrals of |x-y|^{-(1+2s)}.
class Energy {
 public:
  static Energy zero(Grid grid);
  static Energy mx_laplacian(Grid grid, Eigen::ArrayXd m_nodes);
  static Energy mx_laplacian(Grid grid, double m);
  static Energy fractional(Grid grid, double s, double c_s = 1.0);

  double value(const GridFunction& w) const;

  /// Raw gradient dE/dw_i in nodal coordinates.
  GridFunction grad(const GridFunction& w) const;

  /// Riesz representer of the differential under the quadrature pairing:
  /// <subgradient(w), d> = dE(w)[d] for all nodal directions d.
  GridFunction subgradient(const GridFunction& w) const;

  /// Adds the (tridiagonal part of the) raw Hessian into (diag, off);
  /// off[i] couples nodes i and i+1. Exact for Zero and MxLaplacian,
  /// diagonal plus nearest-neighbor for the fractional kernel.
  void add_hessian(const GridFunction& w, Eigen::VectorXd& diag,
                   Eigen::VectorXd& off) const;

  EnergyKind kind() const { return kind_; }
  const Grid& grid() const { return grid_; }

 private:
  EnergyKind kind_ = EnergyKind::Zero;
  Grid grid_;
  Eigen::ArrayXd m_edges_;   // size n+1
  double s_ = 0.5;
  double c_s_ = 1.0;
  Eigen::MatrixXd kernel_;   // h^2 / |x_i - x_j|^{1+2s}, zero diagonal
  Eigen::ArrayXd exterior_;  // h * tail integrals per node
};

}  // namespace orlicz
