#pragma once

#include <vector>

#include "orlicz/grid.hpp"
#include "orlicz/phi.hpp"

namespace orlicz {

/// A discretized Musielak-Orlicz space: grid + Phi-function + cached
/// conjugate. Immutable and freely shareable.
struct ModularSpace {
  Grid grid;
  PhiFunction phi;
  PhiFunction conj;

  static ModularSpace make(Grid grid, PhiFunction phi, bool validate = false);
};

/// rho_{phi,Omega}(v) = sum_i w_i phi(x_i, |v_i|)
double modular(const Grid& grid, const PhiFunction& phi, const GridFunction& v);
double modular(const ModularSpace& sp, const GridFunction& v);
double dual_modular(const ModularSpace& sp, const GridFunction& v);

/// Luxemburg norm inf{lambda > 0 : rho(v/lambda) <= 1} by monotone
/// bisection, with the bracket [2^-60 (rho(v)+1), rho(v)+1] certified by
/// the norm-modular bound.
double luxemburg_norm(const Grid& grid, const PhiFunction& phi,
                      const GridFunction& v);
double luxemburg_norm(const ModularSpace& sp, const GridFunction& v);
double dual_luxemburg_norm(const ModularSpace& sp, const GridFunction& v);

/// Pointwise duality map A(v)_i = alpha(x_i, v_i); the subdifferential of
/// the modular under the quadrature pairing.
GridFunction apply_A(const ModularSpace& sp, const GridFunction& v);

/// Returns (sum w_i |u_i v_i|, 2 ||u||_phi ||v||_phi*); the generalized
/// Hoelder inequality asserts lhs <= rhs.
std::pair<double, double> holder_check(const ModularSpace& sp,
                                       const GridFunction& u,
                                       const GridFunction& v);

/// rho_{phi,Q}(v) = sum_k tau * rho_{phi,Omega}(v_k) over K time slices.
double spacetime_modular(const PhiFunction& phi, const Grid& grid,
                         const TimeGrid& tg,
                         const std::vector<GridFunction>& slices);

}  // namespace orlicz
