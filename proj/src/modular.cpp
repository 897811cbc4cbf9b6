#include "orlicz/modular.hpp"

#include <cmath>
#include <stdexcept>

namespace orlicz {

namespace {

void require_match(const Grid& g, const GridFunction& v, const char* who) {
  if (!g.matches(v))
    throw std::invalid_argument(std::string(who) + ": grid mismatch");
}

}  // namespace

ModularSpace ModularSpace::make(Grid grid, PhiFunction phi, bool validate) {
  if (phi.nodes() != grid.n)
    throw std::invalid_argument("ModularSpace: phi node count != grid size");
  if (validate) {
    const auto rep =
        validate_assumption_alpha(phi, log_space(1e-6, 1e6, 60), 1e-6);
    if (!rep.pass())
      throw std::invalid_argument(
          "ModularSpace: phi fails the structural validation");
  }
  PhiFunction conj = phi.conjugate();
  return ModularSpace{std::move(grid), std::move(phi), std::move(conj)};
}

double modular(const Grid& grid, const PhiFunction& phi,
               const GridFunction& v) {
  require_match(grid, v, "modular");
  double acc = 0.0;
  for (int i = 0; i < grid.n; ++i)
    acc += grid.weights[i] * phi.phi(i, std::abs(v[i]));
  return acc;
}

double modular(const ModularSpace& sp, const GridFunction& v) {
  return modular(sp.grid, sp.phi, v);
}

double dual_modular(const ModularSpace& sp, const GridFunction& v) {
  return modular(sp.grid, sp.conj, v);
}

double luxemburg_norm(const Grid& grid, const PhiFunction& phi,
                      const GridFunction& v) {
  require_match(grid, v, "luxemburg_norm");
  if (v.isZero(0.0)) return 0.0;
  const double rho = modular(grid, phi, v);
  double hi = rho + 1.0;  // ||v|| <= rho(v) + 1
  double lo = hi * std::pow(2.0, -60);
  auto at = [&](double lambda) { return modular(grid, phi, v / lambda); };
  // Guard: shrink lo until the modular exceeds 1 (tiny functions).
  int guard = 0;
  while (at(lo) <= 1.0) {
    hi = lo;
    lo *= std::pow(2.0, -60);
    if (++guard > 20) return hi;  // norm below representable interest
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double m = at(mid);
    if (std::abs(m - 1.0) <= 1e-12) return mid;
    if (m > 1.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-14 * hi) break;
  }
  return hi;
}

double luxemburg_norm(const ModularSpace& sp, const GridFunction& v) {
  return luxemburg_norm(sp.grid, sp.phi, v);
}

double dual_luxemburg_norm(const ModularSpace& sp, const GridFunction& v) {
  return luxemburg_norm(sp.grid, sp.conj, v);
}

GridFunction apply_A(const ModularSpace& sp, const GridFunction& v) {
  require_match(sp.grid, v, "apply_A");
  GridFunction out(sp.grid.n);
  for (int i = 0; i < sp.grid.n; ++i) out[i] = sp.phi.alpha(i, v[i]);
  return out;
}

std::pair<double, double> holder_check(const ModularSpace& sp,
                                       const GridFunction& u,
                                       const GridFunction& v) {
  require_match(sp.grid, u, "holder_check");
  require_match(sp.grid, v, "holder_check");
  const double lhs =
      (sp.grid.weights * u.array().abs() * v.array().abs()).sum();
  const double rhs =
      2.0 * luxemburg_norm(sp, u) * dual_luxemburg_norm(sp, v);
  return {lhs, rhs};
}

double spacetime_modular(const PhiFunction& phi, const Grid& grid,
                         const TimeGrid& tg,
                         const std::vector<GridFunction>& slices) {
  if (static_cast<int>(slices.size()) != tg.K)
    throw std::invalid_argument("spacetime_modular: expected K slices");
  double acc = 0.0;
  for (const auto& s : slices) acc += tg.tau() * modular(grid, phi, s);
  return acc;
}

}  // namespace orlicz
