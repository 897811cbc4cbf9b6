#include "orlicz/proximal.hpp"

#include <cmath>
#include <stdexcept>

namespace orlicz {

namespace {

Objective resolvent_objective(const ProximalOperator& P, double lambda,
                              const GridFunction& u) {
  const Grid& grid = P.space.grid;
  const PhiFunction& phi = P.space.phi;
  const Energy* energy = &P.energy;
  Objective obj;
  obj.value = [&grid, &phi, energy, lambda, &u](const GridFunction& v) {
    return lambda * modular(grid, phi, (v - u) / lambda) + energy->value(v);
  };
  obj.grad = [&grid, &phi, energy, lambda, &u](const GridFunction& v) {
    GridFunction g = energy->grad(v);
    for (int i = 0; i < grid.n; ++i)
      g[i] += grid.weights[i] * phi.alpha(i, (v[i] - u[i]) / lambda);
    return g;
  };
  obj.hess = [&grid, &phi, energy, lambda, &u](const GridFunction& v,
                                               Eigen::VectorXd& diag,
                                               Eigen::VectorXd& off) {
    energy->add_hessian(v, diag, off);
    for (int i = 0; i < grid.n; ++i)
      diag[i] += grid.weights[i] *
                 phi.curvature(i, (v[i] - u[i]) / lambda) / lambda;
  };
  return obj;
}

}  // namespace

GridFunction resolvent(const ProximalOperator& P, double lambda,
                       const GridFunction& u, SolverReport* report,
                       const GridFunction* initial_guess) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("resolvent: lambda must be positive");
  const Objective obj = resolvent_objective(P, lambda, u);
  auto [x, rep] = minimize(obj, initial_guess ? *initial_guess : u,
                           P.space.grid, P.solver);
  if (report) *report = rep;
  if (!rep.converged)
    throw std::runtime_error("resolvent: inner minimization did not converge");
  return x;
}

GridFunction yosida(const ProximalOperator& P, double lambda,
                    const GridFunction& u) {
  const GridFunction ul = resolvent(P, lambda, u);
  return apply_A(P.space, (u - ul) / lambda);
}

double moreau_yosida_value(const ProximalOperator& P, double lambda,
                           const GridFunction& u) {
  const GridFunction ul = resolvent(P, lambda, u);
  return lambda * modular(P.space, (ul - u) / lambda) + P.energy.value(ul);
}

std::vector<ResolventRow> resolvent_convergence(
    const ProximalOperator& P, const GridFunction& u,
    const std::vector<double>& lambdas) {
  std::vector<ResolventRow> rows;
  rows.reserve(lambdas.size());
  const GridFunction* warm = nullptr;
  GridFunction prev;
  for (const double lambda : lambdas) {
    const GridFunction ul = resolvent(P, lambda, u, nullptr, warm);
    rows.push_back({lambda, luxemburg_norm(P.space, ul - u),
                    P.energy.value(ul)});
    prev = ul;
    warm = &prev;
  }
  return rows;
}

}  // namespace orlicz
