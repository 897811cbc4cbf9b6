#pragma once

#include <vector>

#include "orlicz/energy.hpp"
#include "orlicz/modular.hpp"
#include "orlicz/solver.hpp"

namespace orlicz {

/// Modular-based resolvent J_lambda, Yosida approximation B_lambda and
/// Moreau-Yosida value E_lambda of a convex energy, all realized through
/// the inner minimization
///   v  |->  lambda * rho_phi((v - u)/lambda) + E(v).
struct ProximalOperator {
  ModularSpace space;
  Energy energy;
  SolverConfig solver;
};

GridFunction resolvent(const ProximalOperator& P, double lambda,
                       const GridFunction& u, SolverReport* report = nullptr,
                       const GridFunction* initial_guess = nullptr);

/// B_lambda(u) = A((u - J_lambda(u)) / lambda)
GridFunction yosida(const ProximalOperator& P, double lambda,
                    const GridFunction& u);

double moreau_yosida_value(const ProximalOperator& P, double lambda,
                           const GridFunction& u);

struct ResolventRow {
  double lambda;
  double distance;  // ||J_lambda u - u|| in the Luxemburg norm
  double energy;    // E(J_lambda u)
};

std::vector<ResolventRow> resolvent_convergence(const ProximalOperator& P,
                                                const GridFunction& u,
                                                const std::vector<double>& lambdas);

}  // namespace orlicz
