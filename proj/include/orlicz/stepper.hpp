#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "orlicz/energy.hpp"
#include "orlicz/modular.hpp"
#include "orlicz/solver.hpp"

namespace orlicz {

enum class SteppingMode { Subdifferential, Generalized };

/// Rate nonlinearity for the generalized scheme: a continuous
/// nondecreasing beta(x,r) with beta(x,0) = 0, its primitive
/// Psi(x,r) = int_0^r beta(x,rho) drho and its derivative for the Newton
/// curvature model.
struct Beta {
  std::function<double(int, double)> beta;
  std::function<double(int, double)> psi;
  std::function<double(int, double)> dbeta;

  /// beta = scale * alpha_phi, Psi = scale * phi.
  static Beta from_phi(PhiFunction phi, double scale = 1.0);

  /// Bounded monotone nonlinearity; fails the coercivity side of the
  /// admissibility check against any superlinear phi.
  static Beta arctan();
};

/// Time-dependent source f(x,t). Exact step averages for the constant and
/// tabulated forms, 5-point Gauss-Legendre averages for closed forms.
struct SourceSpec {
  enum class Kind { Zero, Constant, Tabulated, Separable };
  Kind kind = Kind::Zero;
  GridFunction profile;                     // Constant / Separable spatial part
  std::vector<GridFunction> slices;         // Tabulated: f_k per step, size K
  std::function<double(double)> time_part;  // Separable h(t)

  static SourceSpec zero();
  static SourceSpec constant(GridFunction f);
  static SourceSpec tabulated(std::vector<GridFunction> slices);
  static SourceSpec separable(GridFunction g, std::function<double(double)> h);
};

GridFunction average_source(const SourceSpec& f, const Grid& grid, int k,
                            const TimeGrid& tg);

struct Problem {
  ModularSpace space;
  Energy energy;
  TimeGrid tg;
  GridFunction u0;
  SourceSpec f;
  SteppingMode mode = SteppingMode::Subdifferential;
  std::optional<Beta> beta;  // Generalized mode only
  SolverConfig solver;

  /// Inner tolerance tied to the data scale and the time step.
  double effective_grad_tol() const;
};

struct StepDiagnostics {
  double energy = 0.0;
  double rho_rate = 0.0;            // rho_phi((u_k - u_{k-1}) / tau)
  double rho_conj_eta = 0.0;        // rho_phi*(eta_k)
  double el_residual = 0.0;         // dual modular of the Euler-Lagrange defect
  double energy_ineq_slack = 0.0;   // signed slack of the discrete inequality
  int inner_iters = 0;
  bool converged = false;
};

struct Trajectory {
  TimeGrid tg;
  std::vector<GridFunction> u;     // u_0 .. u_K
  std::vector<GridFunction> eta;   // eta_1 .. eta_K (eta_k = f_k - M(rate_k))
  std::vector<GridFunction> f_k;   // step averages of the source
  std::vector<StepDiagnostics> diag;  // per step, size K
  bool complete = false;

  int steps_done() const { return static_cast<int>(eta.size()); }
};

std::pair<GridFunction, StepDiagnostics> step(const Problem& prob,
                                              const GridFunction& u_prev,
                                              const GridFunction& f_k);

/// K sequential minimizing-movement steps. A solver failure aborts and
/// returns the partial trajectory with complete = false.
Trajectory solve(const Problem& prob);

/// (piecewise linear u_tau(t), piecewise constant ubar_tau(t))
std::pair<GridFunction, GridFunction> piecewise_interpolants(
    const Trajectory& traj, double t);

/// |E(u_t) - E(u_s) - sum_{k=s+1}^{t} tau <eta_k, rate_k>| over the index
/// range [s_index, t_index].
double chain_rule_residual(const Energy& energy, const Grid& grid,
                           const Trajectory& traj,
                           const std::vector<GridFunction>& eta, int s_index,
                           int t_index);

struct EnergyIdentityReport {
  std::vector<double> residuals;
  double total = 0.0;
};

EnergyIdentityReport energy_identity_report(const Problem& prob,
                                            const Trajectory& traj);

struct MaxRegularityReport {
  double rho_ut = 0.0;    // rho_{phi,Q}(du/dt)
  double rho_Aut = 0.0;   // rho_{phi*,Q}(A(du/dt))   (M(du/dt) in generalized mode)
  double rho_eta = 0.0;   // rho_{phi*,Q}(eta)
};

MaxRegularityReport max_regularity_report(const Problem& prob,
                                          const Trajectory& traj);

struct HpMReport {
  double alpha0 = 0.0;
  double C1 = 0.0;
  double C2 = 0.0;
  bool pass = false;
};

/// Sampling check of the pointwise sufficient conditions
///   alpha0 phi(x,r) <= beta(x,r) r + c1   and
///   phi*(x,beta(x,r)) <= C2 phi(x,r) + c3
/// with the integrable offsets folded into the constants.
HpMReport verify_hp_M(const ModularSpace& space, const Beta& beta,
                      int samples);

}  // namespace orlicz
