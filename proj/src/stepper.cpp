#include "orlicz/stepper.hpp"

#include <cmath>
#include <stdexcept>

namespace orlicz {

namespace {

// 5-point Gauss-Legendre nodes/weights on [-1,1].
constexpr double kGx[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                           0.5384693101056831, 0.9061798459386640};
constexpr double kGw[5] = {0.2369268850561891, 0.4786286704993665,
                           0.5688888888888889, 0.4786286704993665,
                           0.2369268850561891};

double gauss_average(const std::function<double(double)>& h, double t0,
                     double t1) {
  const double mid = 0.5 * (t0 + t1);
  const double half = 0.5 * (t1 - t0);
  double acc = 0.0;
  for (int j = 0; j < 5; ++j) acc += kGw[j] * h(mid + half * kGx[j]);
  return 0.5 * acc;  // Gauss weights sum to 2
}

}  // namespace

Beta Beta::from_phi(PhiFunction phi, double scale) {
  Beta b;
  b.beta = [phi, scale](int i, double r) { return scale * phi.alpha(i, r); };
  b.psi = [phi, scale](int i, double r) { return scale * phi.phi(i, r); };
  b.dbeta = [phi, scale](int i, double r) {
    return scale * phi.curvature(i, r);
  };
  return b;
}

Beta Beta::arctan() {
  Beta b;
  b.beta = [](int, double r) { return std::atan(r); };
  b.psi = [](int, double r) {
    return r * std::atan(r) - 0.5 * std::log1p(r * r);
  };
  b.dbeta = [](int, double r) { return 1.0 / (1.0 + r * r); };
  return b;
}

SourceSpec SourceSpec::zero() { return SourceSpec{}; }

SourceSpec SourceSpec::constant(GridFunction f) {
  SourceSpec s;
  s.kind = Kind::Constant;
  s.profile = std::move(f);
  return s;
}

SourceSpec SourceSpec::tabulated(std::vector<GridFunction> slices) {
  SourceSpec s;
  s.kind = Kind::Tabulated;
  s.slices = std::move(slices);
  return s;
}

SourceSpec SourceSpec::separable(GridFunction g,
                                 std::function<double(double)> h) {
  SourceSpec s;
  s.kind = Kind::Separable;
  s.profile = std::move(g);
  s.time_part = std::move(h);
  return s;
}

GridFunction average_source(const SourceSpec& f, const Grid& grid, int k,
                            const TimeGrid& tg) {
  if (k < 1 || k > tg.K)
    throw std::out_of_range("average_source: step index out of range");
  switch (f.kind) {
    case SourceSpec::Kind::Zero:
      return GridFunction::Zero(grid.n);
    case SourceSpec::Kind::Constant:
      return f.profile;
    case SourceSpec::Kind::Tabulated:
      if (static_cast<int>(f.slices.size()) != tg.K)
        throw std::invalid_argument("average_source: expected K slices");
      return f.slices[k - 1];
    case SourceSpec::Kind::Separable: {
      const double tau = tg.tau();
      const double avg = gauss_average(f.time_part, (k - 1) * tau, k * tau);
      return f.profile * avg;
    }
  }
  return GridFunction::Zero(grid.n);
}

double Problem::effective_grad_tol() const {
  return 1e-10 * (1.0 + energy.value(u0)) * std::min(1.0, tg.tau());
}

std::pair<GridFunction, StepDiagnostics> step(const Problem& prob,
                                              const GridFunction& u_prev,
                                              const GridFunction& f_k) {
  const Grid& grid = prob.space.grid;
  const PhiFunction& phi = prob.space.phi;
  const double tau = prob.tg.tau();
  const bool generalized = prob.mode == SteppingMode::Generalized;
  if (generalized && !prob.beta)
    throw std::invalid_argument("step: generalized mode requires beta");

  auto rate_value = [&](int i, double r) {
    return generalized ? prob.beta->psi(i, r) : phi.phi(i, r);
  };
  auto rate_slope = [&](int i, double r) {
    return generalized ? prob.beta->beta(i, r) : phi.alpha(i, r);
  };
  auto rate_curv = [&](int i, double r) {
    return generalized ? prob.beta->dbeta(i, r) : phi.curvature(i, r);
  };

  Objective obj;
  obj.value = [&](const GridFunction& w) {
    double acc = prob.energy.value(w) - pairing(grid, f_k, w);
    for (int i = 0; i < grid.n; ++i)
      acc += tau * grid.weights[i] * rate_value(i, (w[i] - u_prev[i]) / tau);
    return acc;
  };
  obj.grad = [&](const GridFunction& w) {
    GridFunction g = prob.energy.grad(w);
    for (int i = 0; i < grid.n; ++i)
      g[i] += grid.weights[i] *
              (rate_slope(i, (w[i] - u_prev[i]) / tau) - f_k[i]);
    return g;
  };
  obj.hess = [&](const GridFunction& w, Eigen::VectorXd& diag,
                 Eigen::VectorXd& off) {
    prob.energy.add_hessian(w, diag, off);
    for (int i = 0; i < grid.n; ++i)
      diag[i] += grid.weights[i] * rate_curv(i, (w[i] - u_prev[i]) / tau) / tau;
  };

  SolverConfig cfg = prob.solver;
  cfg.grad_tol = std::min(cfg.grad_tol, prob.effective_grad_tol());
  auto [u_k, rep] = minimize(obj, u_prev, grid, cfg);

  StepDiagnostics d;
  d.inner_iters = rep.iterations;
  d.converged = rep.converged;
  d.energy = prob.energy.value(u_k);

  const GridFunction rate = (u_k - u_prev) / tau;
  GridFunction m_rate(grid.n);
  for (int i = 0; i < grid.n; ++i) m_rate[i] = rate_slope(i, rate[i]);
  const GridFunction eta = f_k - m_rate;
  const GridFunction el = m_rate + prob.energy.subgradient(u_k) - f_k;

  d.rho_rate = modular(prob.space, rate);
  d.rho_conj_eta = dual_modular(prob.space, eta);
  d.el_residual = dual_modular(prob.space, el);
  d.energy_ineq_slack = d.rho_rate +
                        (d.energy - prob.energy.value(u_prev)) / tau -
                        pairing(grid, f_k, rate);
  return {u_k, d};
}

Trajectory solve(const Problem& prob) {
  if (!prob.space.grid.matches(prob.u0))
    throw std::invalid_argument("solve: u0 grid mismatch");
  Trajectory traj;
  traj.tg = prob.tg;
  traj.u.push_back(prob.u0);
  for (int k = 1; k <= prob.tg.K; ++k) {
    const GridFunction f_k =
        average_source(prob.f, prob.space.grid, k, prob.tg);
    auto [u_k, d] = step(prob, traj.u.back(), f_k);
    if (!d.converged) {
      traj.complete = false;
      return traj;
    }
    const double tau = prob.tg.tau();
    const GridFunction rate = (u_k - traj.u.back()) / tau;
    GridFunction m_rate(prob.space.grid.n);
    for (int i = 0; i < prob.space.grid.n; ++i)
      m_rate[i] = prob.mode == SteppingMode::Generalized
                      ? prob.beta->beta(i, rate[i])
                      : prob.space.phi.alpha(i, rate[i]);
    traj.eta.push_back(f_k - m_rate);
    traj.f_k.push_back(f_k);
    traj.diag.push_back(d);
    traj.u.push_back(std::move(u_k));
  }
  traj.complete = true;
  return traj;
}

std::pair<GridFunction, GridFunction> piecewise_interpolants(
    const Trajectory& traj, double t) {
  const double T = traj.tg.T;
  const double tau = traj.tg.tau();
  if (t < 0.0 || t > T * (1.0 + 1e-12))
    throw std::out_of_range("piecewise_interpolants: t outside [0,T]");
  if (t == 0.0) return {traj.u[0], traj.u[0]};
  int k = static_cast<int>(std::ceil(t / tau - 1e-12));
  k = std::min(std::max(k, 1), traj.tg.K);
  const double theta = (t - (k - 1) * tau) / tau;
  GridFunction lin = theta * traj.u[k] + (1.0 - theta) * traj.u[k - 1];
  return {std::move(lin), traj.u[k]};
}

double chain_rule_residual(const Energy& energy, const Grid& grid,
                           const Trajectory& traj,
                           const std::vector<GridFunction>& eta, int s_index,
                           int t_index) {
  if (s_index < 0 || t_index > traj.steps_done() || s_index > t_index)
    throw std::out_of_range("chain_rule_residual: bad index range");
  const double tau = traj.tg.tau();
  double acc = 0.0;
  for (int k = s_index + 1; k <= t_index; ++k) {
    const GridFunction rate = (traj.u[k] - traj.u[k - 1]) / tau;
    acc += tau * pairing(grid, eta[k - 1], rate);
  }
  return std::abs(energy.value(traj.u[t_index]) -
                  energy.value(traj.u[s_index]) - acc);
}

EnergyIdentityReport energy_identity_report(const Problem& prob,
                                            const Trajectory& traj) {
  EnergyIdentityReport rep;
  const double tau = prob.tg.tau();
  const Grid& grid = prob.space.grid;
  for (int k = 1; k <= traj.steps_done(); ++k) {
    const GridFunction rate = (traj.u[k] - traj.u[k - 1]) / tau;
    GridFunction m_rate(grid.n);
    for (int i = 0; i < grid.n; ++i)
      m_rate[i] = prob.mode == SteppingMode::Generalized
                      ? prob.beta->beta(i, rate[i])
                      : prob.space.phi.alpha(i, rate[i]);
    const double r = std::abs(prob.energy.value(traj.u[k]) -
                              prob.energy.value(traj.u[k - 1]) +
                              tau * pairing(grid, m_rate, rate) -
                              tau * pairing(grid, traj.f_k[k - 1], rate));
    rep.residuals.push_back(r);
    rep.total += r;
  }
  return rep;
}

MaxRegularityReport max_regularity_report(const Problem& prob,
                                          const Trajectory& traj) {
  MaxRegularityReport rep;
  const double tau = prob.tg.tau();
  const Grid& grid = prob.space.grid;
  for (int k = 1; k <= traj.steps_done(); ++k) {
    const GridFunction rate = (traj.u[k] - traj.u[k - 1]) / tau;
    GridFunction m_rate(grid.n);
    for (int i = 0; i < grid.n; ++i)
      m_rate[i] = prob.mode == SteppingMode::Generalized
                      ? prob.beta->beta(i, rate[i])
                      : prob.space.phi.alpha(i, rate[i]);
    rep.rho_ut += tau * modular(prob.space, rate);
    rep.rho_Aut += tau * dual_modular(prob.space, m_rate);
    rep.rho_eta += tau * dual_modular(prob.space, traj.eta[k - 1]);
  }
  return rep;
}

HpMReport verify_hp_M(const ModularSpace& space, const Beta& beta,
                      int samples) {
  HpMReport rep;
  const Eigen::ArrayXd rs = log_space(1e-6, 1e6, std::max(samples, 16));
  const int n = space.grid.n;
  const int probe = std::min(n, 8);
  const double omega = space.grid.measure();

  // Coercivity side: alpha0 <= beta(x,r) r / phi(x,r) on the superlinear
  // range; a bounded beta drives the fitted alpha0 to zero.
  double alpha0 = 1.0;
  double c1_need = 0.0;
  double C2 = 0.0;
  for (int ip = 0; ip < probe; ++ip) {
    const int i = ip * std::max(1, n / probe);
    for (int j = 0; j < rs.size(); ++j) {
      const double r = rs[j];
      const double pv = space.phi.phi(i, r);
      const double bv = beta.beta(i, r);
      if (pv > 0.0 && r >= 1.0) alpha0 = std::min(alpha0, bv * r / pv);
      const double conj = space.conj.phi(i, bv);
      if (!std::isfinite(conj)) {
        rep.pass = false;
        rep.C2 = std::numeric_limits<double>::infinity();
        return rep;
      }
      C2 = std::max(C2, conj / (pv + 1.0));
    }
  }
  // Fold the integrable offset c1 into a constant over the sub-unit range.
  for (int ip = 0; ip < probe; ++ip) {
    const int i = ip * std::max(1, n / probe);
    for (int j = 0; j < rs.size(); ++j) {
      const double r = rs[j];
      if (r >= 1.0) continue;
      c1_need = std::max(c1_need, alpha0 * space.phi.phi(i, r) -
                                      beta.beta(i, r) * r);
    }
  }
  rep.alpha0 = alpha0;
  rep.C1 = omega * std::max(0.0, c1_need);
  rep.C2 = C2;
  rep.pass = alpha0 >= 1e-3;
  return rep;
}

}  // namespace orlicz
