#include "orlicz/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "orlicz/proximal.hpp"
#include "orlicz/stepper.hpp"

namespace orlicz {

namespace {

struct Family {
  std::string name;
  PhiFunction phi;
};

std::vector<Family> builtin_families(int n) {
  return {
      {"power(2)", PhiFunction::power(2.0, n)},
      {"power(3)", PhiFunction::power(3.0, n)},
      {"power(1.5)", PhiFunction::power(1.5, n)},
      {"power_log(2,1)", PhiFunction::power_log(2.0, 1.0, n)},
      {"two_power(1.8,2.5)", PhiFunction::two_power(1.8, 2.5, 1.0, 1.0, n)},
  };
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
  return std::exp(d(rng));
}

GridFunction random_function(std::mt19937_64& rng, int n, double scale) {
  std::uniform_real_distribution<double> d(-scale, scale);
  GridFunction v(n);
  for (int i = 0; i < n; ++i) v[i] = d(rng);
  return v;
}

void record(PropertySuite& suite, const std::string& name, bool pass,
            const std::string& detail = "") {
  suite.push_back({name, pass, detail});
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(6);
  ss << v;
  return ss.str();
}

}  // namespace

bool all_pass(const PropertySuite& suite) {
  for (const auto& r : suite)
    if (!r.pass) return false;
  return true;
}

PropertySuite verify_phi(unsigned seed) {
  PropertySuite out;
  std::mt19937_64 rng(seed);
  const int n = 8;

  for (const auto& fam : builtin_families(n)) {
    const PhiFunction conj = fam.phi.conjugate();
    const double tol =
        fam.phi.conjugate_mode() == ConjugateMode::ClosedForm ? 1e-10 : 1e-4;

    bool young = true, fenchel = true, mono = true;
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const int i = static_cast<int>(rng() % n);
      const double r = log_uniform(rng, 1e-4, 1e4);
      const double s = log_uniform(rng, 1e-4, 1e4);
      const double pv = fam.phi.phi(i, r);
      if (r * s > pv + conj.phi(i, s) + tol * (1.0 + r * s)) young = false;
      const double a = fam.phi.alpha(i, r);
      const double gap = std::abs(r * a - pv - conj.phi(i, a));
      worst = std::max(worst, gap / (1.0 + std::abs(r * a)));
      if (gap > tol * (1.0 + std::abs(r * a))) fenchel = false;
      const double lam1 = log_uniform(rng, 0.1, 1.0);
      const double lam2 = lam1 * log_uniform(rng, 1.01, 10.0);
      if (fam.phi.phi(i, lam1 * r) >= fam.phi.phi(i, lam2 * r)) mono = false;
    }
    record(out, "young-inequality/" + fam.name, young);
    record(out, "fenchel-identity/" + fam.name, fenchel,
           "worst rel gap " + fmt(worst));
    record(out, "monotone-in-lambda/" + fam.name, mono);

    // Doubling sandwich: lower bound from the conjugate's doubling
    // constant, upper bound from phi's own.
    const double K_phi = delta2_constant(fam.phi, 1e5, 96);
    const double K_conj = delta2_constant(conj, 1e5, 96);
    const double k0 = k0_lower_bound(K_conj);
    bool sandwich = true;
    for (int trial = 0; trial < 200; ++trial) {
      const int i = static_cast<int>(rng() % n);
      const double r = log_uniform(rng, 1e-4, 1e4);
      const double ratio = fam.phi.phi(i, 2.0 * r) / fam.phi.phi(i, r);
      if (ratio < k0 * (1.0 - 1e-6) || ratio > K_phi * (1.0 + 1e-6))
        sandwich = false;
    }
    record(out, "doubling-sandwich/" + fam.name, sandwich,
           "K=" + fmt(K_phi) + " K*=" + fmt(K_conj) + " K0=" + fmt(k0));

    // eps-Young: ab <= eps phi(a) + C_eps phi*(b), C_eps = eps K*^{n_eps}.
    bool eps_young = true;
    for (const double eps : {0.5, 0.1, 0.01}) {
      const int n_eps = static_cast<int>(std::ceil(std::log2(1.0 / eps)));
      const double c_eps = eps * std::pow(K_conj, n_eps);
      for (int trial = 0; trial < 300; ++trial) {
        const int i = static_cast<int>(rng() % n);
        const double a = log_uniform(rng, 1e-3, 1e3);
        const double b = log_uniform(rng, 1e-3, 1e3);
        const double rhs =
            eps * fam.phi.phi(i, a) + c_eps * conj.phi(i, b);
        if (a * b > rhs * (1.0 + 1e-6) + 1e-12) eps_young = false;
      }
    }
    record(out, "eps-young/" + fam.name, eps_young);
  }

  // Conjugate involution on closed-form families.
  for (const double p : {1.5, 2.0, 3.0}) {
    const PhiFunction phi = PhiFunction::power(p, n);
    const PhiFunction back = phi.conjugate().conjugate();
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
      const double r = log_uniform(rng, 1e-3, 1e3);
      const double v = phi.phi(0, r);
      if (std::abs(back.phi(0, r) - v) > 1e-9 * (1.0 + v)) ok = false;
    }
    record(out, "conjugate-involution/power(" + fmt(p) + ")", ok);
  }

  // Non-doubling conjugate detection for r log^2(1+r).
  {
    const PhiFunction phi = PhiFunction::custom(
        [](double r) { return r * std::pow(std::log1p(r), 2.0); },
        [](double r) {
          const double L = std::log1p(r);
          return L * L + 2.0 * r * L / (1.0 + r);
        },
        n, "rlog2");
    const double K = delta2_constant(phi, 1e6, 128);
    record(out, "delta2-of-rlog2", K >= 2.0 && K <= 8.0 + 1e-9,
           "K=" + fmt(K));
    record(out, "nabla2-divergence-of-rlog2",
           delta2_diverges(phi.conjugate()));
  }

  return out;
}

PropertySuite verify_modular(unsigned seed) {
  PropertySuite out;
  std::mt19937_64 rng(seed);
  const int n = 16;
  const Grid grid = Grid::make(0.0, 1.0, n);

  for (const auto& fam : builtin_families(n)) {
    const ModularSpace sp = ModularSpace::make(grid, fam.phi);

    bool unit_ball = true, norm_mod = true, fenchel = true, hoelder = true;
    for (int trial = 0; trial < 100; ++trial) {
      const GridFunction v =
          random_function(rng, n, log_uniform(rng, 1e-2, 1e2));
      if (v.isZero(0.0)) continue;
      const double nrm = luxemburg_norm(sp, v);
      if (std::abs(modular(sp, v / nrm) - 1.0) > 1e-8) unit_ball = false;
      if (nrm > modular(sp, v) + 1.0 + 1e-10) norm_mod = false;
      const GridFunction xi = apply_A(sp, v);
      const double lhs = pairing(grid, xi, v);
      const double rhs = modular(sp, v) + dual_modular(sp, xi);
      const double tol =
          sp.phi.conjugate_mode() == ConjugateMode::ClosedForm ? 1e-8 : 1e-4;
      if (std::abs(lhs - rhs) > tol * (1.0 + std::abs(lhs))) fenchel = false;
      const GridFunction w =
          random_function(rng, n, log_uniform(rng, 1e-2, 1e2));
      const auto [hl, hr] = holder_check(sp, v, w);
      if (hl > hr * (1.0 + 1e-8) + 1e-12) hoelder = false;
    }
    record(out, "unit-ball/" + fam.name, unit_ball);
    record(out, "norm-modular-bound/" + fam.name, norm_mod);
    record(out, "duality-map-fenchel/" + fam.name, fenchel);
    record(out, "hoelder/" + fam.name, hoelder);

    // Boundedness criterion via the super-doubling constant.
    const double K_conj = delta2_constant(fam.phi.conjugate(), 1e5, 96);
    const double k0 = k0_lower_bound(K_conj);
    bool bounded = true;
    for (int trial = 0; trial < 50; ++trial) {
      const GridFunction v =
          random_function(rng, n, log_uniform(rng, 1e-1, 1e3));
      const double nrm = luxemburg_norm(sp, v);
      if (nrm <= 0.0) continue;
      const double C = modular(sp, v) / (nrm + 1.0);
      const double bound =
          std::max(1.0, std::pow(2.0 * C * k0, 1.0 / std::log2(k0 / 2.0)));
      if (nrm > bound * (1.0 + 1e-8)) bounded = false;
    }
    record(out, "boundedness-criterion/" + fam.name, bounded);

    // Coercivity: modular/norm grows without bound along scaled sequences.
    {
      GridFunction v0 = random_function(rng, n, 1.0);
      if (v0.isZero(0.0)) v0.setConstant(1.0);
      double prev = 0.0;
      bool coercive = true;
      double first = 0.0, last = 0.0;
      for (int m = 1; m <= 12; ++m) {
        const GridFunction vm = std::pow(2.0, m) * v0;
        last = modular(sp, vm) / luxemburg_norm(sp, vm);
        if (m == 1) first = last;
        if (last < prev * (1.0 - 1e-9)) coercive = false;
        prev = last;
      }
      record(out, "coercivity/" + fam.name, coercive && last > 10.0 * first,
             "ratio growth " + fmt(last / first));
    }

    // Norm <-> modular convergence on geometric sequences.
    {
      GridFunction v0 = random_function(rng, n, 10.0);
      bool equiv = true;
      double nrm = luxemburg_norm(sp, v0), mod = modular(sp, v0);
      for (int m = 1; m <= 20; ++m) {
        const GridFunction vm = v0 * std::pow(2.0, -m);
        const double nn = luxemburg_norm(sp, vm);
        const double mm = modular(sp, vm);
        if (nn >= nrm * (1.0 + 1e-9) || mm >= mod * (1.0 + 1e-9))
          equiv = false;
        nrm = nn;
        mod = mm;
      }
      record(out, "norm-modular-convergence/" + fam.name,
             equiv && nrm < 1e-4 && mod < 1e-4);
    }
  }

  // Scaling bounds for lambda in {0.3, 2.7} on power(2).
  {
    const PhiFunction phi = PhiFunction::power(2.0, n);
    const double K = delta2_constant(phi, 1e5, 96);
    const double k0 = k0_lower_bound(delta2_constant(phi.conjugate(), 1e5, 96));
    bool ok = true;
    for (const double lambda : {0.3, 2.7}) {
      const int down = static_cast<int>(std::floor(std::log2(lambda)));
      const int up = static_cast<int>(std::ceil(std::log2(lambda)));
      auto lower = [&](int k) {
        return k >= 0 ? std::pow(k0, k) : std::pow(K, k);
      };
      auto upper = [&](int k) {
        return k >= 0 ? std::pow(K, k) : std::pow(k0, k);
      };
      for (int trial = 0; trial < 200; ++trial) {
        const double r = log_uniform(rng, 1e-3, 1e3);
        const double base = phi.phi(0, r);
        const double v = phi.phi(0, lambda * r);
        if (v < lower(down) * base * (1.0 - 1e-9) ||
            v > upper(up) * base * (1.0 + 1e-9))
          ok = false;
      }
    }
    record(out, "scaling-bounds/power(2)", ok);
  }

  // The two-cell counterexample configuration: ||k_n chi_E|| = log(1+n).
  {
    bool ok = true;
    std::string detail;
    for (const double dn : {10.0, 100.0, 1000.0}) {
      const double kn = dn * std::log1p(dn);
      const double En = 1.0 / (dn * std::pow(std::log1p(dn), 2.0));
      Eigen::ArrayXd nodes(2), weights(2);
      nodes << 0.25, 0.75;
      weights << En, 1.0 - En;
      const Grid two = Grid::with_weights(0.0, 1.0, nodes, weights);
      const PhiFunction phi = PhiFunction::custom(
          [](double r) { return r * std::pow(std::log1p(r), 2.0); },
          [](double r) {
            const double L = std::log1p(r);
            return L * L + 2.0 * r * L / (1.0 + r);
          },
          2, "rlog2");
      GridFunction u(2);
      u << kn, 0.0;
      const double nrm = luxemburg_norm(two, phi, u);
      const double expected = std::log1p(dn);
      if (std::abs(nrm - expected) > 1e-6) ok = false;
      detail += fmt(nrm) + " ";
    }
    record(out, "two-cell-norms", ok, detail);
  }

  // Space-time modular Fubini consistency.
  {
    const PhiFunction phi = PhiFunction::power_log(2.0, 1.0, n);
    const TimeGrid tg(2.0, 8);
    const GridFunction v = random_function(rng, n, 1.0);
    std::vector<GridFunction> slices(tg.K, v);
    const double st = spacetime_modular(phi, grid, tg, slices);
    const double direct = tg.T * modular(grid, phi, v);
    record(out, "spacetime-fubini", std::abs(st - direct) <= 1e-12 * (1.0 + direct));
  }

  return out;
}

PropertySuite verify_prox(unsigned seed) {
  PropertySuite out;
  std::mt19937_64 rng(seed);
  const int n = 16;
  const Grid grid = Grid::make(0.0, 1.0, n);
  SolverConfig scfg;
  scfg.grad_tol = 1e-8;

  for (const auto& fam : builtin_families(n)) {
    const ProximalOperator P{ModularSpace::make(grid, fam.phi),
                             Energy::mx_laplacian(grid, 2.0), scfg};
    bool order = true, unique = true, optimal = true, yosida_bdd = true;
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
      const GridFunction u = random_function(rng, n, 1.0);
      const double lambda = log_uniform(rng, 1e-3, 1.0);
      const GridFunction ul = resolvent(P, lambda, u);
      const double Eu = P.energy.value(u);
      const double El = P.energy.value(ul);
      const double MY = moreau_yosida_value(P, lambda, u);
      const double slack = 1e-8 * (1.0 + std::abs(Eu));
      if (!(El <= MY + slack && MY <= Eu + slack)) order = false;

      GridFunction guess = GridFunction::Zero(n);
      const GridFunction ul2 = resolvent(P, lambda, u, nullptr, &guess);
      if ((ul - ul2).cwiseAbs().maxCoeff() > 1e-6) unique = false;

      for (int pert = 0; pert < 20; ++pert) {
        const GridFunction d = random_function(rng, n, 1e-3);
        const double v = lambda * modular(P.space, (ul + d - u) / lambda) +
                         P.energy.value(ul + d);
        if (v < MY - slack) optimal = false;
      }

      // Uniform-in-lambda bound: the Yosida approximation never exceeds
      // the dual modular of the exact subgradient at u.
      const double rho_sub = dual_modular(P.space, P.energy.subgradient(u));
      for (const double lam : {1.0, 0.5, 0.25}) {
        const GridFunction bl = yosida(P, lam, u);
        const double rho = dual_modular(P.space, bl);
        if (rho > rho_sub * (1.0 + 1e-6) + 1e-6) yosida_bdd = false;
      }
    }
    record(out, "my-order/" + fam.name, order);
    record(out, "resolvent-unique/" + fam.name, unique);
    record(out, "minimizer-optimality/" + fam.name, optimal);
    record(out, "yosida-bounded/" + fam.name, yosida_bdd);
  }

  // Quadratic configuration: first-order rate and slicewise consistency.
  {
    const ProximalOperator P{
        ModularSpace::make(grid, PhiFunction::power(2.0, n)),
        Energy::mx_laplacian(grid, 2.0), scfg};
    GridFunction u(n);
    for (int i = 0; i < n; ++i)
      u[i] = 0.1 * std::sin(std::numbers::pi * grid.nodes[i]);
    std::vector<double> lambdas;
    for (int j = 0; j <= 10; ++j) lambdas.push_back(std::pow(2.0, -j));
    const auto rows = resolvent_convergence(P, u, lambdas);
    // Distances decrease for every lambda; once lambda * mu << 1 the
    // linear model J_lambda = (I + lambda L)^{-1} predicts exact halving.
    bool rate = true;
    for (size_t j = 1; j < rows.size(); ++j) {
      const double ratio = rows[j].distance / rows[j - 1].distance;
      if (ratio >= 1.0) rate = false;
      if (j >= 7 && (ratio < 0.45 || ratio > 0.55)) rate = false;
    }
    record(out, "resolvent-rate/quadratic", rate,
           "final distance " + fmt(rows.back().distance));

    std::vector<GridFunction> slices{u, 2.0 * u, GridFunction::Zero(n)};
    bool slicewise = true;
    for (const auto& s : slices) {
      const GridFunction a = resolvent(P, 0.25, s);
      const GridFunction b = resolvent(P, 0.25, s);  // same slice, same map
      if ((a - b).cwiseAbs().maxCoeff() > 1e-12) slicewise = false;
    }
    record(out, "slicewise-consistency", slicewise);
  }

  return out;
}

PropertySuite verify_stepper(unsigned seed) {
  PropertySuite out;
  std::mt19937_64 rng(seed);
  const int n = 32;
  const Grid grid = Grid::make(0.0, 1.0, n);
  const TimeGrid tg(1.0, 32);

  GridFunction u0(n);
  for (int i = 0; i < n; ++i)
    u0[i] = std::sin(std::numbers::pi * grid.nodes[i]);

  // Heat-equation cross-check against direct implicit-Euler solves.
  {
    Problem prob{ModularSpace::make(grid, PhiFunction::power(2.0, n)),
                 Energy::mx_laplacian(grid, 2.0),
                 tg,
                 u0,
                 SourceSpec::zero(),
                 SteppingMode::Subdifferential,
                 std::nullopt,
                 SolverConfig{}};
    const Trajectory traj = solve(prob);
    bool ok = traj.complete;
    const double tau = tg.tau();
    const double r = tau / (grid.h * grid.h);
    GridFunction v = u0;
    for (int k = 1; k <= tg.K && ok; ++k) {
      Eigen::VectorXd diag = Eigen::VectorXd::Constant(n, 1.0 + 2.0 * r);
      Eigen::VectorXd off = Eigen::VectorXd::Constant(n - 1, -r);
      Eigen::VectorXd rhs = v;
      for (int i = 1; i < n; ++i) {
        const double m = off[i - 1] / diag[i - 1];
        diag[i] -= m * off[i - 1];
        rhs[i] -= m * rhs[i - 1];
      }
      v[n - 1] = rhs[n - 1] / diag[n - 1];
      for (int i = n - 2; i >= 0; --i)
        v[i] = (rhs[i] - off[i] * v[i + 1]) / diag[i];
      if ((traj.u[k] - v).cwiseAbs().maxCoeff() > 1e-8) ok = false;
    }
    record(out, "heat-oracle", ok);

    bool slack_ok = true, el_ok = true, dissip = true;
    const double tol = 1e-8 * (1.0 + prob.energy.value(u0));
    for (int k = 0; k < traj.steps_done(); ++k) {
      if (traj.diag[k].energy_ineq_slack > tol) slack_ok = false;
      if (traj.diag[k].el_residual > 10.0 * prob.effective_grad_tol())
        el_ok = false;
      if (k > 0 && traj.diag[k].energy > traj.diag[k - 1].energy + 1e-12)
        dissip = false;
    }
    record(out, "discrete-energy-inequality", slack_ok);
    record(out, "euler-lagrange-residual", el_ok);
    record(out, "energy-dissipation", dissip);

    // Linear heat contraction: sup norm nonincreasing.
    bool contraction = true;
    for (int k = 1; k <= tg.K; ++k)
      if (traj.u[k].cwiseAbs().maxCoeff() >
          traj.u[k - 1].cwiseAbs().maxCoeff() + 1e-12)
        contraction = false;
    record(out, "sup-norm-contraction", contraction);

    // Summed a-priori estimate.
    double lhs = prob.energy.value(traj.u.back());
    std::vector<GridFunction> rates, fbars;
    for (int k = 1; k <= tg.K; ++k) {
      rates.push_back((traj.u[k] - traj.u[k - 1]) / tau);
      fbars.push_back(traj.f_k[k - 1]);
      lhs += tau * modular(prob.space, rates.back());
    }
    double dual_norm_f = 0.0;  // f == 0 here
    double rate_norm = 0.0;
    for (const auto& rr : rates)
      rate_norm += tau * modular(prob.space, rr);
    record(out, "summed-apriori",
           lhs <= prob.energy.value(u0) + dual_norm_f * rate_norm + 1e-8);
  }

  // Jensen: spacetime dual modular of step averages <= that of f.
  {
    const ModularSpace sp = ModularSpace::make(grid, PhiFunction::power(2.0, n));
    const int K = tg.K;
    std::vector<GridFunction> fine;  // "continuous" f: piecewise over 4K
    const TimeGrid tg_fine(tg.T, 4 * K);
    for (int k = 0; k < 4 * K; ++k)
      fine.push_back(random_function(rng, n, 1.0));
    std::vector<GridFunction> averages;
    for (int k = 1; k <= K; ++k) {
      GridFunction avg = GridFunction::Zero(n);
      for (int j = 0; j < 4; ++j) avg += fine[(k - 1) * 4 + j];
      averages.push_back(avg / 4.0);
    }
    const double lhs = spacetime_modular(sp.conj, grid, tg, averages);
    const double rhs = spacetime_modular(sp.conj, grid, tg_fine, fine);
    record(out, "source-average-jensen", lhs <= rhs * (1.0 + 1e-12));
  }

  // Generalized mode with beta = alpha reproduces the subdifferential run.
  {
    const PhiFunction phi = PhiFunction::two_power(1.8, 2.5, 1.0, 1.0, n);
    Problem direct{ModularSpace::make(grid, phi),
                   Energy::mx_laplacian(grid, 2.0),
                   TimeGrid(0.5, 8),
                   0.2 * u0,
                   SourceSpec::zero(),
                   SteppingMode::Subdifferential,
                   std::nullopt,
                   SolverConfig{}};
    Problem gen = direct;
    gen.mode = SteppingMode::Generalized;
    gen.beta = Beta::from_phi(phi);
    const Trajectory t1 = solve(direct);
    const Trajectory t2 = solve(gen);
    bool ok = t1.complete && t2.complete;
    for (int k = 0; ok && k <= 8; ++k)
      if ((t1.u[k] - t2.u[k]).cwiseAbs().maxCoeff() > 1e-8) ok = false;
    record(out, "generalized-consistency", ok);

    const HpMReport hp = verify_hp_M(direct.space, Beta::from_phi(phi), 128);
    record(out, "hp-M-accepts-alpha", hp.pass,
           "alpha0=" + fmt(hp.alpha0) + " C2=" + fmt(hp.C2));
    const HpMReport hp2 =
        verify_hp_M(direct.space, Beta::from_phi(phi, 2.0), 128);
    record(out, "hp-M-accepts-scaled-alpha", hp2.pass);
    const HpMReport bad = verify_hp_M(direct.space, Beta::arctan(), 128);
    record(out, "hp-M-rejects-arctan", !bad.pass);
  }

  // Interpolant consistency at knots and midpoints.
  {
    Problem prob{ModularSpace::make(grid, PhiFunction::power(2.0, n)),
                 Energy::mx_laplacian(grid, 2.0),
                 TimeGrid(1.0, 4),
                 u0,
                 SourceSpec::zero(),
                 SteppingMode::Subdifferential,
                 std::nullopt,
                 SolverConfig{}};
    const Trajectory traj = solve(prob);
    const double tau = prob.tg.tau();
    bool ok = traj.complete;
    for (int k = 1; k <= 4 && ok; ++k) {
      auto [lin, bar] = piecewise_interpolants(traj, k * tau);
      if ((lin - traj.u[k]).cwiseAbs().maxCoeff() > 1e-12) ok = false;
      if ((bar - traj.u[k]).cwiseAbs().maxCoeff() > 1e-12) ok = false;
      auto [mid, midbar] = piecewise_interpolants(traj, (k - 0.5) * tau);
      if ((mid - 0.5 * (traj.u[k] + traj.u[k - 1])).cwiseAbs().maxCoeff() >
          1e-12)
        ok = false;
      if ((midbar - traj.u[k]).cwiseAbs().maxCoeff() > 1e-12) ok = false;
    }
    auto [z0, z0b] = piecewise_interpolants(traj, 0.0);
    if ((z0 - u0).cwiseAbs().maxCoeff() > 0.0 ||
        (z0b - u0).cwiseAbs().maxCoeff() > 0.0)
      ok = false;
    record(out, "interpolants", ok);
  }

  return out;
}

PropertySuite verify_all(unsigned seed) {
  PropertySuite out;
  for (auto suite : {verify_phi(seed), verify_modular(seed), verify_prox(seed),
                     verify_stepper(seed)})
    out.insert(out.end(), suite.begin(), suite.end());
  return out;
}

}  // namespace orlicz
