#include <CLI11.hpp>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "orlicz/config.hpp"
#include "orlicz/proximal.hpp"
#include "orlicz/stepper.hpp"
#include "orlicz/verify.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace orlicz;

namespace {

std::string num(double v, int precision) {
  std::ostringstream ss;
  ss.precision(precision);
  ss << v;
  return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << text;
}

std::string trajectory_csv(const Problem& prob, const Trajectory& traj,
                           int precision) {
  std::ostringstream ss;
  ss << "k,t,E,rho_phi_rate,rho_conj_eta,EL_residual,energy_ineq_slack,"
        "inner_iters\r\n";
  ss << "0," << num(0.0, precision) << ","
     << num(prob.energy.value(traj.u[0]), precision) << ",,,,,\r\n";
  const double tau = traj.tg.tau();
  for (int k = 0; k < traj.steps_done(); ++k) {
    const auto& d = traj.diag[k];
    ss << (k + 1) << "," << num((k + 1) * tau, precision) << ","
       << num(d.energy, precision) << "," << num(d.rho_rate, precision) << ","
       << num(d.rho_conj_eta, precision) << ","
       << num(d.el_residual, precision) << ","
       << num(d.energy_ineq_slack, precision) << "," << d.inner_iters
       << "\r\n";
  }
  return ss.str();
}

std::string snapshot_csv(const Grid& grid, const GridFunction& u,
                         int precision) {
  std::ostringstream ss;
  ss << "x,u\r\n";
  for (int i = 0; i < grid.n; ++i)
    ss << num(grid.nodes[i], precision) << "," << num(u[i], precision)
       << "\r\n";
  return ss.str();
}

json run_summary(const RunConfig& cfg, const Problem& prob,
                 const Trajectory& traj) {
  json s;
  s["config"] = *cfg.raw;
  s["partial"] = !traj.complete;
  s["steps_done"] = traj.steps_done();
  s["final_energy"] =
      prob.energy.value(traj.u[traj.steps_done()]);
  const MaxRegularityReport mr = max_regularity_report(prob, traj);
  s["rho_ut"] = mr.rho_ut;
  s["rho_Aut"] = mr.rho_Aut;
  s["rho_eta"] = mr.rho_eta;
  const EnergyIdentityReport ei = energy_identity_report(prob, traj);
  s["energy_identity_total"] = ei.total;
  return s;
}

int run_solve(const std::string& config_path, const std::string& out_override) {
  const RunConfig cfg = parse_config(config_path);
  const Problem prob = cfg.make_problem();
  const Trajectory traj = solve(prob);

  const fs::path out_dir = out_override.empty() ? cfg.out_dir : out_override;
  fs::create_directories(out_dir);
  write_text(out_dir / "trajectory.csv",
             trajectory_csv(prob, traj, cfg.csv_precision));
  for (int k : cfg.snapshots) {
    if (k < 0 || k > traj.steps_done()) continue;
    write_text(out_dir / ("u_" + std::to_string(k) + ".csv"),
               snapshot_csv(prob.space.grid, traj.u[k], cfg.csv_precision));
  }
  write_text(out_dir / "summary.json",
             run_summary(cfg, prob, traj).dump(2) + "\n");
  std::cout << (traj.complete ? "complete" : "partial") << ": "
            << traj.steps_done() << "/" << prob.tg.K << " steps, results in "
            << out_dir.string() << "\n";
  return traj.complete ? 0 : 1;
}

int run_prox(const std::string& config_path, const std::string& out_override,
             std::vector<double> lambdas) {
  const RunConfig cfg = parse_config(config_path);
  const Grid grid = cfg.make_grid();
  const ProximalOperator P{ModularSpace::make(grid, cfg.make_phi()),
                           cfg.make_energy(grid), cfg.make_solver()};
  const GridFunction u = cfg.make_u0(grid);
  if (lambdas.empty())
    for (int j = 0; j <= 10; ++j) lambdas.push_back(std::pow(2.0, -j));

  const auto rows = resolvent_convergence(P, u, lambdas);
  std::ostringstream ss;
  ss << "lambda,distance,energy\r\n";
  for (const auto& r : rows)
    ss << num(r.lambda, cfg.csv_precision) << ","
       << num(r.distance, cfg.csv_precision) << ","
       << num(r.energy, cfg.csv_precision) << "\r\n";

  const fs::path out_dir = out_override.empty() ? cfg.out_dir : out_override;
  fs::create_directories(out_dir);
  write_text(out_dir / "resolvent.csv", ss.str());
  std::cout << rows.size() << " resolvent rows written to "
            << (out_dir / "resolvent.csv").string() << "\n";
  return 0;
}

int run_verify(const std::string& suite, unsigned seed) {
  PropertySuite results;
  if (suite == "phi")
    results = verify_phi(seed);
  else if (suite == "modular")
    results = verify_modular(seed);
  else if (suite == "prox")
    results = verify_prox(seed);
  else if (suite == "stepper")
    results = verify_stepper(seed);
  else
    results = verify_all(seed);

  int failures = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
    std::cout << "\n";
    if (!r.pass) ++failures;
  }
  std::cout << (results.size() - failures) << "/" << results.size()
            << " properties passed\n";
  return failures == 0 ? 0 : 1;
}

int run_sweep(const std::string& config_path, const std::string& out_override,
              std::vector<int> k_list) {
  const RunConfig base = parse_config(config_path);
  if (k_list.empty()) k_list = {32, 64, 128};

  unsigned workers = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("ORLICZFLOW_THREADS")) {
    const int vv = std::atoi(env);
    if (vv >= 1) workers = static_cast<unsigned>(vv);
  }
  workers = std::min<unsigned>(std::max(1u, workers),
                               static_cast<unsigned>(k_list.size()));

  const fs::path out_dir = out_override.empty() ? base.out_dir : out_override;
  fs::create_directories(out_dir);

  struct Row {
    int K = 0;
    bool complete = false;
    double final_energy = 0.0;
    double rho_ut = 0.0;
    double rho_eta = 0.0;
    double energy_identity_total = 0.0;
  };
  std::vector<Row> rows(k_list.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};

  auto worker = [&]() {
    for (size_t j = next++; j < k_list.size(); j = next++) {
      try {
        json patched = *base.raw;
        patched["time"]["K"] = k_list[j];
        const RunConfig cfg = parse_config_text(patched.dump());
        const Problem prob = cfg.make_problem();
        const Trajectory traj = solve(prob);
        const fs::path sub = out_dir / ("K" + std::to_string(k_list[j]));
        fs::create_directories(sub);
        write_text(sub / "trajectory.csv",
                   trajectory_csv(prob, traj, cfg.csv_precision));
        write_text(sub / "summary.json",
                   run_summary(cfg, prob, traj).dump(2) + "\n");
        const MaxRegularityReport mr = max_regularity_report(prob, traj);
        const EnergyIdentityReport ei = energy_identity_report(prob, traj);
        rows[j] = {k_list[j], traj.complete,
                   prob.energy.value(traj.u[traj.steps_done()]), mr.rho_ut,
                   mr.rho_eta, ei.total};
        if (!traj.complete) failed = true;
      } catch (const std::exception& e) {
        std::cerr << "K=" << k_list[j] << " failed: " << e.what() << "\n";
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::ostringstream ss;
  ss << "K,complete,final_energy,rho_ut,rho_eta,energy_identity_total\r\n";
  for (const auto& r : rows)
    ss << r.K << "," << (r.complete ? 1 : 0) << ","
       << num(r.final_energy, base.csv_precision) << ","
       << num(r.rho_ut, base.csv_precision) << ","
       << num(r.rho_eta, base.csv_precision) << ","
       << num(r.energy_identity_total, base.csv_precision) << "\r\n";
  write_text(out_dir / "sweep.csv", ss.str());
  std::cout << "sweep over " << k_list.size() << " refinements written to "
            << (out_dir / "sweep.csv").string() << "\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimizing-movement solver for doubly nonlinear flows in "
               "Musielak-Orlicz discretizations"};
  app.require_subcommand(1);

  std::string config_path, out_dir, suite = "all";
  unsigned seed = 0;
  std::vector<double> lambdas;
  std::vector<int> k_list;

  auto* solve_cmd = app.add_subcommand("solve", "Run a time-stepping problem");
  solve_cmd->add_option("--config", config_path, "JSON configuration file")
      ->required();
  solve_cmd->add_option("--out", out_dir, "Output directory override");

  auto* prox_cmd =
      app.add_subcommand("prox", "Resolvent sweep from the initial datum");
  prox_cmd->add_option("--config", config_path, "JSON configuration file")
      ->required();
  prox_cmd->add_option("--out", out_dir, "Output directory override");
  prox_cmd->add_option("--lambdas", lambdas,
                       "Resolvent parameters (default 2^0..2^-10)");

  auto* verify_cmd =
      app.add_subcommand("verify", "Run the randomized property suites");
  verify_cmd->add_option("--suite", suite,
                         "phi | modular | prox | stepper | all");
  verify_cmd->add_option("--seed", seed, "RNG seed");

  auto* sweep_cmd =
      app.add_subcommand("sweep", "Solve across a list of step counts");
  sweep_cmd->add_option("--config", config_path, "JSON configuration file")
      ->required();
  sweep_cmd->add_option("--out", out_dir, "Output directory override");
  sweep_cmd->add_option("--k-list", k_list, "Step counts (default 32 64 128)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return run_solve(config_path, out_dir);
    if (prox_cmd->parsed()) return run_prox(config_path, out_dir, lambdas);
    if (verify_cmd->parsed()) return run_verify(suite, seed);
    if (sweep_cmd->parsed()) return run_sweep(config_path, out_dir, k_list);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
