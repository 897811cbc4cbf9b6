#include "orlicz/config.hpp"

#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace orlicz {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::invalid_argument("config error at \"" + path + "\": " + what);
}

void check_keys(const json& j, const std::string& path,
                const std::set<std::string>& allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key)) fail(path + "." + key, "unknown key");
}

double num(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

// Per-node parameter spec: number | {"ramp":[v0,v1]} | {"sin":[mean,amp,
// periods]} | {"table":[...]} of length n.
Eigen::ArrayXd node_table(const json& j, const std::string& path,
                          const Grid& grid) {
  const int n = grid.n;
  if (j.is_number()) return Eigen::ArrayXd::Constant(n, j.get<double>());
  if (!j.is_object()) fail(path, "expected a number or a spec object");
  check_keys(j, path, {"ramp", "sin", "table"});
  if (j.size() != 1) fail(path, "exactly one of ramp/sin/table");
  if (j.contains("ramp")) {
    const auto& r = j["ramp"];
    if (!r.is_array() || r.size() != 2) fail(path + ".ramp", "expected [v0,v1]");
    const double v0 = num(r[0], path + ".ramp"), v1 = num(r[1], path + ".ramp");
    Eigen::ArrayXd out(n);
    for (int i = 0; i < n; ++i) {
      const double s = (grid.nodes[i] - grid.a) / (grid.b - grid.a);
      out[i] = v0 + (v1 - v0) * s;
    }
    return out;
  }
  if (j.contains("sin")) {
    const auto& r = j["sin"];
    if (!r.is_array() || r.size() != 3)
      fail(path + ".sin", "expected [mean,amp,periods]");
    const double mean = num(r[0], path), amp = num(r[1], path),
                 periods = num(r[2], path);
    Eigen::ArrayXd out(n);
    for (int i = 0; i < n; ++i) {
      const double s = (grid.nodes[i] - grid.a) / (grid.b - grid.a);
      out[i] = mean + amp * std::sin(2.0 * std::numbers::pi * periods * s);
    }
    return out;
  }
  const auto& t = j["table"];
  if (!t.is_array() || static_cast<int>(t.size()) != n)
    fail(path + ".table", "expected an array of length n = " +
                              std::to_string(n));
  Eigen::ArrayXd out(n);
  for (int i = 0; i < n; ++i) out[i] = num(t[i], path + ".table");
  return out;
}

GridFunction node_values(const json& j, const std::string& path,
                         const Grid& grid) {
  return node_table(j, path, grid).matrix();
}

}  // namespace

Grid RunConfig::make_grid() const { return Grid::make(a, b, n); }

PhiFunction RunConfig::make_phi() const {
  const json& j = (*raw)["phi"];
  const Grid grid = make_grid();
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "power") return PhiFunction::power(node_table(j["p"], "phi.p", grid));
  if (kind == "power_log")
    return PhiFunction::power_log(node_table(j["p"], "phi.p", grid),
                                  node_table(j["q"], "phi.q", grid));
  if (kind == "two_power")
    return PhiFunction::two_power(node_table(j["p"], "phi.p", grid),
                                  node_table(j["q"], "phi.q", grid),
                                  node_table(j["a"], "phi.a", grid),
                                  node_table(j["b"], "phi.b", grid));
  fail("phi.kind", "unsupported kind '" + kind + "'");
}

Energy RunConfig::make_energy(const Grid& grid) const {
  const json& j = (*raw)["energy"];
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "zero") return Energy::zero(grid);
  if (kind == "m_laplacian")
    return Energy::mx_laplacian(grid, node_table(j["m"], "energy.m", grid));
  if (kind == "fractional")
    return Energy::fractional(grid, num(j["s"], "energy.s"),
                              j.contains("c_s") ? num(j["c_s"], "energy.c_s")
                                                : 1.0);
  fail("energy.kind", "unsupported kind '" + kind + "'");
}

SourceSpec RunConfig::make_source(const Grid& grid) const {
  const json& j = (*raw)["source"];
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "zero") return SourceSpec::zero();
  if (kind == "constant")
    return SourceSpec::constant(node_values(j["value"], "source.value", grid));
  if (kind == "tabulated") {
    const auto& sl = j["slices"];
    if (!sl.is_array() || static_cast<int>(sl.size()) != K)
      fail("source.slices", "expected K arrays");
    std::vector<GridFunction> slices;
    for (int k = 0; k < K; ++k)
      slices.push_back(node_values(sl[k], "source.slices", grid));
    return SourceSpec::tabulated(std::move(slices));
  }
  if (kind == "separable") {
    GridFunction g = node_values(j["g"], "source.g", grid);
    const json& h = j["h"];
    check_keys(h, "source.h", {"poly", "sin"});
    if (h.contains("poly")) {
      std::vector<double> coeffs;
      for (const auto& c : h["poly"])
        coeffs.push_back(num(c, "source.h.poly"));
      return SourceSpec::separable(std::move(g), [coeffs](double t) {
        double acc = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
          acc = acc * t + *it;
        return acc;
      });
    }
    const auto& sn = h["sin"];
    if (!sn.is_array() || sn.size() != 3)
      fail("source.h.sin", "expected [amp,omega,phase]");
    const double amp = num(sn[0], "source.h.sin"),
                 omega = num(sn[1], "source.h.sin"),
                 phase = num(sn[2], "source.h.sin");
    return SourceSpec::separable(std::move(g), [amp, omega, phase](double t) {
      return amp * std::sin(omega * t + phase);
    });
  }
  fail("source.kind", "unsupported kind '" + kind + "'");
}

GridFunction RunConfig::make_u0(const Grid& grid) const {
  const json& j = (*raw)["u0"];
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "zero") return GridFunction::Zero(grid.n);
  if (kind == "table") return node_values(j["values"], "u0.values", grid);
  if (kind == "sin") {
    const double amp = num(j["amplitude"], "u0.amplitude");
    const int modes = j.contains("modes") ? integer(j["modes"], "u0.modes") : 1;
    GridFunction u(grid.n);
    for (int i = 0; i < grid.n; ++i) {
      const double s = (grid.nodes[i] - grid.a) / (grid.b - grid.a);
      u[i] = amp * std::sin(std::numbers::pi * modes * s);
    }
    return u;
  }
  if (kind == "bubble") {
    const double amp = num(j["amplitude"], "u0.amplitude");
    GridFunction u(grid.n);
    for (int i = 0; i < grid.n; ++i)
      u[i] = amp * (grid.nodes[i] - grid.a) * (grid.b - grid.nodes[i]);
    return u;
  }
  fail("u0.kind", "unsupported kind '" + kind + "'");
}

SolverConfig RunConfig::make_solver() const {
  const json& j = (*raw)["solver"];
  SolverConfig s;
  s.grad_tol = num(j["grad_tol"], "solver.grad_tol");
  s.max_iters = integer(j["max_iters"], "solver.max_iters");
  s.hessian_floor = num(j["hessian_floor"], "solver.hessian_floor");
  s.shrink = num(j["shrink"], "solver.shrink");
  s.armijo = num(j["armijo"], "solver.armijo");
  if (!(s.grad_tol > 0.0)) fail("solver.grad_tol", "must be positive");
  if (!(s.shrink > 0.0 && s.shrink < 1.0)) fail("solver.shrink", "need (0,1)");
  if (!(s.armijo > 0.0 && s.armijo < 0.5)) fail("solver.armijo", "need (0,1/2)");
  return s;
}

Problem RunConfig::make_problem() const {
  Grid grid = make_grid();
  Problem prob{ModularSpace::make(grid, make_phi()),
               make_energy(grid),
               TimeGrid(T, K),
               make_u0(grid),
               make_source(grid),
               SteppingMode::Subdifferential,
               std::nullopt,
               make_solver()};
  const json& m = (*raw)["mode"];
  const std::string kind = m["kind"].get<std::string>();
  if (kind == "generalized") {
    prob.mode = SteppingMode::Generalized;
    const json& bj = m["beta"];
    const std::string bk = bj["kind"].get<std::string>();
    if (bk == "phi_alpha") {
      const double scale =
          bj.contains("scale") ? num(bj["scale"], "mode.beta.scale") : 1.0;
      prob.beta = Beta::from_phi(prob.space.phi, scale);
    } else if (bk == "arctan") {
      prob.beta = Beta::arctan();
    } else {
      fail("mode.beta.kind", "unsupported kind '" + bk + "'");
    }
  } else if (kind != "subdifferential") {
    fail("mode.kind", "unsupported kind '" + kind + "'");
  }
  return prob;
}

RunConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: malformed JSON: ") +
                                e.what());
  }

  check_keys(j, "$",
             {"domain", "time", "phi", "energy", "source", "u0", "solver",
              "mode", "output", "seed"});

  RunConfig cfg;
  cfg.storage = std::make_shared<json>();
  json& norm = *cfg.storage;
  cfg.raw = cfg.storage.get();

  // domain
  {
    if (!j.contains("domain")) fail("domain", "missing");
    const json& d = j["domain"];
    check_keys(d, "domain", {"a", "b", "n"});
    cfg.a = num(d.value("a", json(0.0)), "domain.a");
    cfg.b = num(d.value("b", json(1.0)), "domain.b");
    cfg.n = integer(d.value("n", json(64)), "domain.n");
    if (!(cfg.b > cfg.a)) fail("domain.b", "require b > a");
    if (cfg.n < 1) fail("domain.n", "require n >= 1");
    norm["domain"] = {{"a", cfg.a}, {"b", cfg.b}, {"n", cfg.n}};
  }
  // time
  {
    const json d = j.value("time", json({{"T", 1.0}, {"K", 64}}));
    check_keys(d, "time", {"T", "K"});
    cfg.T = num(d.value("T", json(1.0)), "time.T");
    cfg.K = integer(d.value("K", json(64)), "time.K");
    if (!(cfg.T > 0.0)) fail("time.T", "require T > 0");
    if (cfg.K < 1) fail("time.K", "require K >= 1");
    norm["time"] = {{"T", cfg.T}, {"K", cfg.K}};
  }
  // blocks copied after structural checks
  {
    if (!j.contains("phi")) fail("phi", "missing");
    const json& p = j["phi"];
    check_keys(p, "phi", {"kind", "p", "q", "a", "b"});
    if (!p.contains("kind") || !p["kind"].is_string())
      fail("phi.kind", "expected a string");
    norm["phi"] = p;
  }
  {
    const json e = j.value("energy", json({{"kind", "zero"}}));
    check_keys(e, "energy", {"kind", "m", "s", "c_s"});
    if (!e.contains("kind") || !e["kind"].is_string())
      fail("energy.kind", "expected a string");
    norm["energy"] = e;
  }
  {
    const json s = j.value("source", json({{"kind", "zero"}}));
    check_keys(s, "source", {"kind", "value", "slices", "g", "h"});
    if (!s.contains("kind") || !s["kind"].is_string())
      fail("source.kind", "expected a string");
    norm["source"] = s;
  }
  {
    const json u = j.value("u0", json({{"kind", "zero"}}));
    check_keys(u, "u0", {"kind", "amplitude", "modes", "values"});
    if (!u.contains("kind") || !u["kind"].is_string())
      fail("u0.kind", "expected a string");
    norm["u0"] = u;
  }
  {
    json s = j.value("solver", json::object());
    check_keys(s, "solver",
               {"grad_tol", "max_iters", "hessian_floor", "shrink", "armijo"});
    if (!s.contains("grad_tol")) s["grad_tol"] = 1e-10;
    if (!s.contains("max_iters")) s["max_iters"] = 200;
    if (!s.contains("hessian_floor")) s["hessian_floor"] = 1e-10;
    if (!s.contains("shrink")) s["shrink"] = 0.5;
    if (!s.contains("armijo")) s["armijo"] = 1e-4;
    norm["solver"] = s;
  }
  {
    const json m = j.value("mode", json({{"kind", "subdifferential"}}));
    check_keys(m, "mode", {"kind", "beta"});
    if (m.contains("beta"))
      check_keys(m["beta"], "mode.beta", {"kind", "scale"});
    norm["mode"] = m;
  }
  {
    const json o = j.value("output", json::object());
    check_keys(o, "output", {"directory", "snapshots", "csv_precision"});
    cfg.out_dir = o.value("directory", "out");
    cfg.csv_precision = o.value("csv_precision", 17);
    if (o.contains("snapshots"))
      for (const auto& s : o["snapshots"])
        cfg.snapshots.push_back(integer(s, "output.snapshots"));
    norm["output"] = {{"directory", cfg.out_dir},
                      {"snapshots", cfg.snapshots},
                      {"csv_precision", cfg.csv_precision}};
  }
  cfg.seed = j.value("seed", 0u);
  norm["seed"] = cfg.seed;

  // Eagerly build every component so schema errors surface at parse time.
  (void)cfg.make_problem();
  return cfg;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::string serialize(const RunConfig& cfg) { return cfg.raw->dump(2); }

}  // namespace orlicz
