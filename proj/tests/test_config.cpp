#include <doctest.h>

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "orlicz/config.hpp"

using namespace orlicz;

namespace {

const char* kMinimal = R"({
  "domain": {"a": 0.0, "b": 1.0, "n": 8},
  "phi": {"kind": "power", "p": 2.0}
})";

const char* kFull = R"({
  "domain": {"a": -1.0, "b": 2.0, "n": 12},
  "time": {"T": 0.5, "K": 10},
  "phi": {"kind": "power_log", "p": {"ramp": [1.8, 2.5]}, "q": 1.0},
  "energy": {"kind": "m_laplacian", "m": {"ramp": [1.8, 2.5]}},
  "source": {"kind": "separable", "g": {"sin": [0.0, 1.0, 1.0]},
             "h": {"poly": [0.0, 1.0]}},
  "u0": {"kind": "sin", "amplitude": 0.1, "modes": 1},
  "solver": {"grad_tol": 1e-11, "max_iters": 300, "hessian_floor": 1e-10,
             "shrink": 0.5, "armijo": 1e-4},
  "mode": {"kind": "generalized", "beta": {"kind": "phi_alpha", "scale": 1.0}},
  "output": {"directory": "run1", "snapshots": [0, 5, 10], "csv_precision": 17},
  "seed": 42
})";

bool fails_at(const std::string& text, const std::string& path) {
  try {
    parse_config_text(text);
  } catch (const std::invalid_argument& e) {
    return std::string(e.what()).find(path) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST_CASE("minimal config fills defaults") {
  const RunConfig cfg = parse_config_text(kMinimal);
  CHECK(cfg.n == 8);
  CHECK(cfg.T == 1.0);
  CHECK(cfg.K == 64);
  CHECK(cfg.out_dir == "out");
  CHECK(cfg.csv_precision == 17);
  const Problem prob = cfg.make_problem();
  CHECK(prob.mode == SteppingMode::Subdifferential);
  CHECK(prob.u0.isZero(0.0));
}

TEST_CASE("full config builds the generalized problem") {
  const RunConfig cfg = parse_config_text(kFull);
  const Problem prob = cfg.make_problem();
  CHECK(prob.mode == SteppingMode::Generalized);
  CHECK(prob.beta.has_value());
  CHECK(prob.tg.K == 10);
  CHECK(prob.space.grid.n == 12);
  CHECK(cfg.seed == 42u);
  CHECK(cfg.snapshots.size() == 3);
  CHECK(cfg.make_solver().grad_tol == 1e-11);
}

TEST_CASE("round trip through serialize is stable") {
  const RunConfig cfg = parse_config_text(kFull);
  const std::string text = serialize(cfg);
  const RunConfig back = parse_config_text(text);
  CHECK(*cfg.raw == *back.raw);
  CHECK(serialize(back) == text);
}

TEST_CASE("diagnostics name the offending path") {
  CHECK(fails_at(R"({"domain": {"a": 0, "b": 1, "n": "x"},
                     "phi": {"kind": "power", "p": 2}})",
                 "domain.n"));
  CHECK(fails_at(R"({"domain": {"a": 0, "b": 1, "n": 4},
                     "phi": {"kind": "power", "p": {"table": [2, 2]}}})",
                 "phi.p.table"));
  CHECK(fails_at(R"({"domain": {"a": 0, "b": 1, "n": 4}, "bogus": 1,
                     "phi": {"kind": "power", "p": 2}})",
                 "bogus"));
  CHECK(fails_at(R"({"domain": {"a": 1, "b": 0, "n": 4},
                     "phi": {"kind": "power", "p": 2}})",
                 "domain.b"));
}

TEST_CASE("parameter ramps land on the node values") {
  const RunConfig cfg = parse_config_text(kFull);
  const Grid grid = cfg.make_grid();
  const PhiFunction phi = cfg.make_phi();
  // ramp 1.8 -> 2.5 over (-1, 2): exponent at the leftmost node is near 1.8
  CHECK(phi.phi(0, 1.0) > 0.0);
  CHECK_FALSE(phi.spatially_homogeneous());
  CHECK(grid.nodes[0] == doctest::Approx(-1.0 + grid.h).epsilon(1e-12));
}
