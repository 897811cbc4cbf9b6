#pragma once

#include <memory>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "orlicz/stepper.hpp"

namespace orlicz {

/// Fully validated run description. `raw` holds the normalized JSON with
/// defaults filled in; serialize/parse round-trips it bit-exactly.
struct RunConfig {
  nlohmann::json* raw = nullptr;  // owned via shared storage below
  std::shared_ptr<nlohmann::json> storage;

  // domain
  double a = 0.0, b = 1.0;
  int n = 64;
  // time
  double T = 1.0;
  int K = 64;

  unsigned seed = 0;
  std::string out_dir = "out";
  std::vector<int> snapshots;
  int csv_precision = 17;

  Grid make_grid() const;
  PhiFunction make_phi() const;
  Energy make_energy(const Grid& grid) const;
  SourceSpec make_source(const Grid& grid) const;
  GridFunction make_u0(const Grid& grid) const;
  SolverConfig make_solver() const;
  Problem make_problem() const;
};

/// Strict-schema parse: unknown keys and malformed fields are rejected with
/// a diagnostic naming the JSON path.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config(const std::string& path);
std::string serialize(const RunConfig& cfg);

}  // namespace orlicz
