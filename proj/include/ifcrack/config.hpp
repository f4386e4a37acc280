#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ifcrack/bimaterial.hpp"
#include "ifcrack/mode3_solver.hpp"
#include "ifcrack/plane_solver.hpp"

namespace ifcrack {

// Malformed or inconsistent run configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SweepConfig {
  double alpha_min = -0.95, alpha_max = 0.95;
  int alpha_count = 81;
  std::vector<double> ratios = {0.2, 0.5, 1.0, 2.0};
};

// One JSON file drives every subcommand. Blocks:
//   material.1 / material.2 : 6x6 "stiffness" or "compliance" rows, or
//                             {"isotropic": {"E":..., "nu":...}}
//   bimaterial.direct       : parameter-level input (alternative to materials)
//   load.mode3 / load.plane : "sym"/"skew" components, each a line_force or a
//                             smooth profile (gaussian | patch | table)
//   numerics                : quadrature scheme overrides, output points
//   output                  : output directory
//   sweep                   : alpha grid and force ratios
// Material block as given, before validation: cmd_material reports on these
// even when validation fails.
struct RawMaterial {
  std::string id;
  Matrix6d matrix;
  bool is_stiffness = false;
};

struct RunConfig {
  std::optional<RawMaterial> raw1, raw2;
  std::optional<MaterialSpec> material1, material2;  // set when validation passed
  std::string material_error;                        // first failure, if any
  std::optional<DirectParams> direct;
  std::optional<LoadSpecAntiplane> mode3_load;
  std::optional<LoadSpecPlane> plane_load;
  QuadratureScheme scheme;
  SweepConfig sweep;
  int output_points = 200;
  std::string output_dir = "out";

  // Bimaterial parameters from whichever input route is present; throws
  // std::domain_error when a provided material failed validation.
  BimaterialParams resolve_bimaterial() const;
};

RunConfig load_config(const std::string& path);

}  // namespace ifcrack
