#pragma once

#include <optional>
#include <string>

#include "ruptureopt/optimizer.hpp"
#include "ruptureopt/scenarios.hpp"

namespace ruptureopt {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Everything one CLI run needs. The GA defaults already carry the reference
/// experiment parameters, so a minimal config only names a scenario.
struct RunConfig {
  DesignProblem problem;
  std::optional<MomentArmMatrix> design;
  GaConfig ga;
  std::string output_dir = ".";
  bool emit_svg = true;
  bool emit_csv = true;
};

/// Parse a JSON config document with top-level keys problem, ga, output.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

}  // namespace ruptureopt
