#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace heatpen {

enum class Experiment { BoundaryLayer, Square, Disk, OneD, SweepEpsilon };

const char* to_string(Experiment e);

/// Config-file parse failure, carrying the offending line number (0 when the
/// problem is not tied to a line).
struct ConfigError : std::runtime_error {
  int line;
  ConfigError(int line, const std::string& message);
};

/// All knobs of the experiment commands; parseable from a line-based
/// `key = value` file with `#` comments. Unknown keys are rejected.
struct RunConfig {
  Experiment experiment = Experiment::Square;
  std::string out_dir = "out";

  double nu = 0.2;
  double epsilon = 0.1;
  double t_end = 1.0;
  std::vector<double> epsilons{0.01, 0.05, 0.1, 0.2, 0.5, 1.0};
  std::string mode = "all";  // all | direct | penalty | corrector
  int procedure = 2;
  std::string u0;
  std::string g = "zero";
  std::string f = "zero";

  // Coarse / fine mesh pair. 1D runs use nx; the disk uses nr and ntheta.
  int nx = 24, ny = 24, steps = 1000;
  int fine_nx = 48, fine_ny = 48, fine_steps = 4000;
  int nr = 10, ntheta = 63;
  int fine_nr = 20, fine_ntheta = 126;

  // Boundary-layer probe point (a boundary node of the square).
  double point_x = 0.0;
  double point_y = 0.0;

  double section_y = 0.6;        // square section row
  double section_theta = 0.0;    // disk section ray (default pi/4, set below)

  std::string base = "square";   // sweep-epsilon: which experiment's mesh pair

  void validate() const;  // positivity and name checks; throws ConfigError
};

/// Built-in defaults for one experiment (mesh pair, functions, epsilon list).
RunConfig default_config(Experiment experiment);

/// Overlay `key = value` assignments from a file onto `config`.
/// Throws ConfigError with the line number on unknown keys or bad values.
void apply_config_file(RunConfig& config, const std::filesystem::path& path);

/// Single assignment, shared by the file parser and CLI overrides.
void apply_key_value(RunConfig& config, const std::string& key,
                     const std::string& value, int line = 0);

/// Output directory resolution: SOLVER_OUT_DIR (when set) overrides both the
/// --out flag and the config value.
std::string resolve_out_dir(const std::string& configured,
                            const std::optional<std::string>& env_value);

}  // namespace heatpen
