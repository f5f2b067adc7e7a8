#pragma once

#include "heatpen/config.hpp"
#include "heatpen/problem.hpp"

#include <string>
#include <vector>

namespace heatpen {

// Spec builders shared by the commands, the acceptance suite and the Python
// bindings. `fine` selects the refined member of the mesh pair.
ProblemSpec square_spec(const RunConfig& config, bool fine, BoundaryMode mode);
ProblemSpec disk_spec(const RunConfig& config, bool fine, BoundaryMode mode);
ProblemSpec oned_spec(const RunConfig& config, bool fine, BoundaryMode mode);

// Experiment commands. Each writes CSV files under config.out_dir and
// returns the paths written, in a deterministic order.
std::vector<std::string> cmd_boundary_layer(const RunConfig& config);
std::vector<std::string> cmd_square(const RunConfig& config);
std::vector<std::string> cmd_disk(const RunConfig& config);
std::vector<std::string> cmd_1d(const RunConfig& config);
std::vector<std::string> cmd_sweep_epsilon(const RunConfig& config);

std::vector<std::string> run_experiment(const RunConfig& config);

}  // namespace heatpen
