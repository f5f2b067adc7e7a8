#pragma once

#include "heatpen/solver.hpp"

#include <utility>
#include <vector>

namespace heatpen {

/// Per-time maximum absolute difference between a coarse solve and a nested
/// finer solve restricted to the coarse nodes.
struct ErrorCurve {
  std::vector<double> times;
  std::vector<double> max_error;
  std::string mode;
  ProblemSpec coarse_spec;
  ProblemSpec fine_spec;

  double peak() const;
  /// Error at the first coincident time after t = 0 ("initial step").
  double initial_step_error() const;
  double final_step_error() const;
};

/// Requires the fine spatial mesh to be an integer refinement of the coarse
/// one (node sets nest) and the fine dt to divide the coarse dt; the curve is
/// evaluated at every coarse snapshot time also present in the fine run.
ErrorCurve comparative_error(const Trajectory& coarse, const Trajectory& fine);

/// Least-squares slope of log(error) vs log(h); needs >= 3 points with
/// positive errors. residual is the RMS misfit of the line.
struct RateFit {
  std::vector<double> h;
  std::vector<double> error;
  double slope = 0.0;
  double residual = 0.0;
};

RateFit fit_rate(const std::vector<std::pair<double, double>>& points);

/// One row of an epsilon sweep: errors of the Penalty(eps) mesh pair at the
/// first post-zero coincident time and at the final time. warning flags
/// dt/eps > 1 on either member of the pair.
struct SweepRow {
  double epsilon;
  double initial_error;
  double final_error;
  bool warning;
};

/// Run the coarse/fine pair in Penalty mode for each epsilon; rows are
/// returned sorted ascending in epsilon.
std::vector<SweepRow> epsilon_sweep(const ProblemSpec& coarse_base,
                                    const ProblemSpec& fine_base,
                                    std::vector<double> epsilons);

}  // namespace heatpen
