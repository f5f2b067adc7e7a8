#pragma once

#include "heatpen/problem.hpp"

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace heatpen {

/// Dimensionless stability number of the explicit scheme and the applied
/// limit (lambda <= 1/2 on all three domains).
struct CflReport {
  double lambda = 0.0;
  bool stable = false;
  std::string formula;
};

CflReport cfl_check(const ProblemSpec& spec);

/// Thrown when solve() refuses an unstable spec.
struct CflRefusal : std::runtime_error {
  CflReport report;
  explicit CflRefusal(CflReport r);
};

// One explicit FTCS step on each domain: the interior is updated from u_n,
// the boundary nodes are set to the supplied (level n+1) values. The stencil
// reads u_n's own boundary entries, i.e. the level-n boundary data.
// t_n is the time at which the forcing is sampled.
ScalarField step_1d(const ScalarField& u_n, double left, double right,
                    const ProblemSpec& spec, double t_n);
ScalarField step_square(const ScalarField& u_n, std::span<const double> boundary,
                        const ProblemSpec& spec, double t_n);
ScalarField step_polar(const ScalarField& u_n, std::span<const double> ring,
                       const ProblemSpec& spec, double t_n);

/// Default snapshot step set: every step up to 2000 steps, otherwise every
/// ceil(n_steps/2000)-th step; step 0 and the final step are always kept.
std::vector<int> default_snapshot_steps(int n_steps);

/// Map snapshot steps onto a time grid refined by an integer factor.
std::vector<int> scaled_snapshot_steps(const std::vector<int>& steps, int ratio);

struct SolveOptions {
  std::optional<std::vector<int>> snapshot_steps;
};

/// Result of one explicit march: fields at the recorded steps, plus the
/// per-boundary-node relaxation series when running in Penalty mode.
struct Trajectory {
  ProblemSpec spec;
  std::vector<int> snapshot_steps;
  std::vector<ScalarField> snapshots;
  std::vector<std::vector<double>> boundary_history;  // [snapshot][boundary node]
  bool penalty_warning = false;

  int snapshot_index_of(int step) const;  // -1 when the step was not recorded
  const ScalarField& at_step(int step) const;
  double snapshot_time(int snapshot_index) const;
};

/// March the explicit scheme over the full time grid. Refuses unstable specs
/// (CflRefusal); aborts with the step index if a non-finite value appears.
Trajectory solve(const ProblemSpec& spec, const SolveOptions& options = {});

/// Direct-type march with caller-supplied Dirichlet data per boundary node;
/// used by the corrector path and by tests.
Trajectory solve_with_boundary(
    const ProblemSpec& spec,
    const std::function<double(const BoundaryNode&, double)>& data,
    const SolveOptions& options = {});

}  // namespace heatpen
