#pragma once

#include "heatpen/field.hpp"
#include "heatpen/functions.hpp"
#include "heatpen/grid.hpp"

namespace heatpen {

enum class BoundaryModeKind { Direct, Penalty, Corrector };

/// How the Dirichlet boundary is fed to the explicit march: the data g
/// itself, the relaxed penalty value k_eps, or (1D only) boundary data
/// shifted by a singular corrector.
struct BoundaryMode {
  BoundaryModeKind kind = BoundaryModeKind::Direct;
  double epsilon = 0.0;  // Penalty only
  int procedure = 0;     // Corrector only: 0, 1 or 2

  static BoundaryMode direct() { return {}; }
  static BoundaryMode penalty(double epsilon) {
    return {BoundaryModeKind::Penalty, epsilon, 0};
  }
  static BoundaryMode corrector(int procedure) {
    return {BoundaryModeKind::Corrector, 0.0, procedure};
  }
};

const char* to_string(BoundaryModeKind kind);

/// Full description of one initial-boundary value problem
/// u_t - nu*Lap(u) = f, u(0) = u0, u|boundary per `mode`.
struct ProblemSpec {
  Domain domain;
  double nu = 0.2;
  Forcing f = forcing("zero");
  TimeSignal g = TimeSignal::zero();
  SpaceFunction u0 = space_function("zero");
  TimeGrid time{1};
  BoundaryMode mode = BoundaryMode::direct();

  /// Throws std::invalid_argument on ill-formed combinations.
  void validate() const;
};

/// u0 sampled at every grid node, boundary included.
ScalarField evaluate_initial(const ProblemSpec& spec);

}  // namespace heatpen
