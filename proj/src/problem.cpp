#include "heatpen/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace heatpen {

bool ScalarField::all_finite() const {
  for (double v : values)
    if (!std::isfinite(v)) return false;
  return true;
}

const char* to_string(BoundaryModeKind kind) {
  switch (kind) {
    case BoundaryModeKind::Direct: return "direct";
    case BoundaryModeKind::Penalty: return "penalty";
    case BoundaryModeKind::Corrector: return "corrector";
  }
  return "?";
}

void ProblemSpec::validate() const {
  if (!(nu > 0.0)) throw std::invalid_argument("ProblemSpec: nu must be > 0");
  if (mode.kind == BoundaryModeKind::Penalty && !(mode.epsilon > 0.0))
    throw std::invalid_argument("ProblemSpec: Penalty mode requires epsilon > 0");
  if (mode.kind == BoundaryModeKind::Corrector) {
    if (!std::holds_alternative<Interval1D>(domain))
      throw std::invalid_argument("ProblemSpec: Corrector mode requires a 1D domain");
    if (mode.procedure < 0 || mode.procedure > 2)
      throw std::invalid_argument("ProblemSpec: corrector procedure must be 0, 1 or 2");
  }
}

ScalarField evaluate_initial(const ProblemSpec& spec) {
  ScalarField field(static_cast<std::size_t>(node_count(spec.domain)));
  const auto& u0 = spec.u0.value;
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, Interval1D>) {
          for (int i = 0; i <= g.n_cells; ++i) field[i] = u0(g.x(i), 0.0);
        } else if constexpr (std::is_same_v<G, SquareGrid>) {
          for (int j = 0; j <= g.ny; ++j)
            for (int i = 0; i <= g.nx; ++i)
              field[g.index(i, j)] = u0(g.x(i), g.y(j));
        } else {
          field[0] = u0(0.0, 0.0);
          for (int i = 1; i <= g.nr; ++i)
            for (int k = 0; k < g.ntheta; ++k)
              field[g.index(i, k)] = u0(g.node_x(i, k), g.node_y(i, k));
        }
      },
      spec.domain);
  return field;
}

}  // namespace heatpen
