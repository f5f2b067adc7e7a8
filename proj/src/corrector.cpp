#include "heatpen/corrector.hpp"

#include "heatpen/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace heatpen {

double s0(double x, double t, double nu) {
  if (x < 0.0) throw std::invalid_argument("s0: x must be >= 0");
  if (t < 0.0) throw std::invalid_argument("s0: t must be >= 0");
  if (t == 0.0) return x > 0.0 ? 0.0 : 1.0;
  return std::erfc(x / (2.0 * std::sqrt(nu * t)));
}

double s1(double x, double t, double nu) {
  if (x < 0.0) throw std::invalid_argument("s1: x must be >= 0");
  if (t < 0.0) throw std::invalid_argument("s1: t must be >= 0");
  if (t == 0.0) return 0.0;
  // Substituting tau = u^2 widens the flat transient near tau = 0, which the
  // adaptive refinement would otherwise chase to great depth for small x.
  return integrate([x, nu](double u) { return 2.0 * u * s0(x, u * u, nu); }, 0.0,
                   std::sqrt(t), 1e-10);
}

double s1_closed(double x, double t, double nu) {
  if (t == 0.0) return 0.0;
  if (x == 0.0) return t;
  const double eta = x / (2.0 * std::sqrt(nu * t));
  return (t + x * x / (2.0 * nu)) * std::erfc(eta) -
         x * std::sqrt(t / (std::numbers::pi * nu)) * std::exp(-eta * eta);
}

CorrectorSpec make_corrector_spec(const ProblemSpec& spec) {
  const auto* interval = std::get_if<Interval1D>(&spec.domain);
  if (!interval)
    throw std::invalid_argument("make_corrector_spec: requires a 1D domain");
  const int procedure = spec.mode.procedure;
  if (procedure < 0 || procedure > 2)
    throw std::invalid_argument("make_corrector_spec: procedure must be 0, 1 or 2");

  CorrectorSpec c;
  c.procedure = procedure;
  c.nu = spec.nu;
  if (procedure == 0) return c;

  const double g0 = spec.g(0.0);
  c.alpha0_left = g0 - spec.u0.value(0.0, 0.0);
  c.alpha0_right = g0 - spec.u0.value(1.0, 0.0);
  if (procedure == 2) {
    if (!spec.u0.second_x)
      throw std::domain_error("make_corrector_spec: u0 '" + spec.u0.name +
                              "' has no second derivative; procedure 2 needs it");
    const double g1 = spec.g.derivative(1, 0.0);
    c.alpha1_left = g1 - spec.nu * spec.u0.second_x(0.0, 0.0);
    c.alpha1_right = g1 - spec.nu * spec.u0.second_x(1.0, 0.0);
  }
  return c;
}

double Corrector::operator()(double x, double t) const {
  if (spec_.procedure == 0) return 0.0;
  double s = 0.0;
  if (spec_.alpha0_left != 0.0) s += spec_.alpha0_left * s0(x, t, spec_.nu);
  if (spec_.alpha0_right != 0.0) s += spec_.alpha0_right * s0(1.0 - x, t, spec_.nu);
  if (spec_.procedure == 2) {
    // The closed form of S1; the quadrature route s1() is cross-checked
    // against it in the tests and stays out of the per-node hot path.
    if (spec_.alpha1_left != 0.0) s += spec_.alpha1_left * s1_closed(x, t, spec_.nu);
    if (spec_.alpha1_right != 0.0)
      s += spec_.alpha1_right * s1_closed(1.0 - x, t, spec_.nu);
  }
  return s;
}

Corrector build_corrector(const CorrectorSpec& spec) { return Corrector(spec); }

Trajectory solve_corrected(const ProblemSpec& spec, const SolveOptions& options) {
  spec.validate();
  if (spec.mode.kind != BoundaryModeKind::Corrector)
    throw std::invalid_argument("solve_corrected: spec is not in Corrector mode");
  const auto& interval = std::get<Interval1D>(spec.domain);
  const Corrector S = build_corrector(make_corrector_spec(spec));

  // v solves the same equation with boundary data g - S at the endpoints and
  // v(x, 0) = u0(x); the singular part is added back afterwards.
  ProblemSpec vspec = spec;
  vspec.mode = BoundaryMode::direct();
  const TimeSignal g = spec.g;
  Trajectory traj = solve_with_boundary(
      vspec,
      [&S, g](const BoundaryNode& node, double t) { return g(t) - S(node.x, t); },
      options);

  traj.spec = spec;
  for (std::size_t s = 0; s < traj.snapshots.size(); ++s) {
    const double t = traj.snapshot_time(static_cast<int>(s));
    ScalarField& field = traj.snapshots[s];
    for (int i = 0; i <= interval.n_cells; ++i)
      field[i] += S(interval.x(i), t);
  }
  return traj;
}

}  // namespace heatpen
