#include "heatpen/solver.hpp"

#include "heatpen/corrector.hpp"
#include "heatpen/penalty.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace heatpen {

namespace {

std::string format_cfl(const CflReport& r) {
  std::ostringstream os;
  os << "unstable explicit scheme: " << r.formula << " gives lambda = " << r.lambda
     << " > 1/2";
  return os.str();
}

}  // namespace

CflRefusal::CflRefusal(CflReport r) : std::runtime_error(format_cfl(r)), report(std::move(r)) {}

CflReport cfl_check(const ProblemSpec& spec) {
  const double dt = spec.time.dt();
  const double nu = spec.nu;
  CflReport report;
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, Interval1D>) {
          const double dx = g.dx();
          report.lambda = nu * dt / (dx * dx);
          report.formula = "nu*dt/dx^2";
        } else if constexpr (std::is_same_v<G, SquareGrid>) {
          const double dx = g.dx(), dy = g.dy();
          report.lambda = nu * dt * (1.0 / (dx * dx) + 1.0 / (dy * dy));
          report.formula = "nu*dt*(1/dx^2 + 1/dy^2)";
        } else {
          // Most restrictive interior ring is r = dr.
          const double dr = g.dr(), dth = g.dtheta(), rmin = dr;
          report.lambda = nu * dt *
                          (1.0 / (dr * dr) + 1.0 / (rmin * dr) +
                           1.0 / (rmin * rmin * dth * dth));
          report.formula =
              "nu*dt*(1/dr^2 + 1/(r*dr) + 1/(r^2*dtheta^2)) at r = dr";
        }
      },
      spec.domain);
  report.stable = report.lambda <= 0.5;
  return report;
}

namespace {

void require_size(std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    throw std::invalid_argument(std::string(what) + ": expected " +
                                std::to_string(want) + " values, got " +
                                std::to_string(got));
}

void check_finite(const ScalarField& u, const char* op) {
  if (!u.all_finite())
    throw std::runtime_error(std::string(op) + ": non-finite value in update");
}

void interior_step_1d(const Interval1D& g, const ProblemSpec& spec, double t_n,
                      std::span<const double> u, std::span<double> out) {
  const double dx = g.dx();
  const double lambda = spec.nu * spec.time.dt() / (dx * dx);
  const double dt = spec.time.dt();
  const bool with_f = !spec.f.is_zero;
  for (int i = 1; i < g.n_cells; ++i) {
    double v = u[i] + lambda * (u[i + 1] + u[i - 1] - 2.0 * u[i]);
    if (with_f) v += dt * spec.f.value(g.x(i), 0.0, t_n);
    out[i] = v;
  }
}

void interior_step_square(const SquareGrid& g, const ProblemSpec& spec, double t_n,
                          std::span<const double> u, std::span<double> out) {
  const double dt = spec.time.dt();
  const double lx = spec.nu * dt / (g.dx() * g.dx());
  const double ly = spec.nu * dt / (g.dy() * g.dy());
  const bool with_f = !spec.f.is_zero;
  const int stride = g.nx + 1;
  for (int j = 1; j < g.ny; ++j) {
    const int row = j * stride;
    for (int i = 1; i < g.nx; ++i) {
      const int c = row + i;
      double v = u[c] + lx * (u[c + 1] + u[c - 1] - 2.0 * u[c]) +
                 ly * (u[c + stride] + u[c - stride] - 2.0 * u[c]);
      if (with_f) v += dt * spec.f.value(g.x(i), g.y(j), t_n);
      out[c] = v;
    }
  }
}

void interior_step_polar(const PolarGrid& g, const ProblemSpec& spec, double t_n,
                         std::span<const double> u, std::span<double> out) {
  const double dt = spec.time.dt();
  const double nu = spec.nu;
  const double dr = g.dr();
  const double dth = g.dtheta();
  const bool with_f = !spec.f.is_zero;
  const int nt = g.ntheta;

  // Origin: averaged five-point Laplacian, (4/dr^2)*(ring mean - u(0)).
  {
    double ring_mean = 0.0;
    for (int k = 0; k < nt; ++k) ring_mean += u[g.index(1, k)];
    ring_mean /= nt;
    double v = u[0] + nu * dt * (4.0 / (dr * dr)) * (ring_mean - u[0]);
    if (with_f) v += dt * spec.f.value(0.0, 0.0, t_n);
    out[0] = v;
  }

  for (int i = 1; i < g.nr; ++i) {
    const double r = g.r(i);
    const double c_rr = nu * dt / (dr * dr);
    const double c_r = nu * dt / (2.0 * r * dr);
    const double c_th = nu * dt / (r * r * dth * dth);
    const int base = g.index(i, 0);
    const int inner_base = i == 1 ? 0 : g.index(i - 1, 0);
    const int outer_base = g.index(i + 1, 0);
    for (int k = 0; k < nt; ++k) {
      const int c = base + k;
      const double u_in = i == 1 ? u[0] : u[inner_base + k];
      const double u_out = u[outer_base + k];
      const double u_km = u[base + (k == 0 ? nt - 1 : k - 1)];
      const double u_kp = u[base + (k == nt - 1 ? 0 : k + 1)];
      double v = u[c] + c_rr * (u_out - 2.0 * u[c] + u_in) + c_r * (u_out - u_in) +
                 c_th * (u_kp - 2.0 * u[c] + u_km);
      if (with_f) v += dt * spec.f.value(g.node_x(i, k), g.node_y(i, k), t_n);
      out[c] = v;
    }
  }
}

}  // namespace

ScalarField step_1d(const ScalarField& u_n, double left, double right,
                    const ProblemSpec& spec, double t_n) {
  const auto& g = std::get<Interval1D>(spec.domain);
  require_size(u_n.size(), static_cast<std::size_t>(g.node_count()), "step_1d");
  ScalarField out(u_n.size());
  interior_step_1d(g, spec, t_n, u_n.values, out.values);
  out[0] = left;
  out[static_cast<std::size_t>(g.n_cells)] = right;
  check_finite(out, "step_1d");
  return out;
}

ScalarField step_square(const ScalarField& u_n, std::span<const double> boundary,
                        const ProblemSpec& spec, double t_n) {
  const auto& g = std::get<SquareGrid>(spec.domain);
  require_size(u_n.size(), static_cast<std::size_t>(g.node_count()), "step_square");
  const auto bnodes = boundary_nodes(g);
  require_size(boundary.size(), bnodes.size(), "step_square boundary");
  ScalarField out(u_n.size());
  interior_step_square(g, spec, t_n, u_n.values, out.values);
  for (std::size_t b = 0; b < bnodes.size(); ++b) out[bnodes[b].node] = boundary[b];
  check_finite(out, "step_square");
  return out;
}

ScalarField step_polar(const ScalarField& u_n, std::span<const double> ring,
                       const ProblemSpec& spec, double t_n) {
  const auto& g = std::get<PolarGrid>(spec.domain);
  require_size(u_n.size(), static_cast<std::size_t>(g.node_count()), "step_polar");
  const auto bnodes = boundary_nodes(g);
  require_size(ring.size(), bnodes.size(), "step_polar boundary");
  ScalarField out(u_n.size());
  interior_step_polar(g, spec, t_n, u_n.values, out.values);
  for (std::size_t b = 0; b < bnodes.size(); ++b) out[bnodes[b].node] = ring[b];
  check_finite(out, "step_polar");
  return out;
}

std::vector<int> default_snapshot_steps(int n_steps) {
  const int stride = n_steps <= 2000 ? 1 : (n_steps + 1999) / 2000;
  std::vector<int> steps;
  for (int n = 0; n <= n_steps; n += stride) steps.push_back(n);
  if (steps.back() != n_steps) steps.push_back(n_steps);
  return steps;
}

std::vector<int> scaled_snapshot_steps(const std::vector<int>& steps, int ratio) {
  if (ratio < 1) throw std::invalid_argument("scaled_snapshot_steps: ratio must be >= 1");
  std::vector<int> out;
  out.reserve(steps.size());
  for (int s : steps) out.push_back(s * ratio);
  return out;
}

int Trajectory::snapshot_index_of(int step) const {
  const auto it = std::lower_bound(snapshot_steps.begin(), snapshot_steps.end(), step);
  if (it == snapshot_steps.end() || *it != step) return -1;
  return static_cast<int>(it - snapshot_steps.begin());
}

const ScalarField& Trajectory::at_step(int step) const {
  const int idx = snapshot_index_of(step);
  if (idx < 0)
    throw std::out_of_range("Trajectory::at_step: step " + std::to_string(step) +
                            " was not recorded");
  return snapshots[static_cast<std::size_t>(idx)];
}

double Trajectory::snapshot_time(int snapshot_index) const {
  return spec.time.time(snapshot_steps.at(static_cast<std::size_t>(snapshot_index)));
}

namespace {

std::vector<int> sanitize_snapshot_steps(std::vector<int> steps, int n_steps) {
  steps.push_back(0);
  steps.push_back(n_steps);
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  if (steps.front() < 0 || steps.back() > n_steps)
    throw std::invalid_argument("snapshot steps outside [0, n_steps]");
  return steps;
}

// Marches the scheme with a per-step boundary updater. `update` fills the
// level n+1 boundary values; the interior stencil has already consumed the
// level n values stored in the current field.
Trajectory march(const ProblemSpec& spec, const SolveOptions& options,
                 const std::function<void(int, std::vector<double>&)>& update,
                 bool record_boundary) {
  const auto bnodes = boundary_nodes(spec.domain);
  const int n_steps = spec.time.n_steps;

  Trajectory traj;
  traj.spec = spec;
  traj.snapshot_steps = options.snapshot_steps
                            ? sanitize_snapshot_steps(*options.snapshot_steps, n_steps)
                            : default_snapshot_steps(n_steps);
  traj.snapshots.reserve(traj.snapshot_steps.size());

  ScalarField cur = evaluate_initial(spec);
  check_finite(cur, "solve (initial data)");
  std::vector<double> bvals(bnodes.size());
  for (std::size_t b = 0; b < bnodes.size(); ++b) bvals[b] = cur[bnodes[b].node];

  std::size_t next_snap = 0;
  auto record = [&](int step) {
    if (next_snap < traj.snapshot_steps.size() &&
        traj.snapshot_steps[next_snap] == step) {
      traj.snapshots.push_back(cur);
      if (record_boundary) traj.boundary_history.push_back(bvals);
      ++next_snap;
    }
  };
  record(0);

  ScalarField next(cur.size());
  for (int n = 0; n < n_steps; ++n) {
    const double t_n = spec.time.time(n);
    std::visit(
        [&](const auto& g) {
          using G = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<G, Interval1D>)
            interior_step_1d(g, spec, t_n, cur.values, next.values);
          else if constexpr (std::is_same_v<G, SquareGrid>)
            interior_step_square(g, spec, t_n, cur.values, next.values);
          else
            interior_step_polar(g, spec, t_n, cur.values, next.values);
        },
        spec.domain);
    update(n + 1, bvals);
    for (std::size_t b = 0; b < bnodes.size(); ++b) next[bnodes[b].node] = bvals[b];
    if (!next.all_finite())
      throw std::runtime_error("solve: non-finite value at step " +
                               std::to_string(n + 1) + " (t = " +
                               std::to_string(spec.time.time(n + 1)) + ")");
    std::swap(cur.values, next.values);
    record(n + 1);
  }
  return traj;
}

}  // namespace

Trajectory solve_with_boundary(
    const ProblemSpec& spec,
    const std::function<double(const BoundaryNode&, double)>& data,
    const SolveOptions& options) {
  spec.validate();
  const auto report = cfl_check(spec);
  if (!report.stable) throw CflRefusal(report);
  const auto bnodes = boundary_nodes(spec.domain);
  return march(
      spec, options,
      [&](int step, std::vector<double>& bvals) {
        const double t = spec.time.time(step);
        for (std::size_t b = 0; b < bnodes.size(); ++b) bvals[b] = data(bnodes[b], t);
      },
      /*record_boundary=*/false);
}

Trajectory solve(const ProblemSpec& spec, const SolveOptions& options) {
  spec.validate();
  switch (spec.mode.kind) {
    case BoundaryModeKind::Direct: {
      const TimeSignal g = spec.g;
      return solve_with_boundary(
          spec, [g](const BoundaryNode&, double t) { return g(t); }, options);
    }
    case BoundaryModeKind::Corrector:
      return solve_corrected(spec, options);
    case BoundaryModeKind::Penalty:
      break;
  }

  const auto report = cfl_check(spec);
  if (!report.stable) throw CflRefusal(report);

  const double eps = spec.mode.epsilon;
  const double dt = spec.time.dt();
  const TimeSignal g = spec.g;
  Trajectory traj = march(
      spec, options,
      [&, eps, dt](int step, std::vector<double>& k) {
        // Level n -> n+1 uses g at level n, matching the explicit update
        // (k^{n+1} - k^n)/dt + (1/eps)(k^n - g(n*dt)) = 0.
        const double g_n = g(spec.time.time(step - 1));
        for (double& v : k) v = penalty_step(v, g_n, eps, dt);
      },
      /*record_boundary=*/true);
  traj.penalty_warning = penalty_step_warns(eps, dt);
  return traj;
}

}  // namespace heatpen
