#include "heatpen/analysis.hpp"

#include "heatpen/penalty.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace heatpen {

namespace {

int refinement_ratio(int coarse, int fine, const char* what) {
  if (coarse <= 0 || fine <= 0 || fine % coarse != 0)
    throw std::invalid_argument(std::string("comparative_error: ") + what +
                                " does not nest (coarse " + std::to_string(coarse) +
                                ", fine " + std::to_string(fine) + ")");
  return fine / coarse;
}

// Maps each coarse node to the matching fine node.
std::vector<int> node_map(const Domain& coarse, const Domain& fine) {
  if (coarse.index() != fine.index())
    throw std::invalid_argument("comparative_error: domains differ in kind");
  std::vector<int> map;
  if (const auto* gc = std::get_if<Interval1D>(&coarse)) {
    const auto& gf = std::get<Interval1D>(fine);
    const int r = refinement_ratio(gc->n_cells, gf.n_cells, "n_cells");
    map.reserve(static_cast<std::size_t>(gc->node_count()));
    for (int i = 0; i <= gc->n_cells; ++i) map.push_back(i * r);
  } else if (const auto* gc2 = std::get_if<SquareGrid>(&coarse)) {
    const auto& gf = std::get<SquareGrid>(fine);
    const int rx = refinement_ratio(gc2->nx, gf.nx, "nx");
    const int ry = refinement_ratio(gc2->ny, gf.ny, "ny");
    map.reserve(static_cast<std::size_t>(gc2->node_count()));
    for (int j = 0; j <= gc2->ny; ++j)
      for (int i = 0; i <= gc2->nx; ++i) map.push_back(gf.index(i * rx, j * ry));
  } else {
    const auto& gc3 = std::get<PolarGrid>(coarse);
    const auto& gf = std::get<PolarGrid>(fine);
    const int rr = refinement_ratio(gc3.nr, gf.nr, "nr");
    const int rt = refinement_ratio(gc3.ntheta, gf.ntheta, "ntheta");
    map.reserve(static_cast<std::size_t>(gc3.node_count()));
    map.push_back(0);
    for (int i = 1; i <= gc3.nr; ++i)
      for (int k = 0; k < gc3.ntheta; ++k) map.push_back(gf.index(i * rr, k * rt));
  }
  return map;
}

}  // namespace

double ErrorCurve::peak() const {
  double p = 0.0;
  for (double e : max_error) p = std::max(p, e);
  return p;
}

double ErrorCurve::initial_step_error() const {
  for (std::size_t i = 0; i < times.size(); ++i)
    if (times[i] > 0.0) return max_error[i];
  throw std::out_of_range("ErrorCurve: no sample after t = 0");
}

double ErrorCurve::final_step_error() const {
  if (max_error.empty()) throw std::out_of_range("ErrorCurve: empty");
  return max_error.back();
}

ErrorCurve comparative_error(const Trajectory& coarse, const Trajectory& fine) {
  if (coarse.spec.time.t_end != fine.spec.time.t_end)
    throw std::invalid_argument("comparative_error: time horizons differ");
  const int rt = refinement_ratio(coarse.spec.time.n_steps, fine.spec.time.n_steps,
                                  "n_steps");
  const auto map = node_map(coarse.spec.domain, fine.spec.domain);

  ErrorCurve curve;
  curve.mode = to_string(coarse.spec.mode.kind);
  curve.coarse_spec = coarse.spec;
  curve.fine_spec = fine.spec;
  for (std::size_t s = 0; s < coarse.snapshot_steps.size(); ++s) {
    const int fine_step = coarse.snapshot_steps[s] * rt;
    const int fidx = fine.snapshot_index_of(fine_step);
    if (fidx < 0) continue;
    const ScalarField& fc = coarse.snapshots[s];
    const ScalarField& ff = fine.snapshots[static_cast<std::size_t>(fidx)];
    double err = 0.0;
    for (std::size_t i = 0; i < map.size(); ++i)
      err = std::max(err, std::abs(fc[i] - ff[static_cast<std::size_t>(map[i])]));
    curve.times.push_back(coarse.snapshot_time(static_cast<int>(s)));
    curve.max_error.push_back(err);
  }
  return curve;
}

RateFit fit_rate(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3)
    throw std::invalid_argument("fit_rate: need at least 3 points");
  RateFit fit;
  std::vector<double> lx, ly;
  for (const auto& [h, e] : points) {
    if (!(h > 0.0)) throw std::invalid_argument("fit_rate: h must be > 0");
    if (!(e > 0.0)) throw std::invalid_argument("fit_rate: errors must be > 0");
    fit.h.push_back(h);
    fit.error.push_back(e);
    lx.push_back(std::log(h));
    ly.push_back(std::log(e));
  }
  const std::size_t m = lx.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_rate: all h values equal");
  fit.slope = sxy / sxx;
  const double intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = ly[i] - (fit.slope * lx[i] + intercept);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / static_cast<double>(m));
  return fit;
}

std::vector<SweepRow> epsilon_sweep(const ProblemSpec& coarse_base,
                                    const ProblemSpec& fine_base,
                                    std::vector<double> epsilons) {
  std::sort(epsilons.begin(), epsilons.end());
  std::vector<SweepRow> rows;
  rows.reserve(epsilons.size());

  const int ratio = refinement_ratio(coarse_base.time.n_steps,
                                     fine_base.time.n_steps, "n_steps");
  SolveOptions coarse_opt, fine_opt;
  std::vector<int> steps = default_snapshot_steps(coarse_base.time.n_steps);
  steps.push_back(1);  // the "initial step" sample at t = dt_coarse
  coarse_opt.snapshot_steps = steps;
  fine_opt.snapshot_steps = scaled_snapshot_steps(steps, ratio);

  for (double eps : epsilons) {
    ProblemSpec coarse = coarse_base;
    ProblemSpec fine = fine_base;
    coarse.mode = BoundaryMode::penalty(eps);
    fine.mode = BoundaryMode::penalty(eps);
    const Trajectory tc = solve(coarse, coarse_opt);
    const Trajectory tf = solve(fine, fine_opt);
    const ErrorCurve curve = comparative_error(tc, tf);
    rows.push_back({eps, curve.initial_step_error(), curve.final_step_error(),
                    tc.penalty_warning || tf.penalty_warning});
  }
  return rows;
}

}  // namespace heatpen
