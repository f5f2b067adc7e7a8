#include "heatpen/experiments.hpp"

#include "heatpen/analysis.hpp"
#include "heatpen/csv.hpp"
#include "heatpen/penalty.hpp"
#include "heatpen/solver.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace heatpen {

namespace {

namespace fs = std::filesystem;

ProblemSpec base_spec(const RunConfig& c, BoundaryMode mode) {
  ProblemSpec s;
  s.nu = c.nu;
  s.f = forcing(c.f);
  s.g = time_signal(c.g);
  s.mode = mode;
  return s;
}

std::vector<BoundaryMode> modes_for(const RunConfig& c, bool allow_corrector) {
  if (c.mode == "direct") return {BoundaryMode::direct()};
  if (c.mode == "penalty") return {BoundaryMode::penalty(c.epsilon)};
  if (c.mode == "corrector") {
    if (!allow_corrector)
      throw ConfigError(0, "mode 'corrector' is only available for the 1D experiment");
    return {BoundaryMode::corrector(c.procedure)};
  }
  std::vector<BoundaryMode> all{BoundaryMode::direct(), BoundaryMode::penalty(c.epsilon)};
  if (allow_corrector) {
    all.push_back(BoundaryMode::corrector(1));
    all.push_back(BoundaryMode::corrector(2));
  }
  return all;
}

std::string mode_label(const BoundaryMode& m) {
  if (m.kind == BoundaryModeKind::Corrector)
    return "corrector" + std::to_string(m.procedure);
  return to_string(m.kind);
}

std::string format_compact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

int nearest_step(double t, const TimeGrid& grid) {
  const int n = static_cast<int>(std::lround(t / grid.dt()));
  return std::clamp(n, 0, grid.n_steps);
}

// Snapshot plan for a nested pair: the coarse run records its default stride
// plus step 1 (the first post-zero comparison time) and any extra steps; the
// fine run records the same physical times.
std::pair<SolveOptions, SolveOptions> pair_options(const TimeGrid& coarse,
                                                   const TimeGrid& fine,
                                                   std::vector<int> extra_coarse = {}) {
  if (fine.n_steps % coarse.n_steps != 0)
    throw std::invalid_argument("mesh pair: fine steps must be a multiple of coarse steps");
  const int ratio = fine.n_steps / coarse.n_steps;
  std::vector<int> steps = default_snapshot_steps(coarse.n_steps);
  steps.push_back(1);
  steps.insert(steps.end(), extra_coarse.begin(), extra_coarse.end());
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  SolveOptions co, fo;
  co.snapshot_steps = steps;
  fo.snapshot_steps = scaled_snapshot_steps(steps, ratio);
  return {co, fo};
}

std::string write_error_curve(const ErrorCurve& curve, const fs::path& path) {
  CsvTable t({"t", "max_error"});
  for (std::size_t i = 0; i < curve.times.size(); ++i)
    t.add_row({curve.times[i], curve.max_error[i]});
  t.write(path);
  return path.string();
}

std::string write_sweep(const std::vector<SweepRow>& rows, const fs::path& path) {
  CsvTable t({"epsilon", "initial_error", "final_error", "warning"});
  for (const auto& r : rows)
    t.add_row({r.epsilon, r.initial_error, r.final_error, r.warning ? 1.0 : 0.0});
  t.write(path);
  return path.string();
}

std::string write_rate(const RateFit& fit, const fs::path& path) {
  CsvTable t({"h", "error", "slope"});
  for (std::size_t i = 0; i < fit.h.size(); ++i)
    t.add_row({fit.h[i], fit.error[i], fit.slope});
  t.write(path);
  return path.string();
}

std::string write_field_square(const SquareGrid& g, const ScalarField& f,
                               const fs::path& path) {
  CsvTable t({"x", "y", "u"});
  for (int j = 0; j <= g.ny; ++j)
    for (int i = 0; i <= g.nx; ++i)
      t.add_row({g.x(i), g.y(j), f[static_cast<std::size_t>(g.index(i, j))]});
  t.write(path);
  return path.string();
}

std::string write_field_polar(const PolarGrid& g, const ScalarField& f,
                              const fs::path& path) {
  CsvTable t({"r", "theta", "u"});
  t.add_row({0.0, 0.0, f[0]});
  for (int i = 1; i <= g.nr; ++i)
    for (int k = 0; k < g.ntheta; ++k)
      t.add_row({g.r(i), g.theta(k), f[static_cast<std::size_t>(g.index(i, k))]});
  t.write(path);
  return path.string();
}

std::string write_profile(const std::vector<double>& xs, const std::vector<double>& us,
                          const fs::path& path) {
  CsvTable t({"x", "u"});
  for (std::size_t i = 0; i < xs.size(); ++i) t.add_row({xs[i], us[i]});
  t.write(path);
  return path.string();
}

const std::vector<double> kFieldTimes{0.0, 0.5, 1.0};
const std::vector<double> kSectionTimes{0.0, 0.004, 0.008, 0.02, 0.04, 0.08};

// Smallest step count with lambda <= 0.4 for the given spec's mesh.
int stable_steps(ProblemSpec proto) {
  proto.time = TimeGrid(1, proto.time.t_end);
  const double lambda1 = cfl_check(proto).lambda;
  return std::max(1, static_cast<int>(std::ceil(lambda1 / 0.4)));
}

// Four nested refinement levels around the configured coarse mesh, with
// steps growing 4x per level (lambda constant down the family). Each
// consecutive pair gives one rate point: the comparative-error peak over the
// initial period t in (0, 0.1] and the final-time value. The time grids are
// self-similar, so the unresolved direct-mode corner transient produces the
// same peak at every level while smooth error components scale with h^2.
struct RateStudy {
  RateFit initial;
  RateFit final_;
};

double initial_period_peak(const ErrorCurve& curve, double t_hi = 0.1) {
  double m = 0.0;
  for (std::size_t i = 0; i < curve.times.size(); ++i)
    if (curve.times[i] > 0.0 && curve.times[i] <= t_hi)
      m = std::max(m, curve.max_error[i]);
  return m;
}

RateStudy rate_study(const std::vector<ProblemSpec>& levels,
                     const std::vector<double>& hs) {
  std::vector<Trajectory> runs;
  runs.reserve(levels.size());
  for (std::size_t l = 0; l < levels.size(); ++l) {
    // Each run serves as the coarse member of one pair and the fine member
    // of the next, so record both roles' snapshot steps.
    std::vector<int> steps = default_snapshot_steps(levels[l].time.n_steps);
    steps.push_back(1);
    if (l > 0) {
      std::vector<int> as_fine = default_snapshot_steps(levels[l - 1].time.n_steps);
      as_fine.push_back(1);
      for (int s : scaled_snapshot_steps(as_fine, 4)) steps.push_back(s);
    }
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    SolveOptions opt;
    opt.snapshot_steps = std::move(steps);
    runs.push_back(solve(levels[l], opt));
  }
  std::vector<std::pair<double, double>> pi, pf;
  for (std::size_t l = 0; l + 1 < runs.size(); ++l) {
    const ErrorCurve curve = comparative_error(runs[l], runs[l + 1]);
    pi.emplace_back(hs[l], initial_period_peak(curve));
    pf.emplace_back(hs[l], curve.final_step_error());
  }
  return {fit_rate(pi), fit_rate(pf)};
}

}  // namespace

ProblemSpec square_spec(const RunConfig& c, bool fine, BoundaryMode mode) {
  ProblemSpec s = base_spec(c, mode);
  s.domain = SquareGrid(fine ? c.fine_nx : c.nx, fine ? c.fine_ny : c.ny);
  s.u0 = space_function(c.u0.empty() ? "paper_square_u0" : c.u0);
  s.time = TimeGrid(fine ? c.fine_steps : c.steps, c.t_end);
  return s;
}

ProblemSpec disk_spec(const RunConfig& c, bool fine, BoundaryMode mode) {
  ProblemSpec s = base_spec(c, mode);
  s.domain = PolarGrid(fine ? c.fine_nr : c.nr, fine ? c.fine_ntheta : c.ntheta);
  s.u0 = space_function(c.u0.empty() ? "xy" : c.u0);
  s.time = TimeGrid(fine ? c.fine_steps : c.steps, c.t_end);
  return s;
}

ProblemSpec oned_spec(const RunConfig& c, bool fine, BoundaryMode mode) {
  ProblemSpec s = base_spec(c, mode);
  s.domain = Interval1D(fine ? c.fine_nx : c.nx);
  s.u0 = space_function(c.u0.empty() ? "paper_1d_u0" : c.u0);
  s.time = TimeGrid(fine ? c.fine_steps : c.steps, c.t_end);
  return s;
}

std::vector<std::string> cmd_boundary_layer(const RunConfig& c) {
  c.validate();
  const fs::path out = c.out_dir;
  const SpaceFunction u0 = space_function(c.u0.empty() ? "paper_square_u0" : c.u0);
  const TimeSignal g = time_signal(c.g);
  const double k0 = u0.value(c.point_x, c.point_y);
  const TimeGrid grid(c.steps, c.t_end);

  std::vector<std::string> files;
  CsvTable remainders({"epsilon", "order", "l2_norm", "sup_norm"});
  for (double eps : c.epsilons) {
    const PenaltyParams params{eps, k0, g};
    CsvTable trace({"t", "g", "k_eps", "approx_n0", "approx_n1"});
    for (int n = 0; n <= grid.n_steps; ++n) {
      const double t = grid.time(n);
      trace.add_row({t, g(t), penalty_exact(params, t),
                     asymptotic_approx(0, params, t), asymptotic_approx(1, params, t)});
    }
    const fs::path trace_path =
        out / ("boundary_layer_trace_eps" + format_compact(eps) + ".csv");
    trace.write(trace_path);
    files.push_back(trace_path.string());

    for (int order : {0, 1}) {
      const RemainderReport rep = remainder_norms(order, params, grid);
      remainders.add_row({rep.epsilon, static_cast<double>(rep.order), rep.l2_norm,
                          rep.sup_norm});
    }
  }
  const fs::path rem_path = out / "boundary_layer_remainders.csv";
  remainders.write(rem_path);
  files.push_back(rem_path.string());
  return files;
}

namespace {

// Shared body of the square and disk experiments: mesh-pair error curves,
// field snapshots, a near-t=0 section, and refinement-rate files.
struct PairExperiment {
  std::string prefix;
  std::function<ProblemSpec(bool, BoundaryMode)> make_spec;
  std::function<std::string(const ProblemSpec&, const ScalarField&, const fs::path&)>
      write_field;
  std::function<std::string(const ProblemSpec&, const ScalarField&, const fs::path&)>
      write_section;
  std::function<std::vector<ProblemSpec>(BoundaryMode)> rate_levels;
  std::vector<double> rate_h;
};

std::vector<std::string> run_pair_experiment(const RunConfig& c,
                                             const PairExperiment& ex,
                                             bool with_sweep) {
  c.validate();
  const fs::path out = c.out_dir;
  std::vector<std::string> files;

  for (const BoundaryMode& mode : modes_for(c, /*allow_corrector=*/false)) {
    const ProblemSpec coarse = ex.make_spec(false, mode);
    const ProblemSpec fine = ex.make_spec(true, mode);

    std::vector<int> extra;
    for (double t : kFieldTimes) extra.push_back(nearest_step(t, coarse.time));
    for (double t : kSectionTimes) extra.push_back(nearest_step(t, coarse.time));
    auto [copt, fopt] = pair_options(coarse.time, fine.time, extra);

    const Trajectory tc = solve(coarse, copt);
    const Trajectory tf = solve(fine, fopt);
    const std::string label = mode_label(mode);

    files.push_back(write_error_curve(comparative_error(tc, tf),
                                      out / (ex.prefix + "_error_" + label + ".csv")));

    for (double t : kFieldTimes) {
      const int step = nearest_step(t, coarse.time);
      const fs::path p = out / (ex.prefix + "_field_" + label + "_t" +
                                format_compact(coarse.time.time(step)) + ".csv");
      files.push_back(ex.write_field(coarse, tc.at_step(step), p));
    }
    if (mode.kind == BoundaryModeKind::Direct) {
      for (double t : kSectionTimes) {
        const int step = nearest_step(t, coarse.time);
        const fs::path p = out / (ex.prefix + "_section_t" +
                                  format_compact(coarse.time.time(step)) + ".csv");
        files.push_back(ex.write_section(coarse, tc.at_step(step), p));
      }
    }

    const RateStudy study = rate_study(ex.rate_levels(mode), ex.rate_h);
    files.push_back(
        write_rate(study.initial, out / (ex.prefix + "_rate_" + label + "_initial.csv")));
    files.push_back(
        write_rate(study.final_, out / (ex.prefix + "_rate_" + label + "_final.csv")));
  }

  if (with_sweep) {
    const auto rows = epsilon_sweep(ex.make_spec(false, BoundaryMode::penalty(c.epsilon)),
                                    ex.make_spec(true, BoundaryMode::penalty(c.epsilon)),
                                    c.epsilons);
    files.push_back(write_sweep(rows, out / (ex.prefix + "_sweep.csv")));
  }
  return files;
}

}  // namespace

std::vector<std::string> cmd_square(const RunConfig& c) {
  if (c.nx % 4 != 0 || c.ny % 4 != 0 || c.nx < 8 || c.ny < 8)
    throw ConfigError(0, "square refinement study needs nx, ny divisible by 4 (>= 8)");

  PairExperiment ex;
  ex.prefix = "square";
  ex.make_spec = [&c](bool fine, BoundaryMode m) { return square_spec(c, fine, m); };
  ex.write_field = [](const ProblemSpec& s, const ScalarField& f, const fs::path& p) {
    return write_field_square(std::get<SquareGrid>(s.domain), f, p);
  };
  ex.write_section = [&c](const ProblemSpec& s, const ScalarField& f, const fs::path& p) {
    const auto& g = std::get<SquareGrid>(s.domain);
    const int j = std::clamp(static_cast<int>(std::lround(c.section_y * g.ny)), 0, g.ny);
    std::vector<double> xs, us;
    for (int i = 0; i <= g.nx; ++i) {
      xs.push_back(g.x(i));
      us.push_back(f[static_cast<std::size_t>(g.index(i, j))]);
    }
    return write_profile(xs, us, p);
  };
  ex.rate_levels = [&c](BoundaryMode m) {
    std::vector<ProblemSpec> levels;
    ProblemSpec proto = square_spec(c, false, m);
    proto.domain = SquareGrid(c.nx / 4, c.ny / 4);
    int steps = stable_steps(proto);
    for (int l = 0; l < 4; ++l) {
      ProblemSpec s = proto;
      s.domain = SquareGrid((c.nx / 4) << l, (c.ny / 4) << l);
      s.time = TimeGrid(steps, c.t_end);
      levels.push_back(std::move(s));
      steps *= 4;
    }
    return levels;
  };
  ex.rate_h = {4.0 / c.nx, 2.0 / c.nx, 1.0 / c.nx};
  return run_pair_experiment(c, ex, /*with_sweep=*/false);
}

std::vector<std::string> cmd_disk(const RunConfig& c) {
  if (c.nr % 2 != 0 || c.nr < 4)
    throw ConfigError(0, "disk refinement study needs nr divisible by 2 (>= 4)");

  PairExperiment ex;
  ex.prefix = "disk";
  ex.make_spec = [&c](bool fine, BoundaryMode m) { return disk_spec(c, fine, m); };
  ex.write_field = [](const ProblemSpec& s, const ScalarField& f, const fs::path& p) {
    return write_field_polar(std::get<PolarGrid>(s.domain), f, p);
  };
  ex.write_section = [&c](const ProblemSpec& s, const ScalarField& f, const fs::path& p) {
    const auto& g = std::get<PolarGrid>(s.domain);
    const int k = static_cast<int>(std::lround(c.section_theta / g.dtheta())) % g.ntheta;
    std::vector<double> xs, us;
    xs.push_back(0.0);
    us.push_back(f[0]);
    for (int i = 1; i <= g.nr; ++i) {
      xs.push_back(g.r(i));
      us.push_back(f[static_cast<std::size_t>(g.index(i, k))]);
    }
    return write_profile(xs, us, p);
  };
  // Refine r only; theta stays at the configured count so the theta
  // discretization cancels in the comparative errors.
  ex.rate_levels = [&c](BoundaryMode m) {
    std::vector<ProblemSpec> levels;
    ProblemSpec proto = disk_spec(c, false, m);
    proto.domain = PolarGrid(c.nr / 2, c.ntheta);
    int steps = stable_steps(proto);
    for (int l = 0; l < 4; ++l) {
      ProblemSpec s = proto;
      s.domain = PolarGrid((c.nr / 2) << l, c.ntheta);
      s.time = TimeGrid(steps, c.t_end);
      levels.push_back(std::move(s));
      steps *= 4;
    }
    return levels;
  };
  ex.rate_h = {2.0 / c.nr, 1.0 / c.nr, 0.5 / c.nr};
  return run_pair_experiment(c, ex, /*with_sweep=*/true);
}

std::vector<std::string> cmd_1d(const RunConfig& c) {
  c.validate();
  const fs::path out = c.out_dir;
  std::vector<std::string> files;
  std::vector<std::pair<std::string, double>> peaks;

  for (const BoundaryMode& mode : modes_for(c, /*allow_corrector=*/true)) {
    const ProblemSpec coarse = oned_spec(c, false, mode);
    const ProblemSpec fine = oned_spec(c, true, mode);
    auto [copt, fopt] = pair_options(coarse.time, fine.time);
    const ErrorCurve curve = comparative_error(solve(coarse, copt), solve(fine, fopt));
    const std::string label = mode_label(mode);
    files.push_back(
        write_error_curve(curve, out / ("oned_error_" + label + ".csv")));
    peaks.emplace_back(label, curve.peak());
  }

  {
    const fs::path p = out / "oned_peaks.csv";
    fs::create_directories(out);
    std::ofstream f(p, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + p.string() + "' for writing");
    f << "mode,peak_error\n";
    for (const auto& [label, peak] : peaks)
      f << label << ',' << format_number(peak) << '\n';
    files.push_back(p.string());
  }

  const auto rows = epsilon_sweep(oned_spec(c, false, BoundaryMode::penalty(c.epsilon)),
                                  oned_spec(c, true, BoundaryMode::penalty(c.epsilon)),
                                  c.epsilons);
  files.push_back(write_sweep(rows, out / "oned_sweep.csv"));
  return files;
}

std::vector<std::string> cmd_sweep_epsilon(const RunConfig& c) {
  c.validate();
  const fs::path out = c.out_dir;
  const BoundaryMode m = BoundaryMode::penalty(c.epsilon);
  ProblemSpec coarse, fine;
  if (c.base == "square") {
    coarse = square_spec(c, false, m);
    fine = square_spec(c, true, m);
  } else if (c.base == "disk") {
    coarse = disk_spec(c, false, m);
    fine = disk_spec(c, true, m);
  } else {
    coarse = oned_spec(c, false, m);
    fine = oned_spec(c, true, m);
  }
  const auto rows = epsilon_sweep(coarse, fine, c.epsilons);
  return {write_sweep(rows, out / ("sweep_" + c.base + ".csv"))};
}

std::vector<std::string> run_experiment(const RunConfig& c) {
  switch (c.experiment) {
    case Experiment::BoundaryLayer: return cmd_boundary_layer(c);
    case Experiment::Square: return cmd_square(c);
    case Experiment::Disk: return cmd_disk(c);
    case Experiment::OneD: return cmd_1d(c);
    case Experiment::SweepEpsilon: return cmd_sweep_epsilon(c);
  }
  throw std::logic_error("run_experiment: bad experiment");
}

}  // namespace heatpen
