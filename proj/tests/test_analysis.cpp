#include <doctest.h>

#include "heatpen/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

using namespace heatpen;

namespace {

ProblemSpec oned(int n_cells, int steps, BoundaryMode mode) {
  ProblemSpec s;
  s.domain = Interval1D(n_cells);
  s.nu = 0.2;
  s.u0 = space_function("paper_1d_u0");
  s.time = TimeGrid(steps);
  s.mode = mode;
  return s;
}

}  // namespace

TEST_CASE("comparative_error") {
  SUBCASE("a trajectory against itself is identically zero") {
    const Trajectory t = solve(oned(16, 200, BoundaryMode::direct()));
    const ErrorCurve curve = comparative_error(t, t);
    REQUIRE(!curve.times.empty());
    for (double e : curve.max_error) CHECK(e == 0.0);
  }
  SUBCASE("constructed constant offset") {
    Trajectory coarse = solve(oned(8, 100, BoundaryMode::direct()));
    Trajectory fine = solve(oned(16, 400, BoundaryMode::direct()));
    for (auto& f : coarse.snapshots) std::fill(f.values.begin(), f.values.end(), 0.0);
    for (auto& f : fine.snapshots) std::fill(f.values.begin(), f.values.end(), 0.25);
    const ErrorCurve curve = comparative_error(coarse, fine);
    for (double e : curve.max_error) CHECK(e == doctest::Approx(0.25));
  }
  SUBCASE("coincidence with the default mesh pair stride") {
    // coarse 1/24 @ 1000 steps vs fine 1/48 @ 4000 steps: every coarse
    // snapshot matches a fine step (ratio 4)
    SolveOptions copt, fopt;
    copt.snapshot_steps = std::vector<int>{0, 1, 500, 1000};
    fopt.snapshot_steps = std::vector<int>{0, 4, 2000, 4000};
    const Trajectory tc = solve(oned(24, 1000, BoundaryMode::direct()), copt);
    const Trajectory tf = solve(oned(48, 4000, BoundaryMode::direct()), fopt);
    const ErrorCurve curve = comparative_error(tc, tf);
    CHECK(curve.times.size() == 4);
    CHECK(curve.max_error[0] == 0.0);  // identical sampled u0 on nested nodes
    CHECK(curve.initial_step_error() == curve.max_error[1]);
    CHECK(curve.final_step_error() == curve.max_error[3]);
  }
  SUBCASE("non-nesting meshes are rejected with the ratios named") {
    const Trajectory a = solve(oned(10, 100, BoundaryMode::direct()));
    const Trajectory b = solve(oned(15, 200, BoundaryMode::direct()));
    CHECK_THROWS_WITH_AS(comparative_error(a, b), doctest::Contains("nest"),
                         std::invalid_argument);
  }
  SUBCASE("symmetry after restriction") {
    const Trajectory a = solve(oned(12, 100, BoundaryMode::direct()));
    const Trajectory b = solve(oned(12, 100, BoundaryMode::penalty(0.1)));
    const ErrorCurve ab = comparative_error(a, b);
    const ErrorCurve ba = comparative_error(b, a);
    REQUIRE(ab.max_error.size() == ba.max_error.size());
    for (std::size_t i = 0; i < ab.max_error.size(); ++i)
      CHECK(ab.max_error[i] == ba.max_error[i]);
  }
}

TEST_CASE("fit_rate") {
  SUBCASE("constructed second-order data") {
    const RateFit fit = fit_rate({{0.1, 1e-2}, {0.05, 2.5e-3}, {0.025, 6.25e-4}});
    CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fit.residual < 1e-12);
  }
  SUBCASE("constant errors give slope zero") {
    const RateFit fit = fit_rate({{0.1, 3.0}, {0.05, 3.0}, {0.025, 3.0}});
    CHECK(fit.slope == doctest::Approx(0.0));
  }
  SUBCASE("slope is invariant under uniform scaling of the errors") {
    const std::vector<std::pair<double, double>> pts{
        {0.2, 4e-3}, {0.1, 1.1e-3}, {0.05, 2.4e-4}, {0.025, 7e-5}};
    std::vector<std::pair<double, double>> scaled = pts;
    for (auto& [h, e] : scaled) e *= 137.0;
    CHECK(fit_rate(pts).slope == doctest::Approx(fit_rate(scaled).slope).epsilon(1e-12));
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(fit_rate({{0.1, 1.0}, {0.05, 0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(fit_rate({{0.1, 1.0}, {0.05, 0.0}, {0.025, 0.2}}),
                    std::invalid_argument);
  }
}

TEST_CASE("a finer penalty mesh pair has a smaller peak error") {
  auto peak = [](int cn, int cs, int fn, int fs) {
    ProblemSpec coarse, fine;
    coarse.domain = SquareGrid(cn, cn);
    fine.domain = SquareGrid(fn, fn);
    for (ProblemSpec* s : {&coarse, &fine}) {
      s->nu = 0.2;
      s->u0 = space_function("paper_square_u0");
      s->mode = BoundaryMode::penalty(0.1);
    }
    coarse.time = TimeGrid(cs);
    fine.time = TimeGrid(fs);
    SolveOptions copt, fopt;
    copt.snapshot_steps = default_snapshot_steps(cs);
    fopt.snapshot_steps = scaled_snapshot_steps(*copt.snapshot_steps, fs / cs);
    return comparative_error(solve(coarse, copt), solve(fine, fopt)).peak();
  };
  const double coarse_pair = peak(24, 1000, 48, 4000);
  const double fine_pair = peak(48, 4000, 96, 16000);
  // second-order decay gives ~75% here; the qualitative claim is that the
  // finer pair improves substantially
  CHECK(fine_pair < coarse_pair * 0.75);
}

TEST_CASE("epsilon_sweep") {
  const ProblemSpec coarse = oned(12, 250, BoundaryMode::penalty(0.1));
  const ProblemSpec fine = oned(24, 1000, BoundaryMode::penalty(0.1));

  SUBCASE("rows are sorted ascending and deterministic") {
    const auto rows = epsilon_sweep(coarse, fine, {0.5, 0.05, 0.1});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].epsilon == 0.05);
    CHECK(rows[1].epsilon == 0.1);
    CHECK(rows[2].epsilon == 0.5);
    const auto again = epsilon_sweep(coarse, fine, {0.5, 0.05, 0.1});
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].initial_error == again[i].initial_error);
      CHECK(rows[i].final_error == again[i].final_error);
    }
  }
  SUBCASE("a too-small epsilon is flagged by the step warning") {
    // coarse dt = 1/250; eps strictly below it trips dt/eps > 1 without
    // destabilizing the relaxation (dt/eps < 2)
    const auto rows = epsilon_sweep(coarse, fine, {1.0 / 350.0, 0.1});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].warning);
    CHECK_FALSE(rows[1].warning);
  }
}
