#include <doctest.h>

#include "heatpen/analysis.hpp"
#include "heatpen/corrector.hpp"
#include "heatpen/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace heatpen;

namespace {

constexpr double kPi = std::numbers::pi;

// Series/continued-fraction complementary error function, independent of
// std::erfc. Taylor series of erf for small arguments, Lentz continued
// fraction for the tail.
double erfc_oracle(double z) {
  if (z < 0.0) return 2.0 - erfc_oracle(-z);
  if (z < 2.5) {
    double term = z;
    double sum = z;
    for (int n = 1; n < 200; ++n) {
      term *= -z * z / n;
      sum += term / (2 * n + 1);
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return 1.0 - 2.0 / std::sqrt(kPi) * sum;
  }
  // erfc(z) = e^{-z^2}/sqrt(pi) * 1/(z + 1/2/(z + 2/2/(z + 3/2/(z + ...))))
  double frac = 0.0;
  for (int n = 60; n >= 1; --n) frac = 0.5 * n / (z + frac);
  return std::exp(-z * z) / std::sqrt(kPi) / (z + frac);
}

ProblemSpec default_1d_problem(int n_cells, int steps, BoundaryMode mode) {
  ProblemSpec s;
  s.domain = Interval1D(n_cells);
  s.nu = 0.2;
  s.u0 = space_function("paper_1d_u0");
  s.time = TimeGrid(steps);
  s.mode = mode;
  return s;
}

}  // namespace

TEST_CASE("s0 values") {
  CHECK(s0(0.0, 0.3, 0.2) == 1.0);
  CHECK(s0(0.0, 1e-9, 0.2) == 1.0);

  // erfc(1) from the independent series oracle, frozen: 0.15729920705...
  const double z1 = erfc_oracle(1.0);
  CHECK(z1 == doctest::Approx(0.1572992070502851).epsilon(1e-12));
  // x/(2*sqrt(nu*t)) = 1 at x = 0.4, nu = 0.2, t = 0.2
  CHECK(s0(0.4, 0.2, 0.2) == doctest::Approx(z1).epsilon(1e-12));

  CHECK(s0(10.0, 0.01, 0.2) < 1e-100);
  CHECK(s0(0.5, 0.0, 0.2) == 0.0);  // pointwise limit at t = 0
  CHECK(s0(0.0, 0.0, 0.2) == 1.0);
}

TEST_CASE("s0 equals the displayed heat-kernel integral") {
  // (1/sqrt(pi*nu*t)) Int_x^inf e^{-s^2/(4 nu t)} ds, truncated far into the tail
  for (double x : {0.0, 0.1, 0.5, 1.0}) {
    for (double t : {0.05, 0.4, 1.0}) {
      const double nu = 0.2;
      const double width = std::sqrt(4.0 * nu * t);
      const double upper = x + 14.0 * width;
      const double integral = integrate(
          [nu, t](double s) { return std::exp(-s * s / (4.0 * nu * t)); }, x, upper,
          1e-12);
      const double reference = integral / std::sqrt(kPi * nu * t);
      CHECK(s0(x, t, nu) == doctest::Approx(reference).epsilon(1e-10));
    }
  }
}

TEST_CASE("std::erfc agrees with the series oracle") {
  for (double z = 0.0; z <= 6.0; z += 0.37)
    CHECK(std::erfc(z) == doctest::Approx(erfc_oracle(z)).epsilon(1e-13));
}

TEST_CASE("s1 values and the closed-form cross-check") {
  CHECK(s1(0.0, 0.7, 0.2) == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(s1(0.3, 0.0, 0.2) == 0.0);
  CHECK(s1(0.2, 0.5, 0.2) == doctest::Approx(s1_closed(0.2, 0.5, 0.2)).epsilon(1e-8));

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> ux(0.0, 1.0);
  std::uniform_real_distribution<double> ut(1e-3, 1.0);
  for (int i = 0; i < 50; ++i) {
    const double x = ux(rng);
    const double t = ut(rng);
    const double a = s1(x, t, 0.2);
    const double b = s1_closed(x, t, 0.2);
    CHECK(std::abs(a - b) <= 1e-8 * std::max(1.0, std::abs(b)));
  }
}

TEST_CASE("corrector coefficients for the default 1D data") {
  ProblemSpec s = default_1d_problem(24, 1000, BoundaryMode::corrector(2));
  const CorrectorSpec c = make_corrector_spec(s);
  // alpha0 = g(0) - u0(0) = -sin(3*pi/4) = -sqrt(2)/2
  CHECK(c.alpha0_left == doctest::Approx(-std::sqrt(2.0) / 2.0).epsilon(1e-14));
  // right endpoint is compatible: u0(1) = sin(2*pi) = 0 = g(0)
  CHECK(std::abs(c.alpha0_right) < 1e-14);
  CHECK(std::abs(c.alpha1_right) < 1e-12);
  // alpha1 = g'(0) - nu*u0''(0) = 0.2*(5*pi/4)^2*sin(3*pi/4)
  const double a = 1.25 * kPi;
  CHECK(c.alpha1_left == doctest::Approx(0.2 * a * a * std::sin(0.75 * kPi)));

  SUBCASE("procedure 0 is identically zero") {
    ProblemSpec p0 = default_1d_problem(24, 1000, BoundaryMode::corrector(0));
    const Corrector S = build_corrector(make_corrector_spec(p0));
    CHECK(S(0.3, 0.5) == 0.0);
    CHECK(S(0.0, 1.0) == 0.0);
  }
  SUBCASE("procedure 2 requires a second derivative of u0") {
    s.u0.second_x = nullptr;
    CHECK_THROWS_AS(make_corrector_spec(s), std::domain_error);
  }
}

TEST_CASE("corrected boundary data absorbs the corner mismatch") {
  ProblemSpec s = default_1d_problem(24, 1000, BoundaryMode::corrector(1));
  const Corrector S = build_corrector(make_corrector_spec(s));
  // v(0, t) = g(t) - S(0, t) = 0 - alpha0 = +sqrt(2)/2 for all t > 0
  for (double t : {0.001, 0.1, 1.0})
    CHECK(s.g(t) - S(0.0, t) == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-14));
  // which is exactly u0(0): the 0th incompatibility is gone
  CHECK(s.u0.value(0.0, 0.0) == doctest::Approx(std::sqrt(2.0) / 2.0));
}

TEST_CASE("S of procedure 1 satisfies the heat equation away from the corner") {
  CorrectorSpec c;
  c.procedure = 1;
  c.nu = 0.2;
  c.alpha0_left = -0.7;
  const Corrector S = build_corrector(c);
  // Sampled on a fixed region away from the space-time corner (x >= 2*dx
  // and t >= 2*dt hold with room to spare); S0's higher derivatives
  // are unbounded as the corner is approached, so the constant in the
  // O(dx^2 + dt^2) residual bound is only uniform away from it.
  auto residual = [&](double h, double dt) {
    double worst = 0.0;
    for (double x = 0.1; x < 0.6; x += 0.05)
      for (double t = 0.1; t < 0.6; t += 0.05) {
        const double st = (S(x, t + dt) - S(x, t - dt)) / (2.0 * dt);
        const double sxx = (S(x + h, t) - 2.0 * S(x, t) + S(x - h, t)) / (h * h);
        worst = std::max(worst, std::abs(st - c.nu * sxx));
      }
    return worst;
  };
  const double r1 = residual(0.02, 0.002);
  const double r2 = residual(0.01, 0.001);
  CHECK(r2 < r1 / 2.5);
  CHECK(r2 < 0.05);
}

TEST_CASE("solve_corrected") {
  SUBCASE("procedure 0 reduces exactly to the direct solve") {
    ProblemSpec direct = default_1d_problem(24, 500, BoundaryMode::direct());
    ProblemSpec proc0 = default_1d_problem(24, 500, BoundaryMode::corrector(0));
    const Trajectory a = solve(direct);
    const Trajectory b = solve(proc0);
    REQUIRE(a.snapshots.size() == b.snapshots.size());
    for (std::size_t s = 0; s < a.snapshots.size(); ++s)
      for (std::size_t i = 0; i < a.snapshots[s].size(); ++i)
        CHECK(a.snapshots[s][i] == b.snapshots[s][i]);
  }
  SUBCASE("t = 0 snapshot is u0 away from the corrected endpoint") {
    ProblemSpec s = default_1d_problem(24, 500, BoundaryMode::corrector(1));
    const Trajectory traj = solve(s);
    const ScalarField u0 = evaluate_initial(s);
    for (std::size_t i = 1; i < u0.size(); ++i)  // S(x, 0) = 0 pointwise for x > 0
      CHECK(traj.snapshots[0][i] == doctest::Approx(u0[i]).epsilon(1e-14));
  }
  SUBCASE("corner errors near t-equals-0 order: procedure 2 <= procedure 1 < direct") {
    // The singular transient lives in the first few dozen steps; later the
    // curves sit at the smooth-discretization floor where the ordering is
    // not meaningful.
    auto corner_peak = [](BoundaryMode mode) {
      ProblemSpec coarse = default_1d_problem(24, 1000, mode);
      ProblemSpec fine = default_1d_problem(48, 4000, mode);
      SolveOptions copt, fopt;
      copt.snapshot_steps = default_snapshot_steps(1000);
      fopt.snapshot_steps = scaled_snapshot_steps(*copt.snapshot_steps, 4);
      const ErrorCurve curve =
          comparative_error(solve(coarse, copt), solve(fine, fopt));
      double m = 0.0;
      for (std::size_t i = 0; i < curve.times.size(); ++i)
        if (curve.times[i] > 0.0 && curve.times[i] <= 0.02)
          m = std::max(m, curve.max_error[i]);
      return m;
    };
    const double direct = corner_peak(BoundaryMode::direct());
    const double p1 = corner_peak(BoundaryMode::corrector(1));
    const double p2 = corner_peak(BoundaryMode::corrector(2));
    CHECK(p2 <= p1 * (1.0 + 1e-9));
    CHECK(p1 < direct);
  }
}
