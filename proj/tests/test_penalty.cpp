#include <doctest.h>

#include "heatpen/penalty.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace heatpen;

TEST_CASE("penalty_exact closed forms") {
  SUBCASE("pure decay for g = 0") {
    const PenaltyParams p{0.1, 1.0, TimeSignal::zero()};
    CHECK(penalty_exact(p, 0.1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(penalty_exact(p, 0.0) == 1.0);
  }
  SUBCASE("constant data is the fixed point") {
    const PenaltyParams p{0.05, 0.3, TimeSignal::constant(2.0)};
    CHECK(penalty_exact(p, 0.0) == 0.3);
    CHECK(penalty_exact(p, 50.0) == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("quadrature path agrees with the sine closed form") {
    const TimeSignal custom =
        TimeSignal::custom("sin_custom", [](double t) { return std::sin(t); });
    for (double eps : {0.2, 0.05, 0.0125}) {
      const PenaltyParams closed{eps, 0.5, TimeSignal::sine()};
      const PenaltyParams quad{eps, 0.5, custom};
      for (double t : {0.01, 0.3, 1.0}) {
        CHECK(penalty_exact(quad, t) ==
              doctest::Approx(penalty_exact(closed, t)).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("penalty_step arithmetic and warning threshold") {
  CHECK(penalty_step(1.0, 0.0, 0.1, 0.001) == doctest::Approx(0.99).epsilon(1e-15));
  CHECK(penalty_step(0.7, 0.7, 0.1, 0.02) == doctest::Approx(0.7));  // fixed point
  CHECK(penalty_step(0.5, 0.0, 0.1, 0.2) == doctest::Approx(-0.5));
  CHECK(penalty_step_warns(0.1, 0.2));
  CHECK_FALSE(penalty_step_warns(0.1, 0.1));   // threshold is strict
  CHECK_FALSE(penalty_step_warns(0.1, 0.001));
}

TEST_CASE("monotone relaxation toward constant data when dt/eps <= 1") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  std::uniform_real_distribution<double> pos(0.01, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double g = val(rng);
    double k = val(rng);
    const double eps = pos(rng);
    const double dt = eps * pos(rng);  // dt/eps in (0, 1]
    double gap = std::abs(k - g);
    for (int n = 0; n < 50; ++n) {
      const double prev = k;
      k = penalty_step(k, g, eps, dt);
      const double new_gap = std::abs(k - g);
      CHECK(new_gap <= gap + 1e-15);
      // no overshoot: the update stays on the same side of g
      CHECK((prev - g) * (k - g) >= -1e-15);
      gap = new_gap;
    }
  }
}

TEST_CASE("discrete trajectory converges to penalty_exact at first order") {
  const PenaltyParams p{0.1, 0.5, TimeSignal::sine()};
  auto max_err = [&](int n_steps) {
    const double dt = 1.0 / n_steps;
    double k = p.k0;
    double err = 0.0;
    for (int n = 0; n < n_steps; ++n) {
      k = penalty_step(k, p.g(n * dt), p.epsilon, dt);
      err = std::max(err, std::abs(k - penalty_exact(p, (n + 1) * dt)));
    }
    return err;
  };
  const double e1 = max_err(400);
  const double e2 = max_err(800);
  CHECK(e1 / e2 == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("outer and inner expansion terms") {
  const TimeSignal sine = TimeSignal::sine();
  CHECK(outer_term(0, sine)(0.7) == doctest::Approx(std::sin(0.7)));
  CHECK(outer_term(1, sine)(0.7) == doctest::Approx(-std::cos(0.7)));
  CHECK(outer_term(3, TimeSignal::constant(4.0))(0.2) == 0.0);

  const TimeSignal custom = TimeSignal::custom("tabulated", [](double) { return 1.0; });
  CHECK_THROWS_AS(outer_term(1, custom), std::domain_error);

  const PenaltyParams p{0.1, 0.5, sine};
  CHECK(inner_term(0, p, 0.0) == doctest::Approx(0.5));       // k0 - g(0)
  CHECK(inner_term(1, p, 0.0) == doctest::Approx(1.0));       // (-1)^2 cos 0
  CHECK(std::abs(inner_term(0, p, 5.0)) < 1e-21 * std::abs(inner_initial(0, p)));
}

TEST_CASE("asymptotic approximation") {
  SUBCASE("coincides with the exact solution when g = 0, n = 0") {
    const PenaltyParams p{0.07, 0.8, TimeSignal::zero()};
    for (double t : {0.0, 0.05, 0.3, 1.0})
      CHECK(asymptotic_approx(0, p, t) ==
            doctest::Approx(penalty_exact(p, t)).epsilon(1e-14));
  }
  SUBCASE("telescopes to k0 at t = 0") {
    const PenaltyParams p{0.1, 0.5, TimeSignal::sine()};
    CHECK(asymptotic_approx(0, p, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    // n = 1: k0 + eps*(-cos 0 + cos 0) = k0
    CHECK(asymptotic_approx(1, p, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
  }
}

namespace {

// Closed-form remainder for g = sin t, derived by solving the remainder ODE
// eps*w' + w = eps^{n+1} (-1)^{n+1} g^{(n+1)}:
//   w_0(t) = -eps (cos t + eps sin t - e^{-t/eps}) / (1 + eps^2)
//   w_1(t) = -eps^2 (sin t - eps cos t + eps e^{-t/eps}) / (1 + eps^2)
double remainder_sine(int order, double eps, double t) {
  const double decay = std::exp(-t / eps);
  if (order == 0)
    return -eps * (std::cos(t) + eps * std::sin(t) - decay) / (1.0 + eps * eps);
  return -eps * eps * (std::sin(t) - eps * std::cos(t) + eps * decay) /
         (1.0 + eps * eps);
}

}  // namespace

TEST_CASE("remainder norms match the closed-form remainder for g = sin t") {
  const TimeGrid grid(500, 1.0);
  for (double eps : {0.1, 0.025}) {
    const PenaltyParams p{eps, 0.5, TimeSignal::sine()};
    for (int order : {0, 1}) {
      double sum_sq = 0.0, sup = 0.0;
      for (int m = 0; m <= grid.n_steps; ++m) {
        const double w = remainder_sine(order, eps, grid.time(m));
        sum_sq += w * w;
        sup = std::max(sup, std::abs(w));
      }
      const RemainderReport rep = remainder_norms(order, p, grid);
      CHECK(rep.l2_norm == doctest::Approx(std::sqrt(grid.dt() * sum_sq)).epsilon(1e-10));
      CHECK(rep.sup_norm == doctest::Approx(sup).epsilon(1e-10));
    }
  }
}

TEST_CASE("remainder vanishes at t = 0 and for exactly-matched data") {
  const PenaltyParams p{0.05, 0.5, TimeSignal::sine()};
  CHECK(std::abs(penalty_exact(p, 0.0) - asymptotic_approx(1, p, 0.0)) <= 1e-12);

  const PenaltyParams pz{0.1, 0.8, TimeSignal::zero()};
  const RemainderReport rep = remainder_norms(0, pz, TimeGrid(200, 1.0));
  CHECK(rep.l2_norm <= 1e-12);
  CHECK(rep.sup_norm <= 1e-12);
}

TEST_CASE("remainder L2 norm halves/quarters with epsilon per its order") {
  const TimeGrid grid(1000, 1.0);
  // order n decays like eps^{n+1}: halving eps scales the L2 norm by
  // 2^{n+1}. (Computed with the closed-form oracle above; the ratio for
  // n = 0 is 2, for n = 1 it is 4.)
  for (int order : {0, 1}) {
    const PenaltyParams pa{0.05, 0.5, TimeSignal::sine()};
    const PenaltyParams pb{0.025, 0.5, TimeSignal::sine()};
    const double ratio = remainder_norms(order, pa, grid).l2_norm /
                         remainder_norms(order, pb, grid).l2_norm;
    const double expected = order == 0 ? 2.0 : 4.0;
    CHECK(ratio == doctest::Approx(expected).epsilon(0.15));
  }
}

TEST_CASE("pointwise distance to g away from the layer is eps*|g'| + O(eps^(3/2))") {
  const double t0 = 0.5;
  double prev_gap = 1e100;
  for (double eps : {0.05, 0.025, 0.0125, 0.00625}) {
    const PenaltyParams p{eps, 0.5, TimeSignal::sine()};
    const double ratio = std::abs(penalty_exact(p, t0) - std::sin(t0)) / eps;
    const double gap = std::abs(ratio - std::abs(std::cos(t0)));
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  CHECK(prev_gap < 5e-3);
}
