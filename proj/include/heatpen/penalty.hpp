#pragma once

#include "heatpen/functions.hpp"
#include "heatpen/grid.hpp"

#include <functional>

namespace heatpen {

/// Data of the boundary relaxation ODE at one boundary node:
///   k_eps' + (1/epsilon) * (k_eps - g) = 0,  k_eps(0) = k0,
/// where k0 is u0 restricted to that node.
struct PenaltyParams {
  double epsilon;
  double k0;
  TimeSignal g = TimeSignal::zero();
};

/// Exact solution  k_eps(t) = e^{-t/eps} k0 + (1/eps) Int_0^t g(s) e^{(s-t)/eps} ds.
/// Constant and sine signals use the closed form of the integral; anything
/// else falls back to adaptive quadrature (relative tolerance 1e-10).
double penalty_exact(const PenaltyParams& params, double t);

/// One explicit Euler step of the relaxation ODE:
///   k_{n+1} = k_n - (dt/eps) * (k_n - g_n).
double penalty_step(double k_n, double g_n, double epsilon, double dt);

/// The Euler update loses monotonicity for dt/eps > 1; callers surface this
/// as a warning, not an error.
bool penalty_step_warns(double epsilon, double dt);

/// Outer-expansion term of order j: t -> (-1)^j g^(j)(t).
std::function<double(double)> outer_term(int order, const TimeSignal& g);

/// Inner-expansion initial datum:
///   theta^0(0) = k0 - g(0),  theta^j(0) = (-1)^{j+1} g^(j)(0) for j >= 1.
double inner_initial(int order, const PenaltyParams& params);

/// Inner-expansion term e^{-t/eps} * theta^j(0).
double inner_term(int order, const PenaltyParams& params, double t);

/// Truncated matched expansion  sum_{j=0..n} eps^j (k^j(t) + theta^j(t)).
double asymptotic_approx(int order, const PenaltyParams& params, double t);

/// Time norms of the remainder w_n = k_eps - (outer + inner truncated at n),
/// sampled on the time grid: L2 = sqrt(dt * sum w^2), sup = max |w|.
struct RemainderReport {
  int order;
  double epsilon;
  double l2_norm;
  double sup_norm;
};

RemainderReport remainder_norms(int order, const PenaltyParams& params,
                                const TimeGrid& time);

}  // namespace heatpen
