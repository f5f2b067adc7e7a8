#include "heatpen/penalty.hpp"

#include "heatpen/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace heatpen {

double penalty_exact(const PenaltyParams& params, double t) {
  const double eps = params.epsilon;
  if (!(eps > 0.0)) throw std::invalid_argument("penalty_exact: epsilon must be > 0");
  if (t < 0.0) throw std::invalid_argument("penalty_exact: t must be >= 0");
  if (t == 0.0) return params.k0;

  const double decay = std::exp(-t / eps);
  switch (params.g.kind()) {
    case TimeSignal::Kind::Constant: {
      const double c = params.g.constant_value();
      return c + (params.k0 - c) * decay;
    }
    case TimeSignal::Kind::Sine: {
      // (1/eps) Int_0^t sin(s) e^{(s-t)/eps} ds
      //   = (sin t - eps cos t + eps e^{-t/eps}) / (1 + eps^2)
      const double particular =
          (std::sin(t) - eps * std::cos(t) + eps * decay) / (1.0 + eps * eps);
      return decay * params.k0 + particular;
    }
    case TimeSignal::Kind::Custom: {
      const TimeSignal g = params.g;
      const double integral = integrate(
          [&g, eps, t](double s) { return g(s) * std::exp((s - t) / eps); }, 0.0,
          t, 1e-10);
      return decay * params.k0 + integral / eps;
    }
  }
  return params.k0;
}

double penalty_step(double k_n, double g_n, double epsilon, double dt) {
  return k_n - (dt / epsilon) * (k_n - g_n);
}

bool penalty_step_warns(double epsilon, double dt) { return dt / epsilon > 1.0; }

std::function<double(double)> outer_term(int order, const TimeSignal& g) {
  if (order < 0) throw std::domain_error("outer_term: order must be >= 0");
  if (order > g.max_derivative_order())
    throw std::domain_error("outer_term: order " + std::to_string(order) +
                            " exceeds available derivatives of '" + g.name() + "'");
  const double sign = order % 2 == 0 ? 1.0 : -1.0;
  return [sign, order, g](double t) { return sign * g.derivative(order, t); };
}

double inner_initial(int order, const PenaltyParams& params) {
  if (order < 0) throw std::domain_error("inner_initial: order must be >= 0");
  if (order == 0) return params.k0 - params.g(0.0);
  if (order > params.g.max_derivative_order())
    throw std::domain_error("inner_initial: order " + std::to_string(order) +
                            " exceeds available derivatives of '" +
                            params.g.name() + "'");
  const double sign = (order + 1) % 2 == 0 ? 1.0 : -1.0;
  return sign * params.g.derivative(order, 0.0);
}

double inner_term(int order, const PenaltyParams& params, double t) {
  return std::exp(-t / params.epsilon) * inner_initial(order, params);
}

double asymptotic_approx(int order, const PenaltyParams& params, double t) {
  double sum = 0.0;
  double eps_pow = 1.0;
  for (int j = 0; j <= order; ++j) {
    sum += eps_pow * (outer_term(j, params.g)(t) + inner_term(j, params, t));
    eps_pow *= params.epsilon;
  }
  return sum;
}

RemainderReport remainder_norms(int order, const PenaltyParams& params,
                                const TimeGrid& time) {
  const double dt = time.dt();
  double sum_sq = 0.0;
  double sup = 0.0;
  for (int m = 0; m <= time.n_steps; ++m) {
    const double t = time.time(m);
    const double w = penalty_exact(params, t) - asymptotic_approx(order, params, t);
    sum_sq += w * w;
    sup = std::max(sup, std::abs(w));
  }
  return {order, params.epsilon, std::sqrt(dt * sum_sq), sup};
}

}  // namespace heatpen
