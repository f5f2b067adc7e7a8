#pragma once

#include <functional>

namespace heatpen {

/// Adaptive Gauss-Kronrod integration of f over [a, b] to the given relative
/// tolerance. Throws std::runtime_error naming the interval if the estimated
/// error does not converge.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10);

}  // namespace heatpen
