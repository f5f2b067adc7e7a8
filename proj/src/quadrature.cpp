#include "heatpen/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace heatpen {

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol) {
  if (a == b) return 0.0;
  using boost::math::quadrature::gauss_kronrod;
  double error = 0.0;
  double l1 = 0.0;
  const double result =
      gauss_kronrod<double, 15>::integrate(f, a, b, /*max_depth=*/25, rel_tol,
                                           &error, &l1);
  // The error estimate is conservative; allow two orders of slack over the
  // requested tolerance, plus an absolute floor for integrals that are
  // themselves at roundoff scale.
  const double scale = std::max(l1, 1e-300);
  if (!(error <= std::max(100.0 * rel_tol * scale, 1e-13)) || !std::isfinite(result)) {
    throw std::runtime_error("quadrature failed to converge on [" +
                             std::to_string(a) + ", " + std::to_string(b) +
                             "]: estimated relative error " +
                             std::to_string(error / scale));
  }
  return result;
}

}  // namespace heatpen
