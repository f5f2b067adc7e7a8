#pragma once

#include "heatpen/problem.hpp"
#include "heatpen/solver.hpp"

namespace heatpen {

/// Half-line heat kernel profile: the value of
///   (1/sqrt(pi*nu*t)) Int_x^inf e^{-s^2/(4*nu*t)} ds  =  erfc(x/(2*sqrt(nu*t))).
/// At t = 0 the pointwise limit is 0 for x > 0 and 1 for x = 0.
double s0(double x, double t, double nu);

/// Time integral Int_0^t s0(x, tau) dtau, evaluated by adaptive quadrature
/// (relative tolerance 1e-10).
double s1(double x, double t, double nu);

/// Closed form of the same integral,
///   (t + x^2/(2*nu)) * erfc(eta) - x * sqrt(t/(pi*nu)) * e^{-eta^2},
/// with eta = x/(2*sqrt(nu*t)); the independent cross-check for s1.
double s1_closed(double x, double t, double nu);

/// Coefficients of the singular corrector. Procedure 0 leaves S identically
/// zero; Procedure 1 uses the alpha0 terms, Procedure 2 adds the alpha1
/// terms. The right endpoint is handled by the mirrored kernel s0(1-x, t).
struct CorrectorSpec {
  int procedure = 0;
  double nu = 0.2;
  double alpha0_left = 0.0;
  double alpha1_left = 0.0;
  double alpha0_right = 0.0;
  double alpha1_right = 0.0;
};

/// Derive the coefficients from a 1D problem:
///   alpha0 = g(0) - u0(endpoint),  alpha1 = g'(0) - nu * u0''(endpoint).
/// Requires u0 to provide a second derivative when procedure == 2.
CorrectorSpec make_corrector_spec(const ProblemSpec& spec);

/// The space-time corrector S(x, t) built from the coefficients.
class Corrector {
 public:
  explicit Corrector(CorrectorSpec spec) : spec_(spec) {}
  double operator()(double x, double t) const;
  const CorrectorSpec& spec() const { return spec_; }

 private:
  CorrectorSpec spec_;
};

Corrector build_corrector(const CorrectorSpec& spec);

/// Solve the 1D problem in Corrector mode: march v with boundary data
/// g - S sampled at the endpoints, then return u = v + S at the snapshots.
Trajectory solve_corrected(const ProblemSpec& spec, const SolveOptions& options = {});

}  // namespace heatpen
