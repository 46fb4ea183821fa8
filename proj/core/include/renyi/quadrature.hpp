// SPDX-License-Identifier: Apache-2.0
#ifndef RENYI_QUADRATURE_HPP
#define RENYI_QUADRATURE_HPP

#include <functional>

namespace renyi {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
  int subdivisions = 0;
};

// Adaptive Gauss-Kronrod (G7,K15) on [a,b] to absolute tolerance abs_tol.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol = 1e-9,
                           int max_depth = 48);

// Integral over [0,1] of f(theta) where f may carry theta^{-1/2} and
// (1-theta)^{-1/2} endpoint singularities. Splits at 1/2 and substitutes
// u = sqrt(theta) (resp. u = sqrt(1-theta)) so the integrand is smooth.
QuadratureResult integrate_sqrt_singular(
    const std::function<double(double)>& f, double abs_tol = 1e-9);

}  // namespace renyi

#endif  // RENYI_QUADRATURE_HPP
