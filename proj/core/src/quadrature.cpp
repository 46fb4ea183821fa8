// SPDX-License-Identifier: Apache-2.0
#include "renyi/quadrature.hpp"

#include <cmath>

namespace renyi {

namespace {

// 15-point Kronrod nodes/weights on [-1,1]; odd-indexed nodes are the
// embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

void gk15(const std::function<double(double)>& f, double a, double b,
          double* result, double* err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double res_g = fc * kWg[3];
  double res_k = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double fsum = f(c - x) + f(c + x);
    res_k += kWgk[j] * fsum;
    if (j % 2 == 1) res_g += kWg[j / 2] * fsum;
  }
  *result = res_k * h;
  *err = std::fabs((res_k - res_g) * h);
}

void adapt(const std::function<double(double)>& f, double a, double b,
           double tol, int depth, int max_depth, QuadratureResult* out) {
  double r, e;
  gk15(f, a, b, &r, &e);
  if (e <= tol || depth >= max_depth) {
    out->value += r;
    out->error_estimate += e;
    out->subdivisions += 1;
    if (e > tol) out->converged = false;
    return;
  }
  const double c = 0.5 * (a + b);
  adapt(f, a, c, 0.5 * tol, depth + 1, max_depth, out);
  adapt(f, c, b, 0.5 * tol, depth + 1, max_depth, out);
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol, int max_depth) {
  QuadratureResult out;
  out.converged = true;
  if (a == b) return out;
  adapt(f, a, b, abs_tol, 0, max_depth, &out);
  return out;
}

QuadratureResult integrate_sqrt_singular(
    const std::function<double(double)>& f, double abs_tol) {
  // theta = u^2 on [0, 1/2]; theta = 1 - u^2 on [1/2, 1]
  auto left = [&f](double u) { return 2.0 * u * f(u * u); };
  auto right = [&f](double u) { return 2.0 * u * f(1.0 - u * u); };
  const double s = std::sqrt(0.5);
  QuadratureResult a = integrate(left, 0.0, s, 0.5 * abs_tol);
  QuadratureResult b = integrate(right, 0.0, s, 0.5 * abs_tol);
  QuadratureResult out;
  out.value = a.value + b.value;
  out.error_estimate = a.error_estimate + b.error_estimate;
  out.converged = a.converged && b.converged;
  out.subdivisions = a.subdivisions + b.subdivisions;
  return out;
}

}  // namespace renyi
