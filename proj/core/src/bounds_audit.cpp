// SPDX-License-Identifier: Apache-2.0
#include "renyi/bounds_audit.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "renyi/quadrature.hpp"

namespace renyi {

namespace {

constexpr double kTwoPi = 6.283185307179586476925;

double kl_vector(std::span<const double> tau, std::span<const double> theta) {
  double s = 0.0;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (tau[i] == 0.0) continue;
    if (theta[i] == 0.0) return kPosInf;
    s += tau[i] * std::log(tau[i] / theta[i]);
  }
  return std::max(s, 0.0);  // negatives are rounding
}

std::vector<double> random_simplex_point(std::mt19937_64& rng, int k) {
  std::exponential_distribution<double> ed(1.0);
  std::vector<double> p(k);
  double s = 0.0;
  for (int i = 0; i < k; ++i) {
    p[i] = ed(rng);
    s += p[i];
  }
  for (double& x : p) x /= s;
  return p;
}

void track(BoundReport* rep, double violation,
           std::initializer_list<std::pair<const char*, double>> witness) {
  if (violation > rep->max_violation) {
    rep->max_violation = violation;
    rep->witness.clear();
    for (const auto& [name, value] : witness) rep->witness[name] = value;
  }
}

}  // namespace

RobbinsBounds robbins_multinomial_bounds(const TypeVector& t) {
  const int k = t.k();
  for (auto c : t.counts)
    if (c < 1)
      throw std::domain_error("robbins_multinomial_bounds: counts must be >= 1");
  const double n = static_cast<double>(t.n);
  double nH = 0.0, sum_log_t = 0.0, sum_inv12t = 0.0, sum_inv12t1 = 0.0;
  for (auto c : t.counts) {
    const double td = static_cast<double>(c);
    nH -= td * std::log(td / n);
    sum_log_t += std::log(td);
    sum_inv12t += 1.0 / (12.0 * td);
    sum_inv12t1 += 1.0 / (12.0 * (td + 1.0));
  }
  const double base = nH - 0.5 * (k - 1) * std::log(kTwoPi) +
                      0.5 * (std::log(n) - sum_log_t);
  RobbinsBounds b;
  b.lower = LogValue::from_log(base + 1.0 / (12.0 * (n + 1.0)) - sum_inv12t);
  b.upper = LogValue::from_log(base + 1.0 / (12.0 * n) - sum_inv12t1);
  b.exact = log_multinomial(t);
  return b;
}

double robbins_violation(const TypeVector& t) {
  const RobbinsBounds b = robbins_multinomial_bounds(t);
  return std::max(b.lower.log() - b.exact.log(),
                  b.exact.log() - b.upper.log());
}

StirlingGammaBounds stirling_gamma_bounds(double x) {
  if (!(x > 0.0))
    throw std::domain_error("stirling_gamma_bounds: x must be > 0");
  StirlingGammaBounds s;
  s.log_approx = 0.5 * std::log(kTwoPi) + (x - 0.5) * std::log(x) - x;
  s.remainder_bound = std::expm1(1.0 / (12.0 * x));
  return s;
}

double stirling_violation(double x) {
  const StirlingGammaBounds s = stirling_gamma_bounds(x);
  const double r = std::expm1(std::lgamma(x) - s.log_approx);
  return std::fabs(r) - s.remainder_bound;
}

PaperConstants constants(int k, double lambda) {
  if (k < 2) throw std::invalid_argument("constants: k must be >= 2");
  if (!(lambda > 0.0)) throw std::invalid_argument("constants: lambda > 0");
  PaperConstants c;
  const double l_2me6 = std::log(2.0 - std::exp(1.0 / 6.0));
  const double l_2me18 = std::log(2.0 - std::exp(1.0 / 18.0));
  const double ln_c1 = (6.0 * k + 1.0) / 12.0 + dirichlet_log_half(k) +
                       0.5 * (k - 1) * std::log(1.0 + 0.5 * k) -
                       0.5 * (k - 1) * std::log(kTwoPi) - k * l_2me6;
  c.C1 = std::exp(ln_c1);
  const double ln_c2 = std::lgamma(0.5 * (k - 1)) - std::lgamma(0.5 * k) +
                       0.5 * (k - 1) * std::log(1.0 + 0.5 * k) +
                       (12.0 * k + 1.0) / 24.0 - l_2me18;
  c.C2 = std::exp(ln_c2);
  const double ln_c3 = std::log(3.14159265358979323846) +
                       (6.0 * k - 5.0) / 12.0 +
                       0.5 * (k - 2) * std::log(1.0 + 0.5 * (k - 1)) - l_2me6;
  c.C3 = std::exp(ln_c3);
  c.C_tilde = (std::pow(2.0, k) - 2.0) * std::exp(lambda * (ln_c2 + ln_c3));
  c.M_uniform =
      std::exp(1.0 / 12.0 +
               lambda * (0.5 * k + 0.5 * (k - 1) * std::log(1.0 + 0.5 * k) +
                         1.0 / (12.0 + 6.0 * k) -
                         k * std::log(1.5 * (2.0 - std::exp(1.0 / 18.0)))));
  return c;
}

double laplace_K(int k, double lambda, std::int64_t n,
                 std::span<const double> t) {
  const double nd = static_cast<double>(n);
  const double lnum = (nd + 0.5 * (k - 1)) * std::log1p(k / (2.0 * nd)) +
                      1.0 / (12.0 * nd + 6.0 * k);
  double lden = 0.0;
  for (double ti : t)
    lden += ti * std::log1p(1.0 / (2.0 * ti)) +
            std::log(2.0 - std::exp(1.0 / (12.0 * ti + 6.0)));
  return std::exp(1.0 / (12.0 * nd) + lambda * (lnum - lden));
}

double laplace_K(int k, double lambda, std::int64_t n,
                 std::span<const std::int32_t> t) {
  std::vector<double> td(t.begin(), t.end());
  return laplace_K(k, lambda, n, td);
}

double laplace_K_window_bound(int k, double lambda, std::int64_t n, double c,
                              double delta) {
  std::vector<double> v(k, c * (1.0 - delta) * std::log(static_cast<double>(n)));
  v[k - 1] = (1.0 - (k - 1) * delta) * static_cast<double>(n) / k;
  return laplace_K(k, lambda, n, v);
}

EdgeMassSplit edge_mass_split(std::int64_t n, int k, double lambda,
                              const SimplexPoint& theta, double c) {
  const double nd = static_cast<double>(n);
  if (!(k * std::log(nd) / (2.0 * nd) < 1.0))
    throw std::invalid_argument("edge_mass_split: k ln(n)/(2n) must be < 1");
  const double a = c * std::log(nd) / nd;
  for (double th : theta.probs)
    if (th < a - 1e-15)
      throw std::invalid_argument(
          "edge_mass_split: theta outside R_0 (coordinate below c ln n / n)");
  const ExchangeableMixture q = jeffreys_mixture(n, k);
  const TypeSet& ts = q.types();
  std::vector<double> face_terms, bulk_terms;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double ll = type_log_likelihood(theta.probs, ts.counts(i));
    if (ll == kNegInf) continue;
    const double term = ts.log_multinomial(i) + (1.0 + lambda) * ll -
                        lambda * q.log_type_prob(i);
    (ts.all_positive(i) ? bulk_terms : face_terms).push_back(term);
  }
  EdgeMassSplit s;
  s.log_V = log_sum_exp(face_terms);
  s.log_W = log_sum_exp(bulk_terms);
  const PaperConstants pc = constants(k, lambda);
  s.log_bound = std::log(pc.C_tilde) +
                (-(1.0 + lambda) * c + 0.5 * lambda * (k - 1)) * std::log(nd);
  s.divergence = log_add(s.log_V, s.log_W) / lambda;
  return s;
}

BoundReport audit_uniform_divergence_bound(std::int64_t n_max, int k,
                                           double lambda, int thetas_per_n,
                                           std::uint64_t seed,
                                           double c1_scale) {
  BoundReport rep;
  rep.name = "lemma3-uniform-divergence-C1";
  rep.domain = "k=" + std::to_string(k) + ", n<=" + std::to_string(n_max) +
               ", all types x " + std::to_string(thetas_per_n) +
               " random thetas per n (plus vertices and uniform)";
  const double ln_c1 = std::log(constants(k, lambda).C1 * c1_scale);
  std::mt19937_64 rng(seed);
  const RenyiOrder order = RenyiOrder::from_lambda(lambda);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const ExchangeableMixture q = jeffreys_mixture(n, k);
    const TypeSet& ts = q.types();
    const double bound = 0.5 * (k - 1) * std::log(static_cast<double>(n)) +
                         ln_c1;
    std::vector<std::vector<double>> thetas;
    for (int v = 0; v < k; ++v) {
      std::vector<double> vert(k, 0.0);
      vert[v] = 1.0;
      thetas.push_back(std::move(vert));
    }
    thetas.push_back(std::vector<double>(k, 1.0 / k));
    for (int r = 0; r < thetas_per_n; ++r)
      thetas.push_back(random_simplex_point(rng, k));
    for (const auto& th : thetas) {
      double max_info = kNegInf;
      for (std::size_t i = 0; i < ts.size(); ++i) {
        const double ll = type_log_likelihood(th, ts.counts(i));
        if (ll == kNegInf) continue;
        max_info = std::max(max_info, ll - q.log_type_prob(i));
      }
      const double div =
          divergence_to_mixture(SimplexPoint::create(th), q, order);
      const double v = std::max(max_info, div) - bound;
      track(&rep, v,
            {{"n", static_cast<double>(n)},
             {"theta_0", th[0]},
             {"theta_last", th[k - 1]}});
    }
  }
  return rep;
}

BoundReport audit_edge_mass_bound(std::int64_t n, int k, double lambda,
                                  const SimplexPoint& theta, double c) {
  const EdgeMassSplit s = edge_mass_split(n, k, lambda, theta, c);
  BoundReport rep;
  rep.name = "lemma4-edge-mass-V";
  rep.domain = "n=" + std::to_string(n) + ", k=" + std::to_string(k);
  rep.max_violation = s.log_V - s.log_bound;
  rep.witness["n"] = static_cast<double>(n);
  rep.witness["theta_0"] = theta.probs[0];
  rep.aux["log_V"] = s.log_V;
  rep.aux["log_bound"] = s.log_bound;
  rep.aux["divergence"] = s.divergence;
  return rep;
}

double frak_T(std::int64_t n, int k, double lambda,
              const SimplexPoint& theta) {
  const TypeSet ts = enumerate_types(n, k);
  const double nd = static_cast<double>(n);
  std::vector<double> tau(k);
  std::vector<double> terms;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!ts.all_positive(i)) continue;
    auto c = ts.counts(i);
    double sum_log_t = 0.0;
    for (int j = 0; j < k; ++j) {
      tau[j] = c[j] / nd;
      sum_log_t += std::log(static_cast<double>(c[j]));
    }
    const double d = kl_vector(tau, theta.probs);
    if (d == kPosInf) continue;
    terms.push_back(0.5 * (std::log(nd) - sum_log_t) -
                    0.5 * (k - 1) * std::log(kTwoPi) -
                    nd * (1.0 + lambda) * d);
  }
  if (terms.empty()) return 0.0;
  return std::exp(log_sum_exp(terms));
}

double frak_T_bound(int k, double lambda) {
  const PaperConstants pc = constants(k, lambda);
  const double lnb = lambda * std::log(pc.C1) +
                     0.5 * lambda * (k - 1) * std::log(kTwoPi) -
                     lambda * dirichlet_log_half(k) +
                     k * (20.0 * lambda + 3.0) / 36.0 -
                     lambda * std::log(2.0 - std::exp(1.0 / (6.0 * k)));
  return std::exp(lnb);
}

BoundReport audit_T_bound(std::int64_t n_max, int k, double lambda,
                          int theta_grid) {
  BoundReport rep;
  rep.name = "lemma5-frakT-uniform";
  rep.domain = "k=" + std::to_string(k) + ", n<=" + std::to_string(n_max) +
               ", interior theta grid";
  const double bound = frak_T_bound(k, lambda);
  rep.aux["bound"] = bound;
  std::vector<SimplexPoint> thetas;
  if (k == 2) {
    for (int j = 1; j < theta_grid; ++j)
      thetas.push_back(SimplexPoint::binary(static_cast<double>(j) / theta_grid));
  } else {
    const ParameterGrid g = ParameterGrid::barycentric(k, 8);
    for (const auto& p : g.points) {
      bool interior = true;
      for (double x : p.probs) interior = interior && (x > 0.0);
      if (interior) thetas.push_back(p);
    }
  }
  for (std::int64_t n = std::max<std::int64_t>(k, 2); n <= n_max; ++n) {
    for (const auto& th : thetas) {
      const double t = frak_T(n, k, lambda, th);
      track(&rep, t - bound,
            {{"n", static_cast<double>(n)}, {"theta_0", th.probs[0]}});
    }
  }
  return rep;
}

BoundReport audit_K_bounds(std::int64_t n_max, int k, double lambda, double c,
                           double delta, std::int64_t n_trend) {
  BoundReport rep;
  rep.name = "lemma6-7-K-bounds";
  rep.domain = "k=" + std::to_string(k) + ", exhaustive positive types n<=" +
               std::to_string(n_max) + "; windowed at n=" +
               std::to_string(std::min<std::int64_t>(n_max * 4, 1024));
  const double M = constants(k, lambda).M_uniform;
  rep.aux["M_uniform"] = M;
  // Lemma 6: exhaustive over positive types
  for (std::int64_t n = k; n <= n_max; ++n) {
    const TypeSet ts = enumerate_types(n, k);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (!ts.all_positive(i)) continue;
      const double kk = laplace_K(k, lambda, n, ts.counts(i));
      track(&rep, kk - M,
            {{"n", static_cast<double>(n)},
             {"t_0", static_cast<double>(ts.counts(i)[0])}});
    }
  }
  // Lemma 7: windowed bound at a larger n
  const std::int64_t nw = std::min<std::int64_t>(n_max * 4, 1024);
  const double nd = static_cast<double>(nw);
  const double a = c * std::log(nd) / nd;
  const double Mw = laplace_K_window_bound(k, lambda, nw, c, delta);
  rep.aux["M_window"] = Mw;
  std::vector<std::vector<double>> thetas;
  if (k == 2) {
    for (double th : {a, 0.05, 0.1, 0.25, 0.5})
      thetas.push_back({th, 1.0 - th});
  } else {
    thetas.push_back(std::vector<double>(k, 1.0 / k));
    std::vector<double> th(k, a);
    th[k - 1] = 1.0 - a * (k - 1);
    thetas.push_back(th);
  }
  std::vector<std::int64_t> lo(k - 1), hi(k - 1), t(k);
  for (const auto& th : thetas) {
    if (th[k - 1] < 1.0 / k) continue;
    for (int i = 0; i < k - 1; ++i) {
      lo[i] = std::max<std::int64_t>(
          1, static_cast<std::int64_t>(std::ceil(nd * (1 - delta) * th[i])));
      hi[i] = static_cast<std::int64_t>(std::floor(nd * (1 + delta) * th[i]));
    }
    // iterate the window box over the first k-1 counts
    std::vector<std::int64_t> cur(lo);
    while (true) {
      std::int64_t rest = nw;
      for (int i = 0; i < k - 1; ++i) rest -= cur[i];
      if (rest >= 1) {
        std::vector<double> td(k);
        for (int i = 0; i < k - 1; ++i) td[i] = static_cast<double>(cur[i]);
        td[k - 1] = static_cast<double>(rest);
        const double kk = laplace_K(k, lambda, nw, td);
        track(&rep, kk - Mw,
              {{"n", static_cast<double>(nw)},
               {"t_0", td[0]},
               {"windowed", 1.0}});
      }
      int pos = 0;
      while (pos < k - 1 && ++cur[pos] > hi[pos]) {
        cur[pos] = lo[pos];
        ++pos;
      }
      if (pos == k - 1) break;
    }
  }
  // trend value reported, asserted elsewhere
  rep.aux["M_window_trend_n"] = static_cast<double>(n_trend);
  rep.aux["M_window_minus_1"] =
      std::fabs(laplace_K_window_bound(k, lambda, n_trend, c, delta) - 1.0);
  return rep;
}

LaplaceBinary laplace_decomposition_binary(std::int64_t n, double lambda,
                                           double theta1, double delta,
                                           double c) {
  const double nd = static_cast<double>(n);
  const double a = c * std::log(nd) / nd;
  if (!(theta1 >= a - 1e-15 && theta1 <= 0.5 + 1e-15))
    throw std::invalid_argument(
        "laplace_decomposition_binary: theta1 must be in [c ln n / n, 1/2]");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument(
        "laplace_decomposition_binary: delta must be in (0,1)");
  // boundary integers are assigned to the center sum so the three ranges
  // partition [1, n-1]
  const std::int64_t lo =
      static_cast<std::int64_t>(std::ceil(nd * (1 - delta) * theta1));
  const std::int64_t hi =
      static_cast<std::int64_t>(std::floor(nd * (1 + delta) * theta1));
  LaplaceBinary s;
  std::int32_t t2buf[2];
  for (std::int64_t t1 = 1; t1 <= n - 1; ++t1) {
    t2buf[0] = static_cast<std::int32_t>(t1);
    t2buf[1] = static_cast<std::int32_t>(n - t1);
    const double term =
        std::sqrt(nd / (kTwoPi * t1 * (n - t1))) *
        std::exp(-nd * (1.0 + lambda) *
                 binary_divergence(static_cast<double>(t1) / nd, theta1)) *
        laplace_K(2, lambda, n, std::span<const std::int32_t>(t2buf, 2));
    if (t1 < lo)
      s.S1 += term;
    else if (t1 <= hi)
      s.S2 += term;
    else
      s.S3 += term;
  }
  return s;
}

double frak_S_binary(std::int64_t n, double lambda, double theta1) {
  const double nd = static_cast<double>(n);
  double s = 0.0;
  std::int32_t t2buf[2];
  for (std::int64_t t1 = 1; t1 <= n - 1; ++t1) {
    t2buf[0] = static_cast<std::int32_t>(t1);
    t2buf[1] = static_cast<std::int32_t>(n - t1);
    s += std::sqrt(nd / (kTwoPi * t1 * (n - t1))) *
         std::exp(-nd * (1.0 + lambda) *
                  binary_divergence(static_cast<double>(t1) / nd, theta1)) *
         laplace_K(2, lambda, n, std::span<const std::int32_t>(t2buf, 2));
  }
  return s;
}

LaplaceGeneral laplace_decomposition_general(std::int64_t n, int k,
                                             double lambda,
                                             const SimplexPoint& theta,
                                             double delta) {
  if (k < 3)
    throw std::invalid_argument("laplace_decomposition_general: k >= 3");
  if (!(delta > 0.0 && delta < 1.0 / (k - 1)))
    throw std::invalid_argument(
        "laplace_decomposition_general: delta must be in (0, 1/(k-1))");
  if (!(theta.probs[k - 1] >= 1.0 / k - 1e-15))
    throw std::invalid_argument(
        "laplace_decomposition_general: requires theta_k >= 1/k");
  for (double th : theta.probs)
    if (!(th > 0.0))
      throw std::invalid_argument(
          "laplace_decomposition_general: theta must be interior");
  const TypeSet ts = enumerate_types(n, k);
  const double nd = static_cast<double>(n);
  std::vector<double> tau(k);
  LaplaceGeneral out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!ts.all_positive(i)) continue;
    auto c = ts.counts(i);
    double sum_log_t = 0.0;
    bool in_window = true;
    for (int j = 0; j < k; ++j) {
      tau[j] = c[j] / nd;
      sum_log_t += std::log(static_cast<double>(c[j]));
      in_window = in_window &&
                  std::fabs(c[j] / (nd * theta.probs[j]) - 1.0) <= delta;
    }
    const double term =
        std::exp(0.5 * (std::log(nd) - sum_log_t) -
                 0.5 * (k - 1) * std::log(kTwoPi) -
                 nd * (1.0 + lambda) * kl_vector(tau, theta.probs)) *
        laplace_K(k, lambda, n, c);
    if (in_window)
      out.S1 += term;
    else
      out.S2 += term;
  }
  return out;
}

double frak_S_general(std::int64_t n, int k, double lambda,
                      const SimplexPoint& theta) {
  const TypeSet ts = enumerate_types(n, k);
  const double nd = static_cast<double>(n);
  std::vector<double> tau(k);
  double s = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!ts.all_positive(i)) continue;
    auto c = ts.counts(i);
    double sum_log_t = 0.0;
    for (int j = 0; j < k; ++j) {
      tau[j] = c[j] / nd;
      sum_log_t += std::log(static_cast<double>(c[j]));
    }
    s += std::exp(0.5 * (std::log(nd) - sum_log_t) -
                  0.5 * (k - 1) * std::log(kTwoPi) -
                  nd * (1.0 + lambda) * kl_vector(tau, theta.probs)) *
         laplace_K(k, lambda, n, c);
  }
  return s;
}

IntegralBoundResult integral_bound(std::int64_t n, double lambda,
                                   double theta1, double delta, double kappa) {
  const double nd = static_cast<double>(n);
  const double lo = (1.0 + delta) * theta1;
  IntegralBoundResult r;
  auto integrand = [nd, lambda, theta1](double tau) {
    return nd * (1.0 + lambda) / std::sqrt(tau * (1.0 - tau)) *
           std::exp(-nd * (1.0 + lambda) * binary_divergence(tau, theta1));
  };
  const QuadratureResult q = integrate(integrand, lo, kappa, 1e-9, 52);
  r.lhs = q.value;
  r.quadrature_ok = q.converged;
  r.rhs = 1.0 / (std::log1p(delta) * std::sqrt(lo * (1.0 - lo)));
  return r;
}

BoundReport audit_integral_bound(std::int64_t n, double lambda, double theta1,
                                 double delta, double kappa, double beta,
                                 double c) {
  const double nd = static_cast<double>(n);
  const double a = c * std::log(nd) / nd;
  if (!(theta1 >= a - 1e-15 && theta1 <= std::pow(nd, -0.5 * beta) + 1e-15))
    throw std::invalid_argument(
        "audit_integral_bound: theta1 must be in [c ln n / n, n^{-beta/2}]");
  if (!(kappa > 0.0 && kappa < 0.5))
    throw std::invalid_argument("audit_integral_bound: kappa in (0, 1/2)");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("audit_integral_bound: delta in (0,1)");
  const IntegralBoundResult r = integral_bound(n, lambda, theta1, delta, kappa);
  BoundReport rep;
  rep.name = "appendixH-integral-bound";
  rep.domain = "n=" + std::to_string(n);
  if (!r.quadrature_ok) {
    rep.max_violation = kPosInf;
    rep.witness["quadrature_failed"] = 1.0;
    return rep;
  }
  rep.max_violation = r.lhs - r.rhs;
  rep.witness["theta1"] = theta1;
  rep.witness["delta"] = delta;
  rep.witness["kappa"] = kappa;
  rep.aux["lhs"] = r.lhs;
  rep.aux["rhs"] = r.rhs;
  return rep;
}

ConverseBound converse_lower_bound(std::int64_t n, int k, double lambda,
                                   double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("converse_lower_bound: delta in (0,1)");
  if (!(static_cast<double>(n) * delta / k >= 1.0))
    throw std::invalid_argument("converse_lower_bound: requires n delta/k >= 1");
  if (!(lambda > 0.0))
    throw std::invalid_argument("converse_lower_bound: lambda > 0");
  const double nd = static_cast<double>(n);
  const double floor_count = nd * delta / k;
  const TypeSet ts = enumerate_types(n, k);
  std::vector<double> terms;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    auto c = ts.counts(i);
    bool in = true;
    double sum_half_log = 0.0;
    for (auto t : c) {
      in = in && (static_cast<double>(t) >= floor_count);
      if (t > 0) sum_half_log += 0.5 * std::log(t / nd);
    }
    if (!in) continue;
    terms.push_back(-(k - 1) * std::log(nd) - sum_half_log);
  }
  ConverseBound out;
  out.beta = terms.empty() ? 0.0 : std::exp(log_sum_exp(terms));
  const double opl = 1.0 + lambda;
  const double f1 = std::exp(1.0 / (12.0 * (nd + 1.0)) -
                             k * k / (12.0 * nd * delta));
  const double f2 = std::exp(
      nd * delta * std::log1p(k / (2.0 * opl * nd * delta)) -
      (nd + (k - 1) / (2.0 * opl)) * std::log1p(k / (2.0 * opl * nd)));
  const double f3 = std::exp(
      (k * std::log(2.0 - std::exp(k / (12.0 * opl * nd * delta + 6.0 * k))) -
       1.0 / (12.0 * opl * nd + 6.0 * k)) /
      opl);
  out.epsilon = f1 * f2 * f3;
  out.bound_residual = -dirichlet_log_half(k) / lambda -
                       (k - 1) / (2.0 * lambda) * std::log1p(lambda) +
                       opl / lambda * std::log(out.beta * out.epsilon);
  return out;
}

double jeffreys_gap_L(int k, int l, std::int64_t n) {
  const double nd = static_cast<double>(n);
  const double a = (nd + 0.5 * (k - 1)) * std::log1p(k / (2.0 * nd)) -
                   (nd + 0.5 * (l - 1)) * std::log1p(l / (2.0 * nd));
  const double b = std::log(2.0 - std::exp(1.0 / (12.0 * nd + 6.0 * k))) -
                   0.5 * (k - l) - 1.0 / (12.0 * nd + 6.0 * l);
  return std::exp(a + b);
}

JeffreysGap jeffreys_gap(std::int64_t n, int k, int l, double lambda,
                         int face_grid) {
  if (l < 1 || l > k - 1)
    throw std::invalid_argument("jeffreys_gap: requires 1 <= l <= k-1");
  const RenyiOrder order = RenyiOrder::from_lambda(lambda);
  JeffreysGap out;
  const double corr = vertex_divergence_closed_form(n, k, l, order).correction;
  if (l == 1) {
    out.face_sup = corr;
  } else {
    // Appendix-I decomposition: divergence on the l-face equals the l-ary
    // game against Q*^{(l-1)} plus the closed-form correction.
    const ExchangeableMixture q = jeffreys_mixture(n, l);
    double sup = kNegInf;
    if (l == 2) {
      for (int j = 0; j < face_grid; ++j) {
        const double th = static_cast<double>(j) / (face_grid - 1);
        sup = std::max(sup, divergence_to_mixture(SimplexPoint::binary(th), q,
                                                  order));
      }
    } else {
      const ParameterGrid g = ParameterGrid::barycentric(l, 24);
      for (const auto& p : g.points)
        sup = std::max(sup, divergence_to_mixture(p, q, order));
    }
    out.face_sup = sup + corr;
  }
  out.asymptote = 0.5 * (k - 1) * std::log(static_cast<double>(n) / kTwoPi) +
                  asymptotic_constant(k, order);
  out.gap = out.face_sup - out.asymptote;
  out.L = jeffreys_gap_L(k, l, n);
  return out;
}

BoundReport audit_pinsker(int grid) {
  BoundReport rep;
  rep.name = "pinsker";
  rep.domain = "(tau, theta) on a " + std::to_string(grid + 1) + "^2 grid";
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j <= grid; ++j) {
      const double tau = static_cast<double>(i) / grid;
      const double th = static_cast<double>(j) / grid;
      const double d = binary_divergence(tau, th);
      if (d == kPosInf) continue;
      track(&rep, 2.0 * (tau - th) * (tau - th) - d,
            {{"tau", tau}, {"theta", th}});
    }
  }
  return rep;
}

BoundReport audit_taylor_binary(int grid) {
  BoundReport rep;
  rep.name = "taylor-binary-lower-bounds";
  rep.domain = "theta in (0,1/2), |tau-theta| <= delta theta";
  for (int i = 1; i <= grid; ++i) {
    const double th = 0.5 * static_cast<double>(i) / (grid + 1);
    for (double delta : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      for (int j = -grid; j <= grid; ++j) {
        const double tau = th * (1.0 + delta * j / grid);
        if (!(tau > 0.0 && tau < 1.0)) continue;
        const double d = binary_divergence(tau, th);
        const double quad = 0.5 * (tau - th) * (tau - th) / (th * (1.0 - th));
        // Eq. with the (1-delta) factor on the window
        track(&rep, (1.0 - delta) * quad - d,
              {{"theta", th}, {"tau", tau}, {"delta", delta}});
        // sharper form for tau <= theta
        if (tau <= th)
          track(&rep, quad - d, {{"theta", th}, {"tau", tau}, {"delta", 0.0}});
        // remainder-form consistency: d - quad must be attainable by the
        // Lagrange remainder (2a-1)(tau-theta)^3 / (6 a^2 (1-a)^2)
        if (tau != th) {
          const double rem = d - quad;
          double lo = kPosInf, hi = kNegInf;
          const double amin = std::min(tau, th), amax = std::max(tau, th);
          const double cube = (tau - th) * (tau - th) * (tau - th);
          for (int m = 0; m <= 400; ++m) {
            const double a = amin + (amax - amin) * m / 400.0;
            const double phi =
                (2.0 * a - 1.0) * cube / (6.0 * a * a * (1.0 - a) * (1.0 - a));
            lo = std::min(lo, phi);
            hi = std::max(hi, phi);
          }
          const double tol = 1e-9 + (hi - lo) * 2e-2;
          track(&rep, std::max(rem - hi, lo - rem) - tol,
                {{"theta", th}, {"tau", tau}, {"delta", -1.0}});
        }
      }
    }
  }
  return rep;
}

BoundReport audit_taylor_general(int k, int grid) {
  BoundReport rep;
  rep.name = "taylor-general-lower-bound";
  rep.domain = "k=" + std::to_string(k) + ", theta_k >= 1/k, window delta";
  std::vector<SimplexPoint> thetas;
  if (k == 3) {
    thetas = {SimplexPoint::create({1.0 / 3, 1.0 / 3, 1.0 / 3}),
              SimplexPoint::create({0.2, 0.3, 0.5}),
              SimplexPoint::create({0.1, 0.2, 0.7}),
              SimplexPoint::create({0.05, 0.45, 0.5})};
  } else {
    thetas = {SimplexPoint::create(std::vector<double>(k, 1.0 / k))};
  }
  for (const auto& th : thetas) {
    const FisherInformation J = fisher_information(th);
    for (double delta : {0.05, 0.2, 0.4 / (k - 1)}) {
      if (!(delta < 1.0 / (k - 1))) continue;
      for (int a = -2; a <= 2; ++a) {
        for (int b = -2; b <= 2; ++b) {
          std::vector<double> tau(th.probs);
          tau[0] *= 1.0 + delta * a / 2.0;
          tau[1] *= 1.0 + delta * b / 2.0;
          tau[k - 1] = 1.0;
          for (int i = 0; i < k - 1; ++i) tau[k - 1] -= tau[i];
          if (!(tau[k - 1] > 0.0)) continue;
          const double d = kl_vector(tau, th.probs);
          double quad = 0.0;
          for (int i = 0; i < k - 1; ++i)
            for (int j = 0; j < k - 1; ++j)
              quad += (tau[i] - th.probs[i]) * J.matrix[i][j] *
                      (tau[j] - th.probs[j]);
          track(&rep, 0.5 * quad * (1.0 - (k - 1) * delta) - d,
                {{"theta_0", th.probs[0]}, {"delta", delta},
                 {"tau_0", tau[0]}});
          // per-coordinate Lagrange remainder of Eq.-(314) form
          for (int i = 0; i < k; ++i) {
            const double ti = th.probs[i], xi = tau[i];
            // the cubic remainder check loses all precision for ulp-sized
            // perturbations; the bound itself is exercised by larger ones
            if (xi <= 0.0 || std::fabs(xi - ti) < 1e-9 * ti) continue;
            const double f = xi * std::log(xi / ti);
            const double rem = f - (xi - ti) - (xi - ti) * (xi - ti) / (2 * ti);
            const double r = -6.0 * rem / ((xi - ti) * (xi - ti) * (xi - ti));
            const double amin = std::min(xi, ti), amax = std::max(xi, ti);
            const double rlo = 1.0 / (amax * amax), rhi = 1.0 / (amin * amin);
            const double tol = 1e-9 + (rhi - rlo) * 1e-6 + rhi * 1e-9;
            track(&rep, std::max(r - rhi, rlo - r) - tol,
                  {{"theta_0", th.probs[0]}, {"coord", static_cast<double>(i)},
                   {"tau_i", xi}});
          }
        }
      }
    }
  }
  return rep;
}

BoundReport audit_weak_duality(std::uint64_t seed, int trials) {
  BoundReport rep;
  rep.name = "weak-duality";
  rep.domain = "random priors vs {Jeffreys, modified, equalizer} mixtures, "
               "n<=5, k in {2,3}; slack 1e-12";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_n(2, 5), pick_k(2, 3),
      pick_m(1, 4);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < trials; ++trial) {
    const int k = pick_k(rng);
    const std::int64_t n = pick_n(rng);
    const double lambda = 0.25 * std::pow(2.0, trial % 5);  // 0.25 .. 4
    const RenyiOrder order = RenyiOrder::from_lambda(lambda);
    // random prior supported on random simplex points
    const int m = pick_m(rng);
    std::vector<SimplexPoint> support;
    std::vector<double> weights(m);
    double wsum = 0.0;
    for (int i = 0; i < m; ++i) {
      support.push_back(SimplexPoint::create(random_simplex_point(rng, k)));
      weights[i] = 0.05 + unif(rng);
      wsum += weights[i];
    }
    for (double& w : weights) w /= wsum;
    const DiscretePrior prior =
        DiscretePrior::create(std::move(support), std::move(weights));
    std::vector<ExchangeableMixture> qs;
    qs.push_back(jeffreys_mixture(n, k));
    const ModifiedPriorSpec spec = ModifiedPriorSpec::create(0.1, 0.25, n);
    if (k == 2)
      qs.push_back(modified_mixture_binary(spec));
    else
      qs.push_back(modified_mixture_general(spec, k));
    qs.push_back(equalizer_mixture(
        DiscretePrior::point_mass(
            SimplexPoint::create(random_simplex_point(rng, k))),
        n, order));
    const double I = alpha_mutual_information_iid(prior, n, order);
    for (std::size_t qi = 0; qi < qs.size(); ++qi) {
      double sup = kNegInf;
      for (const auto& th : prior.support)
        sup = std::max(sup, divergence_to_mixture(th, qs[qi], order));
      track(&rep, I - sup - 1e-12,
            {{"trial", static_cast<double>(trial)},
             {"q_index", static_cast<double>(qi)},
             {"n", static_cast<double>(n)},
             {"k", static_cast<double>(k)}});
    }
  }
  return rep;
}

BoundReport audit_robbins(std::int64_t n_max, int k) {
  BoundReport rep;
  rep.name = "robbins-multinomial";
  rep.domain = "k=" + std::to_string(k) + ", exhaustive positive types, n<=" +
               std::to_string(n_max);
  for (std::int64_t n = k; n <= n_max; ++n) {
    const TypeSet ts = enumerate_types(n, k);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (!ts.all_positive(i)) continue;
      const double v = robbins_violation(ts.type(i));
      track(&rep, v,
            {{"n", static_cast<double>(n)},
             {"t_0", static_cast<double>(ts.counts(i)[0])}});
    }
  }
  return rep;
}

BoundReport audit_stirling(const std::vector<double>& xs) {
  BoundReport rep;
  rep.name = "stirling-gamma-remainder";
  rep.domain = "grid of " + std::to_string(xs.size()) + " points";
  for (double x : xs) track(&rep, stirling_violation(x), {{"x", x}});
  return rep;
}

std::vector<BoundReport> run_full_audit(const AuditConfig& cfg) {
  std::vector<BoundReport> reports;
  reports.push_back(audit_robbins(64, 2));
  reports.push_back(audit_robbins(64, 3));
  {
    std::vector<double> xs = {1e-3, 0.01, 0.1, 0.25};
    for (int i = 0; i <= 999; ++i) xs.push_back(0.5 + i * 0.5);
    reports.push_back(audit_stirling(xs));
  }
  reports.push_back(
      audit_uniform_divergence_bound(64, 2, cfg.lambda, 200, cfg.seed,
                                     cfg.c1_scale));
  reports.push_back(
      audit_uniform_divergence_bound(64, 3, cfg.lambda, 200, cfg.seed + 1,
                                     cfg.c1_scale));
  {
    BoundReport rep;
    rep.name = "lemma4-edge-mass-V";
    rep.domain = "k=2 n in {16,32,64} lambda in {0.5,1,2}; k=3 n=32";
    std::mt19937_64 rng(cfg.seed + 2);
    for (std::int64_t n : {16, 32, 64}) {
      const double a = cfg.c * std::log(static_cast<double>(n)) / n;
      for (double lam : {0.5, 1.0, 2.0}) {
        for (double th : {a, 0.1, 0.25, 0.5}) {
          const EdgeMassSplit s = edge_mass_split(
              n, 2, lam, SimplexPoint::binary(th), cfg.c);
          if (s.log_V - s.log_bound > rep.max_violation) {
            rep.max_violation = s.log_V - s.log_bound;
            rep.witness = {{"n", static_cast<double>(n)},
                           {"lambda", lam},
                           {"theta_0", th}};
          }
        }
      }
    }
    const double a3 = cfg.c * std::log(32.0) / 32.0;
    for (int r = 0; r < 10; ++r) {
      auto p = random_simplex_point(rng, 3);
      for (double& x : p) x = a3 + (1.0 - 3.0 * a3) * x;  // pull into R_0
      double sum = p[0] + p[1] + p[2];
      for (double& x : p) x /= sum;
      const EdgeMassSplit s =
          edge_mass_split(32, 3, cfg.lambda, SimplexPoint::create(p), cfg.c);
      if (s.log_V - s.log_bound > rep.max_violation) {
        rep.max_violation = s.log_V - s.log_bound;
        rep.witness = {{"n", 32.0}, {"k", 3.0}, {"theta_0", p[0]}};
      }
    }
    reports.push_back(std::move(rep));
  }
  {
    BoundReport merged;
    merged.name = "lemma5-frakT-uniform";
    merged.domain = "k=2 n<=64 lambda in {0.5,1,2}; k=3 n<=32";
    for (double lam : {0.5, 1.0, 2.0}) {
      const BoundReport r = audit_T_bound(64, 2, lam, 20);
      if (r.max_violation > merged.max_violation) {
        merged.max_violation = r.max_violation;
        merged.witness = r.witness;
        merged.witness["lambda"] = lam;
      }
    }
    const BoundReport r3 = audit_T_bound(32, 3, cfg.lambda, 0);
    if (r3.max_violation > merged.max_violation) {
      merged.max_violation = r3.max_violation;
      merged.witness = r3.witness;
      merged.witness["k"] = 3.0;
    }
    reports.push_back(std::move(merged));
  }
  {
    BoundReport merged;
    merged.name = "lemma6-7-K-bounds";
    merged.domain = "k=2 exhaustive n<=256 lambda in {0.5,1,2}; k=3 n<=64";
    for (double lam : {0.5, 1.0, 2.0}) {
      const BoundReport r = audit_K_bounds(256, 2, lam, cfg.c, cfg.delta);
      if (r.max_violation > merged.max_violation) {
        merged.max_violation = r.max_violation;
        merged.witness = r.witness;
        merged.witness["lambda"] = lam;
      }
      if (lam == 1.0) merged.aux = r.aux;
    }
    const BoundReport r3 = audit_K_bounds(64, 3, cfg.lambda, cfg.c, cfg.delta);
    if (r3.max_violation > merged.max_violation) {
      merged.max_violation = r3.max_violation;
      merged.witness = r3.witness;
      merged.witness["k"] = 3.0;
    }
    reports.push_back(std::move(merged));
  }
  reports.push_back(audit_pinsker(200));
  reports.push_back(audit_taylor_binary(24));
  reports.push_back(audit_taylor_general(3, 0));
  {
    BoundReport rep;
    rep.name = "appendixH-integral-bound";
    rep.domain = "stated example plus 50 random tuples";
    const BoundReport ex =
        audit_integral_bound(1024, 1.0, 0.01, 0.1, 0.25, 0.5, cfg.c);
    rep.max_violation = ex.max_violation;
    rep.witness = ex.witness;
    std::mt19937_64 rng(cfg.seed + 3);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
      const std::int64_t n = 256 << (i % 4);
      const double beta = 0.3 + 0.5 * unif(rng);
      const double lo = cfg.c * std::log(static_cast<double>(n)) / n;
      const double hi = std::pow(static_cast<double>(n), -0.5 * beta);
      if (hi <= lo) continue;
      const double th = lo + (hi - lo) * unif(rng);
      const double dl = 0.05 + 0.9 * unif(rng);
      const double kap = 0.05 + 0.4 * unif(rng);
      const double lam = 0.25 * std::pow(2.0, i % 5);
      const BoundReport r =
          audit_integral_bound(n, lam, th, dl, kap, beta, cfg.c);
      if (r.max_violation > rep.max_violation) {
        rep.max_violation = r.max_violation;
        rep.witness = r.witness;
        rep.witness["n"] = static_cast<double>(n);
        rep.witness["lambda"] = lam;
      }
    }
    reports.push_back(std::move(rep));
  }
  reports.push_back(audit_weak_duality(cfg.seed + 4, 40));
  return reports;
}

}  // namespace renyi
