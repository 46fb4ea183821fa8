// SPDX-License-Identifier: Apache-2.0
#include "renyi/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <cstdlib>
#include <cstdio>

namespace renyi {

ParameterGrid ParameterGrid::uniform_binary(int m) {
  if (m < 2) throw std::invalid_argument("uniform_binary: m must be >= 2");
  ParameterGrid g;
  g.points.reserve(m);
  for (int j = 0; j < m; ++j) {
    const double t = static_cast<double>(j) / (m - 1);
    g.points.push_back(SimplexPoint::create({t, 1.0 - t}));
  }
  g.descriptor = "uniform-binary m=" + std::to_string(m);
  return g;
}

ParameterGrid ParameterGrid::barycentric(int k, int denom) {
  if (denom < 1) throw std::invalid_argument("barycentric: denom must be >= 1");
  const TypeSet ts = enumerate_types(denom, k);
  ParameterGrid g;
  g.points.reserve(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    auto c = ts.counts(i);
    std::vector<double> p(c.size());
    for (std::size_t j = 0; j < p.size(); ++j)
      p[j] = static_cast<double>(c[j]) / denom;
    g.points.push_back(SimplexPoint::create(std::move(p)));
  }
  g.descriptor = "barycentric k=" + std::to_string(k) +
                 " denom=" + std::to_string(denom);
  return g;
}

ParameterGrid ParameterGrid::from_points(std::vector<SimplexPoint> pts,
                                         std::string descriptor) {
  if (pts.empty()) throw std::invalid_argument("from_points: empty grid");
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i].probs == pts[j].probs)
        throw std::invalid_argument("from_points: duplicate grid point");
  ParameterGrid g;
  g.points = std::move(pts);
  g.descriptor = std::move(descriptor);
  return g;
}

namespace {

// Scaled escort-likelihood matrix for the Sibson objective: for type t and
// grid point j, E[t][j] = exp((1+lambda) LL_j(t) - s_t) with s_t the row max.
// Types unreachable from every grid point are dropped.
struct SibsonProblem {
  std::shared_ptr<const TypeSet> types;
  std::vector<std::size_t> rows;    // indices into types
  std::vector<double> log_multi;    // per kept row
  std::vector<double> shift;        // s_t per kept row
  std::vector<double> escort;       // row-major T x J
  std::size_t J = 0;
  double lambda = 0.0;

  std::size_t T() const { return rows.size(); }
  const double* row(std::size_t t) const { return escort.data() + t * J; }
};

SibsonProblem build_problem(const ParameterGrid& grid,
                            std::shared_ptr<const TypeSet> types,
                            double lambda) {
  SibsonProblem p;
  p.types = std::move(types);
  p.J = grid.size();
  p.lambda = lambda;
  const std::size_t total = p.types->size();
  std::vector<double> ll(p.J);
  for (std::size_t i = 0; i < total; ++i) {
    auto counts = p.types->counts(i);
    double s = kNegInf;
    for (std::size_t j = 0; j < p.J; ++j) {
      const double v = type_log_likelihood(grid.points[j].probs, counts);
      ll[j] = (v == kNegInf) ? kNegInf : (1.0 + lambda) * v;
      s = std::max(s, ll[j]);
    }
    if (s == kNegInf) continue;  // unreachable type
    p.rows.push_back(i);
    p.log_multi.push_back(p.types->log_multinomial(i));
    p.shift.push_back(s);
    for (std::size_t j = 0; j < p.J; ++j)
      p.escort.push_back(ll[j] == kNegInf ? 0.0 : std::exp(ll[j] - s));
  }
  return p;
}

// u_t = sum_j w_j E[t][j]
void mixture_rows(const SibsonProblem& p, const std::vector<double>& w,
                  std::vector<double>* u) {
  u->assign(p.T(), 0.0);
  for (std::size_t t = 0; t < p.T(); ++t) {
    const double* e = p.row(t);
    double s = 0.0;
    for (std::size_t j = 0; j < p.J; ++j) s += w[j] * e[j];
    (*u)[t] = s;
  }
}

// ln G = ln sum_t m_t (A_t)^{1/(1+lambda)} with ln A_t = shift_t + ln u_t.
double log_objective(const SibsonProblem& p, const std::vector<double>& u) {
  std::vector<double> terms;
  terms.reserve(p.T());
  for (std::size_t t = 0; t < p.T(); ++t) {
    if (u[t] <= 0.0) continue;
    terms.push_back(p.log_multi[t] +
                    (p.shift[t] + std::log(u[t])) / (1.0 + p.lambda));
  }
  return log_sum_exp(terms);
}

double value_from_logG(double logG, double lambda) {
  return (1.0 + lambda) / lambda * logG;
}

// g_j = (1+lambda) dF/dw_j; D_j - I = (1/lambda) ln g_j and sum_j w_j g_j = 1.
void gradient_surrogate(const SibsonProblem& p, const std::vector<double>& u,
                        double logG, std::vector<double>* g) {
  g->assign(p.J, 0.0);
  for (std::size_t t = 0; t < p.T(); ++t) {
    if (u[t] <= 0.0) continue;
    const double r =
        std::exp(p.log_multi[t] + (p.shift[t] + std::log(u[t])) / (1.0 + p.lambda) -
                 logG);
    const double coeff = r / u[t];
    const double* e = p.row(t);
    for (std::size_t j = 0; j < p.J; ++j) (*g)[j] += coeff * e[j];
  }
}

// Gaussian elimination with partial pivoting; returns false when singular.
bool solve_dense(std::vector<double>& M, std::vector<double>& rhs, int n) {
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(M[r * n + col]) > std::fabs(M[piv * n + col])) piv = r;
    if (M[piv * n + col] == 0.0) return false;
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(M[piv * n + c], M[col * n + c]);
      std::swap(rhs[piv], rhs[col]);
    }
    const double inv = 1.0 / M[col * n + col];
    for (int r = col + 1; r < n; ++r) {
      const double f = M[r * n + col] * inv;
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) M[r * n + c] -= f * M[col * n + c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (int col = n - 1; col >= 0; --col) {
    rhs[col] /= M[col * n + col];
    for (int r = 0; r < col; ++r) rhs[r] -= M[r * n + col] * rhs[col];
  }
  return true;
}

// Fully-corrective step: damped Newton-KKT maximization of F restricted to
// the current active support. The Hessian of F = ln G is
// -(lambda B + g g^T)/(1+lambda)^2 with B_{jl} = sum_t r_t b_{tj} b_{tl},
// b_{tj} = E[t][j]/u_t, so the KKT system is small and dense.
double polish_support(const SibsonProblem& p, std::vector<double>& w,
                      std::vector<double>& u, double logG) {
  const double lam = p.lambda;
  for (int round = 0; round < 60; ++round) {
    std::vector<std::size_t> S;
    for (std::size_t j = 0; j < p.J; ++j)
      if (w[j] > 0.0) S.push_back(j);
    const int s = static_cast<int>(S.size());
    if (s <= 1) return logG;
    std::vector<double> r(p.T(), 0.0);
    for (std::size_t t = 0; t < p.T(); ++t)
      if (u[t] > 0.0)
        r[t] = std::exp(p.log_multi[t] +
                        (p.shift[t] + std::log(u[t])) / (1.0 + lam) - logG);
    std::vector<double> grad(s, 0.0), B(static_cast<std::size_t>(s) * s, 0.0);
    std::vector<double> b(s);
    for (std::size_t t = 0; t < p.T(); ++t) {
      if (u[t] <= 0.0 || r[t] == 0.0) continue;
      const double* e = p.row(t);
      for (int j = 0; j < s; ++j) b[j] = e[S[j]] / u[t];
      for (int j = 0; j < s; ++j) {
        grad[j] += r[t] * b[j];
        const double rb = r[t] * b[j];
        for (int l = j; l < s; ++l) B[j * s + l] += rb * b[l];
      }
    }
    for (int j = 0; j < s; ++j)
      for (int l = 0; l < j; ++l) B[j * s + l] = B[l * s + j];
    // grad currently holds g_j = (1+lambda) dF/dw_j
    const int dim = s + 1;
    std::vector<double> M(static_cast<std::size_t>(dim) * dim, 0.0);
    std::vector<double> rhs(dim, 0.0);
    double trace = 0.0;
    for (int j = 0; j < s; ++j) trace += lam * B[j * s + j] + grad[j] * grad[j];
    const double mu = std::max(1e-13 * trace / s, 1e-300);
    for (int j = 0; j < s; ++j) {
      for (int l = 0; l < s; ++l)
        M[j * dim + l] = lam * B[j * s + l] + grad[j] * grad[l];
      M[j * dim + j] += mu;
      M[j * dim + s] = 1.0;
      M[s * dim + j] = 1.0;
      rhs[j] = (1.0 + lam) * grad[j];  // proportional to dF/dw_j
    }
    if (!solve_dense(M, rhs, dim)) return logG;
    double alpha_max = 1.0;
    for (int j = 0; j < s; ++j)
      if (rhs[j] < 0.0) alpha_max = std::min(alpha_max, -w[S[j]] / rhs[j]);
    bool improved = false;
    std::vector<double> wtrial(w), utrial;
    for (double alpha = alpha_max; alpha > 1e-18; alpha *= 0.5) {
      for (int j = 0; j < s; ++j)
        wtrial[S[j]] = std::max(w[S[j]] + alpha * rhs[j], 0.0);
      double z = 0.0;
      for (int j = 0; j < s; ++j) z += wtrial[S[j]];
      for (int j = 0; j < s; ++j) wtrial[S[j]] /= z;
      mixture_rows(p, wtrial, &utrial);
      const double v = log_objective(p, utrial);
      if (v > logG) {
        w = wtrial;
        u = utrial;
        logG = v;
        improved = true;
        break;
      }
    }
    if (!improved) return logG;
  }
  return logG;
}

// Golden-section maximization of phi on [0, hi].
template <typename F>
double golden_max(const F& phi, double hi) {
  const double invphi = 0.6180339887498949;
  double a = 0.0, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = phi(x1), f2 = phi(x2);
  for (int it = 0; it < 90 && (b - a) > 1e-14 * std::max(1.0, hi); ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = phi(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = phi(x1);
    }
  }
  return 0.5 * (a + b);
}

double alpha_mi_on_types(const SibsonProblem& p, const std::vector<double>& w) {
  std::vector<double> u;
  mixture_rows(p, w, &u);
  return value_from_logG(log_objective(p, u), p.lambda);
}

}  // namespace

MaximinResult maximin_solve(const ParameterGrid& grid, std::int64_t n,
                            RenyiOrder order, double tol,
                            int max_iterations) {
  if (grid.size() == 0) throw std::invalid_argument("maximin_solve: empty grid");
  if (order.is_infinite() || order.lambda() <= 0.0)
    throw std::invalid_argument("maximin_solve: requires lambda in (0, inf)");
  if (!(tol > 0.0)) throw std::invalid_argument("maximin_solve: tol must be > 0");
  const double lam = order.lambda();
  auto types = std::make_shared<const TypeSet>(enumerate_types(n, grid.k()));
  SibsonProblem p = build_problem(grid, types, lam);

  const std::size_t J = p.J;
  std::vector<double> w(J, 1.0 / static_cast<double>(J));
  std::vector<double> u, g, utrial(p.T());
  mixture_rows(p, w, &u);
  double logG = log_objective(p, u);

  double best_gap = kPosInf;
  int it = 0;
  for (; it < max_iterations; ++it) {
    // exact refresh: incremental u updates drift over many iterations, and a
    // stale (too high) logG silently rejects every candidate step
    mixture_rows(p, w, &u);
    logG = log_objective(p, u);
    gradient_surrogate(p, u, logG, &g);
    std::size_t jmax = 0, jmin = 0;
    double gmax = kNegInf, gmin = kPosInf;
    for (std::size_t j = 0; j < J; ++j) {
      if (g[j] > gmax) {
        gmax = g[j];
        jmax = j;
      }
      if (w[j] > 0.0 && g[j] < gmin) {
        gmin = g[j];
        jmin = j;
      }
    }
    const double gap = std::log(gmax) / lam;
    best_gap = std::min(best_gap, gap);
    if (std::getenv("RENYI_TRACE") && it % 100 == 0) {
      int active = 0;
      for (double x : w) active += (x > 0.0);
      std::fprintf(stderr, "it=%d gap=%.3e active=%d wmin=%.3e jmax=%zu jmin=%zu\n",
                   it, gap, active, w[jmin], jmax, jmin);
    }
    if (gap <= tol) break;

    // Frank-Wolfe step toward the best vertex
    auto phi_fw = [&](double gamma) {
      for (std::size_t t = 0; t < p.T(); ++t)
        utrial[t] = (1.0 - gamma) * u[t] + gamma * p.row(t)[jmax];
      return log_objective(p, utrial);
    };
    const double gamma_fw = golden_max(phi_fw, 1.0);
    const double val_fw = phi_fw(gamma_fw);

    // pairwise step: move mass from the worst active atom to the best vertex
    double gamma_pw = 0.0, val_pw = kNegInf;
    if (jmin != jmax && w[jmin] > 0.0) {
      auto phi_pw = [&](double gamma) {
        for (std::size_t t = 0; t < p.T(); ++t)
          utrial[t] = u[t] + gamma * (p.row(t)[jmax] - p.row(t)[jmin]);
        return log_objective(p, utrial);
      };
      gamma_pw = golden_max(phi_pw, w[jmin]);
      val_pw = phi_pw(gamma_pw);
    }

    // multiplicative reweighting w_j g_j^kappa, accepted only on improvement;
    // it drains suboptimal atoms geometrically where vertex steps zigzag.
    // The gradient spread ln(g_j/gmax) lives on the scale lambda*gap, so the
    // exponent ladder is scaled by 1/(lambda*gap) to stay effective as the
    // gap shrinks.
    double val_mu = kNegInf;
    std::vector<double> wmu, cand(J);
    const double kscale = 1.0 / std::max(lam * gap, 1e-300);
    for (double kappa : {1.0 / lam, 0.5 * kscale, 2.0 * kscale, 8.0 * kscale,
                         32.0 * kscale}) {
      double z = 0.0;
      const double lgmax = std::log(gmax);
      for (std::size_t j = 0; j < J; ++j) {
        cand[j] = 0.0;
        if (w[j] <= 0.0 || g[j] <= 0.0) continue;
        cand[j] = w[j] * std::exp(kappa * (std::log(g[j]) - lgmax));
        z += cand[j];
      }
      if (z <= 0.0) continue;
      for (double& x : cand) x /= z;
      mixture_rows(p, cand, &utrial);
      const double v = log_objective(p, utrial);
      if (v > val_mu) {
        val_mu = v;
        wmu = cand;
      }
    }

    if (val_mu >= val_fw && val_mu >= val_pw && val_mu > logG) {
      w = std::move(wmu);
      // drop dust so pairwise steps never waste iterations on it
      for (double& x : w)
        if (x < 1e-60) x = 0.0;
      double z = 0.0;
      for (double x : w) z += x;
      for (double& x : w) x /= z;
      mixture_rows(p, w, &u);
      logG = log_objective(p, u);
    } else if (val_pw > val_fw) {
      w[jmax] += gamma_pw;
      w[jmin] -= gamma_pw;
      if (w[jmin] < 1e-17) w[jmin] = 0.0;
      for (std::size_t t = 0; t < p.T(); ++t)
        u[t] += gamma_pw * (p.row(t)[jmax] - p.row(t)[jmin]);
      logG = val_pw;
    } else {
      for (std::size_t j = 0; j < J; ++j) w[j] *= (1.0 - gamma_fw);
      w[jmax] += gamma_fw;
      for (std::size_t t = 0; t < p.T(); ++t)
        u[t] = (1.0 - gamma_fw) * u[t] + gamma_fw * p.row(t)[jmax];
      logG = val_fw;
    }

    // periodic fully-corrective polish once the support has drained enough
    // for the dense KKT solve to be cheap
    if ((it & 15) == 15) {
      int active = 0;
      for (double x : w) active += (x > 0.0);
      if (active <= 300) logG = polish_support(p, w, u, logG);
    }
  }

  // prune and renormalize the support
  std::vector<SimplexPoint> support;
  std::vector<double> weights;
  double sum = 0.0;
  for (std::size_t j = 0; j < J; ++j)
    if (w[j] > 1e-14) sum += w[j];
  for (std::size_t j = 0; j < J; ++j) {
    if (w[j] > 1e-14) {
      support.push_back(grid.points[j]);
      weights.push_back(w[j] / sum);
    }
  }

  MaximinResult res;
  res.prior = DiscretePrior::create(std::move(support), std::move(weights));
  // exact value and gap for the pruned prior
  {
    std::vector<double> wp(J, 0.0);
    std::size_t idx = 0;
    for (std::size_t j = 0; j < J; ++j)
      if (w[j] > 1e-14) wp[j] = res.prior.weights[idx++];
    mixture_rows(p, wp, &u);
    const double lg = log_objective(p, u);
    res.value = value_from_logG(lg, lam);
    gradient_surrogate(p, u, lg, &g);
    double gmax = kNegInf;
    for (std::size_t j = 0; j < J; ++j) gmax = std::max(gmax, g[j]);
    res.gap = std::log(gmax) / lam;
  }
  res.iterations = it;
  res.converged = res.gap <= tol;
  return res;
}

ExchangeableMixture equalizer_mixture(const DiscretePrior& prior,
                                      std::int64_t n, RenyiOrder order,
                                      std::int64_t cap) {
  if (order.is_infinite() || order.lambda() <= 0.0)
    throw std::invalid_argument(
        "equalizer_mixture: requires lambda in (0, inf)");
  const double lam = order.lambda();
  const int k = prior.support[0].k();
  auto types = std::make_shared<const TypeSet>(enumerate_types(n, k, cap));
  std::vector<double> lq(types->size(), kNegInf);
  std::vector<double> comps;
  for (std::size_t i = 0; i < types->size(); ++i) {
    auto counts = types->counts(i);
    comps.clear();
    for (std::size_t v = 0; v < prior.support.size(); ++v) {
      if (prior.weights[v] == 0.0) continue;
      const double ll = type_log_likelihood(prior.support[v].probs, counts);
      if (ll == kNegInf) continue;
      comps.push_back(std::log(prior.weights[v]) + (1.0 + lam) * ll);
    }
    if (!comps.empty()) lq[i] = log_sum_exp(comps) / (1.0 + lam);
  }
  // normalize over sequences
  std::vector<double> terms(types->size());
  for (std::size_t i = 0; i < types->size(); ++i)
    terms[i] = types->log_multinomial(i) + lq[i];
  const double lz = log_sum_exp(terms);
  for (double& v : lq)
    if (v != kNegInf) v -= lz;
  return ExchangeableMixture(std::move(types), std::move(lq));
}

MinimaxUpper minimax_upper(const ExchangeableMixture& Q,
                           const ParameterGrid& grid, RenyiOrder order) {
  if (grid.size() == 0) throw std::invalid_argument("minimax_upper: empty grid");
  MinimaxUpper best;
  best.value = kNegInf;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double d = divergence_to_mixture(grid.points[j], Q, order);
    if (d > best.value) {
      best.value = d;
      best.argmax_index = j;
    }
  }
  return best;
}

RedundancyBracket renyi_redundancy(std::int64_t n, int k, RenyiOrder order,
                                   const ParameterGrid& grid, double tol,
                                   double certify_threshold) {
  if (grid.k() != k)
    throw std::invalid_argument("renyi_redundancy: grid alphabet mismatch");
  MaximinResult mx = maximin_solve(grid, n, order, tol);
  const ExchangeableMixture q = equalizer_mixture(mx.prior, n, order);
  const MinimaxUpper up = minimax_upper(q, grid, order);
  RedundancyBracket b;
  b.lower = mx.value;
  b.upper = up.value;
  b.gap = b.upper - b.lower;
  b.iterations = mx.iterations;
  b.tolerance = tol;
  b.certified = b.gap <= certify_threshold;
  b.argmax_theta = grid.points[up.argmax_index];
  b.prior = mx.prior;
  return b;
}

double alpha_mutual_information_iid(const DiscretePrior& prior,
                                    std::int64_t n, RenyiOrder order,
                                    std::int64_t cap) {
  if (order.is_infinite() || order.lambda() <= 0.0)
    throw std::invalid_argument(
        "alpha_mutual_information_iid: requires lambda in (0, inf)");
  const double lam = order.lambda();
  const int k = prior.support[0].k();
  const TypeSet ts = enumerate_types(n, k, cap);
  std::vector<double> terms, comps;
  terms.reserve(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    auto counts = ts.counts(i);
    comps.clear();
    for (std::size_t v = 0; v < prior.support.size(); ++v) {
      if (prior.weights[v] == 0.0) continue;
      const double ll = type_log_likelihood(prior.support[v].probs, counts);
      if (ll == kNegInf) continue;
      comps.push_back(std::log(prior.weights[v]) + (1.0 + lam) * ll);
    }
    if (comps.empty()) continue;
    terms.push_back(ts.log_multinomial(i) + log_sum_exp(comps) / (1.0 + lam));
  }
  return std::max((1.0 + lam) / lam * log_sum_exp(terms), 0.0);
}

double shtarkov_regret(std::int64_t n, int k, std::int64_t cap) {
  const TypeSet ts = enumerate_types(n, k, cap);
  std::vector<double> terms(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    auto c = ts.counts(i);
    double ll = 0.0;
    for (auto t : c)
      if (t > 0) ll += t * std::log(static_cast<double>(t) / n);
    terms[i] = ts.log_multinomial(i) + ll;
  }
  return log_sum_exp(terms);
}

BlahutArimotoResult classical_redundancy_r0(std::int64_t n, int k,
                                            const ParameterGrid& grid,
                                            double tol, int max_iterations) {
  if (grid.k() != k)
    throw std::invalid_argument("classical_redundancy_r0: grid mismatch");
  const TypeSet ts = enumerate_types(n, k);
  const std::size_t T = ts.size(), J = grid.size();
  // type-aggregated channel W(t|j) = C(n,t) prod theta_j^{t}
  std::vector<double> lw(T * J), wlin(T * J);
  for (std::size_t j = 0; j < J; ++j)
    for (std::size_t t = 0; t < T; ++t) {
      const double ll = type_log_likelihood(grid.points[j].probs, ts.counts(t));
      const double v = (ll == kNegInf) ? kNegInf : ts.log_multinomial(t) + ll;
      lw[t * J + j] = v;
      wlin[t * J + j] = (v == kNegInf) ? 0.0 : std::exp(v);
    }
  std::vector<double> w(J, 1.0 / static_cast<double>(J));
  std::vector<double> q(T), d(J);
  BlahutArimotoResult res;
  for (int it = 1; it <= max_iterations; ++it) {
    for (std::size_t t = 0; t < T; ++t) {
      double s = 0.0;
      for (std::size_t j = 0; j < J; ++j) s += w[j] * wlin[t * J + j];
      q[t] = s;
    }
    double up = kNegInf, low = 0.0;
    for (std::size_t j = 0; j < J; ++j) {
      double dj = 0.0;
      for (std::size_t t = 0; t < T; ++t) {
        const double p = wlin[t * J + j];
        if (p == 0.0) continue;
        dj += p * (lw[t * J + j] - std::log(q[t]));
      }
      d[j] = dj;
      up = std::max(up, dj);
      low += w[j] * dj;
    }
    res.value = low;
    res.upper = up;
    res.iterations = it;
    if (up - low <= tol) {
      res.converged = true;
      break;
    }
    double z = 0.0;
    for (std::size_t j = 0; j < J; ++j) {
      w[j] *= std::exp(d[j] - up);
      z += w[j];
    }
    for (std::size_t j = 0; j < J; ++j) w[j] /= z;
  }
  return res;
}

double asymptotic_constant(int k, RenyiOrder order) {
  if (order.is_infinite()) return dirichlet_log_half(k);
  const double lam = order.lambda();
  if (!(lam > 0.0))
    throw std::invalid_argument("asymptotic_constant: lambda must be > 0");
  return dirichlet_log_half(k) -
         (k - 1) / (2.0 * lam) * std::log1p(lam);
}

double asymptotic_prediction(std::int64_t n, int k, RenyiOrder order) {
  if (n < 2) throw std::invalid_argument("asymptotic_prediction: n must be >= 2");
  const double tau = 2.0 * 3.14159265358979323846;
  return 0.5 * (k - 1) * std::log(static_cast<double>(n) / tau) +
         asymptotic_constant(k, order);
}

double zchannel_value(double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("zchannel_value: lambda > 0");
  const double x = std::pow(2.0, 1.0 + lambda) - 1.0;
  return std::log1p(std::pow(x, -1.0 / lambda));
}

double zchannel_optimal_prior(double lambda) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("zchannel_optimal_prior: lambda > 0");
  const double x = std::pow(2.0, 1.0 + lambda) - 1.0;
  const double num = 1.0 - std::pow(x, -(1.0 + lambda) / lambda);
  const double den = 1.0 + std::pow(x, -1.0 / lambda);
  return 1.0 - num / den;
}

ParameterGrid zchannel_grid() {
  return ParameterGrid::from_points(
      {SimplexPoint::create({1.0, 0.0}), SimplexPoint::create({0.5, 0.5})},
      "z-channel rows");
}

}  // namespace renyi
