// SPDX-License-Identifier: Apache-2.0
#include "renyi/info_measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace renyi {

RenyiOrder RenyiOrder::from_lambda(double lambda) {
  if (std::isinf(lambda) && lambda > 0) return infinity();
  if (!(lambda >= 0.0))
    throw std::invalid_argument("RenyiOrder: lambda must be >= 0 (risk-seeking"
                                " lambda < 0 is rejected)");
  return RenyiOrder(lambda, false);
}

RenyiOrder RenyiOrder::infinity() { return RenyiOrder(kPosInf, true); }

FiniteDistribution FiniteDistribution::create(std::vector<double> p) {
  if (p.empty()) throw std::invalid_argument("FiniteDistribution: empty");
  double sum = 0.0;
  for (double x : p) {
    if (!(x >= 0.0))
      throw std::invalid_argument("FiniteDistribution: negative entry");
    sum += x;
  }
  if (std::fabs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("FiniteDistribution: entries sum to " +
                                std::to_string(sum));
  FiniteDistribution d;
  d.probs = std::move(p);
  return d;
}

CodeLengths CodeLengths::create(std::vector<double> lens) {
  for (double l : lens)
    if (!(l >= 0.0)) throw std::invalid_argument("CodeLengths: negative length");
  CodeLengths c;
  c.lengths = std::move(lens);
  return c;
}

double relative_information(const FiniteDistribution& P,
                            const FiniteDistribution& Q, int a) {
  if (P.m() != Q.m())
    throw std::invalid_argument("relative_information: dimension mismatch");
  if (a < 0 || a >= P.m())
    throw std::out_of_range("relative_information: symbol out of range");
  const double p = P.probs[a], q = Q.probs[a];
  if (p == 0.0) return kNegInf;
  if (q == 0.0)
    throw std::domain_error("relative_information: Q(a)=0 with P(a)>0");
  return std::log(p) - std::log(q);
}

double renyi_divergence(const FiniteDistribution& P,
                        const FiniteDistribution& Q, RenyiOrder order) {
  const int m = P.m();
  if (m != Q.m())
    throw std::invalid_argument("renyi_divergence: dimension mismatch");
  if (order.is_infinite()) {
    double best = kNegInf;
    for (int i = 0; i < m; ++i) {
      if (P.probs[i] == 0.0) continue;
      if (Q.probs[i] == 0.0) return kPosInf;
      best = std::max(best, std::log(P.probs[i]) - std::log(Q.probs[i]));
    }
    return best;
  }
  const double lam = order.lambda();
  if (lam == 0.0) {
    double kl = 0.0;
    for (int i = 0; i < m; ++i) {
      if (P.probs[i] == 0.0) continue;
      if (Q.probs[i] == 0.0) return kPosInf;
      kl += P.probs[i] * (std::log(P.probs[i]) - std::log(Q.probs[i]));
    }
    return std::max(kl, 0.0);
  }
  std::vector<double> terms;
  terms.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (P.probs[i] == 0.0) continue;
    if (Q.probs[i] == 0.0) return kPosInf;
    terms.push_back((1.0 + lam) * std::log(P.probs[i]) -
                    lam * std::log(Q.probs[i]));
  }
  return std::max(log_sum_exp(terms) / lam, 0.0);
}

FiniteDistribution scaled_distribution(const FiniteDistribution& P,
                                       double alpha) {
  if (!(alpha > 0.0))
    throw std::invalid_argument("scaled_distribution: alpha must be > 0");
  std::vector<double> lp(P.probs.size(), kNegInf);
  for (std::size_t i = 0; i < lp.size(); ++i)
    if (P.probs[i] > 0.0) lp[i] = alpha * std::log(P.probs[i]);
  const double lz = log_sum_exp(lp);
  std::vector<double> out(lp.size(), 0.0);
  for (std::size_t i = 0; i < lp.size(); ++i)
    if (lp[i] != kNegInf) out[i] = std::exp(lp[i] - lz);
  // renormalize away rounding in the exps
  double s = 0.0;
  for (double x : out) s += x;
  for (double& x : out) x /= s;
  return FiniteDistribution::create(std::move(out));
}

double sundaresan_divergence(const FiniteDistribution& P,
                             const FiniteDistribution& Q, RenyiOrder order) {
  if (order.is_infinite() || order.lambda() <= 0.0)
    throw std::invalid_argument(
        "sundaresan_divergence: requires lambda in (0, inf)");
  const double inv_alpha = 1.0 / (1.0 + order.lambda());
  return renyi_divergence(scaled_distribution(P, inv_alpha),
                          scaled_distribution(Q, inv_alpha), order);
}

SimplexPoint scale_bijection(const SimplexPoint& theta, double lambda) {
  if (!(lambda > 0.0) || std::isinf(lambda))
    throw std::invalid_argument("scale_bijection: lambda must be in (0, inf)");
  const double e = 1.0 / (1.0 + lambda);
  std::vector<double> out(theta.probs.size());
  double kappa = 0.0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::pow(theta.probs[i], e);
    kappa += out[i];
  }
  for (double& x : out) x /= kappa;
  return SimplexPoint::create(std::move(out));
}

namespace {
int output_size(std::span<const FiniteDistribution> rows) {
  if (rows.empty())
    throw std::invalid_argument("alpha_mutual_information: empty prior support");
  const int m = rows[0].m();
  for (const auto& r : rows)
    if (r.m() != m)
      throw std::invalid_argument("channel rows have mismatched alphabets");
  return m;
}

// log of sum_v w_v P^{1+lambda}_{Y|V=v}(y) for each y
std::vector<double> log_escort_mix(std::span<const double> weights,
                                   std::span<const FiniteDistribution> rows,
                                   double lambda) {
  const int m = output_size(rows);
  std::vector<double> lmix(m, kNegInf);
  for (int y = 0; y < m; ++y) {
    std::vector<double> terms;
    for (std::size_t v = 0; v < rows.size(); ++v) {
      if (weights[v] == 0.0 || rows[v].probs[y] == 0.0) continue;
      terms.push_back(std::log(weights[v]) +
                      (1.0 + lambda) * std::log(rows[v].probs[y]));
    }
    lmix[y] = log_sum_exp(terms);
  }
  return lmix;
}
}  // namespace

double alpha_mutual_information(std::span<const double> weights,
                                std::span<const FiniteDistribution> rows,
                                RenyiOrder order) {
  const int m = output_size(rows);
  if (weights.size() != rows.size())
    throw std::invalid_argument("alpha_mutual_information: size mismatch");
  if (order.is_infinite()) {
    // finite-support reduction: ln sum_y max over support of P_{Y|V}(y)
    std::vector<double> terms;
    for (int y = 0; y < m; ++y) {
      double best = 0.0;
      for (std::size_t v = 0; v < rows.size(); ++v)
        if (weights[v] > 0.0) best = std::max(best, rows[v].probs[y]);
      if (best > 0.0) terms.push_back(std::log(best));
    }
    return log_sum_exp(terms);
  }
  const double lam = order.lambda();
  if (lam == 0.0) {
    // mutual information of the joint (weights, rows)
    std::vector<double> out(m, 0.0);
    for (std::size_t v = 0; v < rows.size(); ++v)
      for (int y = 0; y < m; ++y) out[y] += weights[v] * rows[v].probs[y];
    double mi = 0.0;
    for (std::size_t v = 0; v < rows.size(); ++v) {
      if (weights[v] == 0.0) continue;
      for (int y = 0; y < m; ++y) {
        const double p = rows[v].probs[y];
        if (p == 0.0) continue;
        mi += weights[v] * p * (std::log(p) - std::log(out[y]));
      }
    }
    return std::max(mi, 0.0);
  }
  const auto lmix = log_escort_mix(weights, rows, lam);
  std::vector<double> terms;
  terms.reserve(lmix.size());
  for (double lm : lmix)
    if (lm != kNegInf) terms.push_back(lm / (1.0 + lam));
  return std::max((1.0 + lam) / lam * log_sum_exp(terms), 0.0);
}

FiniteDistribution sibson_optimal_output(
    std::span<const double> weights, std::span<const FiniteDistribution> rows,
    RenyiOrder order) {
  if (order.is_infinite() || order.lambda() <= 0.0)
    throw std::invalid_argument(
        "sibson_optimal_output: requires lambda in (0, inf)");
  const double lam = order.lambda();
  const auto lmix = log_escort_mix(weights, rows, lam);
  std::vector<double> lr(lmix.size());
  for (std::size_t y = 0; y < lmix.size(); ++y)
    lr[y] = (lmix[y] == kNegInf) ? kNegInf : lmix[y] / (1.0 + lam);
  const double lz = log_sum_exp(lr);
  std::vector<double> out(lr.size(), 0.0);
  double s = 0.0;
  for (std::size_t y = 0; y < lr.size(); ++y) {
    if (lr[y] != kNegInf) out[y] = std::exp(lr[y] - lz);
    s += out[y];
  }
  for (double& x : out) x /= s;
  return FiniteDistribution::create(std::move(out));
}

double conditional_renyi_divergence(std::span<const double> weights,
                                    std::span<const FiniteDistribution> rows,
                                    const FiniteDistribution& out,
                                    RenyiOrder order) {
  if (order.is_infinite() || order.lambda() <= 0.0)
    throw std::invalid_argument(
        "conditional_renyi_divergence: requires lambda in (0, inf)");
  const double lam = order.lambda();
  const int m = output_size(rows);
  if (out.m() != m)
    throw std::invalid_argument("conditional_renyi_divergence: mismatch");
  const auto lmix = log_escort_mix(weights, rows, lam);
  std::vector<double> terms;
  for (int y = 0; y < m; ++y) {
    if (lmix[y] == kNegInf) continue;
    if (out.probs[y] == 0.0) return kPosInf;
    terms.push_back(lmix[y] - lam * std::log(out.probs[y]));
  }
  return log_sum_exp(terms) / lam;
}

double campbell_cost(const FiniteDistribution& P, const CodeLengths& lengths,
                     RenyiOrder order) {
  if (P.m() != static_cast<int>(lengths.lengths.size()))
    throw std::invalid_argument("campbell_cost: dimension mismatch");
  if (order.is_infinite()) {
    double best = 0.0;
    for (int i = 0; i < P.m(); ++i)
      if (P.probs[i] > 0.0) best = std::max(best, lengths.lengths[i]);
    return best;
  }
  const double lam = order.lambda();
  if (!(lam > 0.0))
    throw std::invalid_argument("campbell_cost: lambda must be in (0, inf]");
  std::vector<double> terms;
  for (int i = 0; i < P.m(); ++i)
    if (P.probs[i] > 0.0)
      terms.push_back(std::log(P.probs[i]) + lam * lengths.lengths[i]);
  return log_sum_exp(terms) / lam;
}

FisherInformation fisher_information(const SimplexPoint& theta) {
  const int k = theta.k();
  for (double t : theta.probs)
    if (t == 0.0)
      throw std::domain_error("fisher_information: zero coordinate");
  FisherInformation f;
  f.matrix.assign(k - 1, std::vector<double>(k - 1, 1.0 / theta.probs[k - 1]));
  for (int i = 0; i < k - 1; ++i) f.matrix[i][i] += 1.0 / theta.probs[i];
  double logdet = 0.0;
  for (double t : theta.probs) logdet -= std::log(t);
  f.determinant = std::exp(logdet);
  return f;
}

double binary_divergence(double tau, double theta) {
  if (!(tau >= 0.0 && tau <= 1.0 && theta >= 0.0 && theta <= 1.0))
    throw std::invalid_argument("binary_divergence: arguments must be in [0,1]");
  double s = 0.0;
  if (tau > 0.0) {
    if (theta == 0.0) return kPosInf;
    s += tau * std::log(tau / theta);
  }
  if (tau < 1.0) {
    if (theta == 1.0) return kPosInf;
    s += (1.0 - tau) * std::log((1.0 - tau) / (1.0 - theta));
  }
  return s;
}

double binary_entropy(double tau) {
  if (!(tau >= 0.0 && tau <= 1.0))
    throw std::invalid_argument("binary_entropy: argument must be in [0,1]");
  double h = 0.0;
  if (tau > 0.0) h -= tau * std::log(tau);
  if (tau < 1.0) h -= (1.0 - tau) * std::log(1.0 - tau);
  return h;
}

}  // namespace renyi
