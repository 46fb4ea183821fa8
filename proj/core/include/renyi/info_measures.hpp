// SPDX-License-Identifier: Apache-2.0
#ifndef RENYI_INFO_MEASURES_HPP
#define RENYI_INFO_MEASURES_HPP

#include <span>
#include <vector>

#include "renyi/simplex.hpp"

namespace renyi {

// Risk-aversion parameter lambda >= 0 (order alpha = 1+lambda) or infinity.
// Negative lambda (the risk-seeking range) is rejected at construction.
class RenyiOrder {
 public:
  static RenyiOrder from_lambda(double lambda);
  static RenyiOrder infinity();

  double lambda() const { return lambda_; }
  double alpha() const { return is_inf_ ? kPosInf : 1.0 + lambda_; }
  bool is_infinite() const { return is_inf_; }
  bool is_kl() const { return !is_inf_ && lambda_ == 0.0; }

 private:
  RenyiOrder(double lambda, bool inf) : lambda_(lambda), is_inf_(inf) {}
  double lambda_;
  bool is_inf_;
};

// Probability vector on a finite alphabet of size m >= 1.
struct FiniteDistribution {
  std::vector<double> probs;

  int m() const { return static_cast<int>(probs.size()); }
  static FiniteDistribution create(std::vector<double> p);
};

// Per-symbol code lengths, in log-base units (nats internally).
struct CodeLengths {
  std::vector<double> lengths;
  static CodeLengths create(std::vector<double> lens);
};

// i_{P||Q}(a) = ln P(a) - ln Q(a). Throws when P(a) > 0 and Q(a) = 0.
double relative_information(const FiniteDistribution& P,
                            const FiniteDistribution& Q, int a);

// D_alpha(P||Q) in nats. alpha = 1 is relative entropy, alpha = inf the
// maximal relative information; +inf is returned (not thrown) when P is not
// dominated by Q and alpha > 1.
double renyi_divergence(const FiniteDistribution& P,
                        const FiniteDistribution& Q, RenyiOrder order);

// Escort distribution P^alpha / sum P^alpha.
FiniteDistribution scaled_distribution(const FiniteDistribution& P,
                                       double alpha);

// S_{1+lambda}(P||Q) = D_{1+lambda}(scaled P || scaled Q), scaling exponent
// 1/(1+lambda). Requires finite positive lambda.
double sundaresan_divergence(const FiniteDistribution& P,
                             const FiniteDistribution& Q, RenyiOrder order);

// f_lambda(theta): coordinate-wise theta_i^{1/(1+lambda)}, renormalized.
SimplexPoint scale_bijection(const SimplexPoint& theta, double lambda);

// Sibson identity: I_{1+lambda}(P_V, P_{Y|V}) =
//   ((1+lambda)/lambda) ln sum_y (sum_v w_v P_{Y|V=v}(y)^{1+lambda})^{1/(1+lambda)}.
// order = infinity evaluates ln sum_y max_v P_{Y|V=v}(y) over the support.
double alpha_mutual_information(std::span<const double> weights,
                                std::span<const FiniteDistribution> rows,
                                RenyiOrder order);

// The minimizing output distribution R_Y(y) proportional to
// (sum_v w_v P^{1+lambda}_{Y|V=v}(y))^{1/(1+lambda)}.
FiniteDistribution sibson_optimal_output(
    std::span<const double> weights, std::span<const FiniteDistribution> rows,
    RenyiOrder order);

// Conditional Renyi divergence D_{1+lambda}(P_{Y|V} || Q_Y | P_V) =
//   (1/lambda) ln sum_y sum_v w_v P^{1+lambda}(y) Q(y)^{-lambda}.
double conditional_renyi_divergence(std::span<const double> weights,
                                    std::span<const FiniteDistribution> rows,
                                    const FiniteDistribution& out,
                                    RenyiOrder order);

// Campbell cost (1/lambda) ln E[exp(lambda l(Y))]; max length on the support
// of P at lambda = infinity. Requires lambda > 0 or infinity.
double campbell_cost(const FiniteDistribution& P, const CodeLengths& lengths,
                     RenyiOrder order);

struct FisherInformation {
  std::vector<std::vector<double>> matrix;  // (k-1) x (k-1)
  double determinant = 0.0;                 // closed form 1/prod theta_i
};

// diag(1/theta_1..1/theta_{k-1}) + (1/theta_k) * ones. Throws on a zero
// coordinate.
FisherInformation fisher_information(const SimplexPoint& theta);

// Binary relative entropy d(tau||theta) and entropy h(tau), nats, with the
// usual boundary conventions.
double binary_divergence(double tau, double theta);
double binary_entropy(double tau);

}  // namespace renyi

#endif  // RENYI_INFO_MEASURES_HPP
