// SPDX-License-Identifier: Apache-2.0
#ifndef RENYI_MIXTURES_HPP
#define RENYI_MIXTURES_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "renyi/info_measures.hpp"
#include "renyi/simplex.hpp"

namespace renyi {

// Finitely supported prior on simplex points.
struct DiscretePrior {
  std::vector<SimplexPoint> support;
  std::vector<double> weights;

  static DiscretePrior create(std::vector<SimplexPoint> support,
                              std::vector<double> weights);
  static DiscretePrior point_mass(SimplexPoint theta);
};

// Exchangeable distribution on Y^n stored as the log-probability of one
// sequence of each type (not the type-class total).
class ExchangeableMixture {
 public:
  // Validates sum_t exp(log C(n,t) + log_type_prob(t)) = 1 within 1e-9.
  ExchangeableMixture(std::shared_ptr<const TypeSet> types,
                      std::vector<double> log_type_prob);

  std::int64_t n() const { return types_->n(); }
  int k() const { return types_->k(); }
  const TypeSet& types() const { return *types_; }
  std::shared_ptr<const TypeSet> types_ptr() const { return types_; }
  std::size_t size() const { return logp_.size(); }

  double log_type_prob(std::size_t index) const { return logp_[index]; }
  double log_type_prob(const TypeVector& t) const;
  std::span<const double> log_probs() const { return logp_; }

  // |sum of sequence probabilities - 1|
  double normalization_defect() const;

  // CSV rows "t_1,...,t_k,log_prob" with a header, 12 significant digits.
  std::string to_csv() const;

 private:
  std::shared_ptr<const TypeSet> types_;
  std::vector<double> logp_;
};

// ln D_k(alpha_1..alpha_k) = sum ln Gamma(alpha_i) - ln Gamma(sum alpha_i).
LogValue dirichlet_log(std::span<const double> alphas);
double dirichlet_log_half(int k);  // ln D_k(1/2,...,1/2)

// Jeffreys prior log-density at theta; +inf on the boundary.
double jeffreys_prior_log_density(const SimplexPoint& theta);

// Q*: log_type_prob(t) = ln D_k(t+1/2) - ln D_k(1/2,...,1/2).
ExchangeableMixture jeffreys_mixture(std::int64_t n, int k,
                                     std::int64_t cap = 10'000'000);
ExchangeableMixture jeffreys_mixture(std::shared_ptr<const TypeSet> types);

// Point masses near the faces at theta = c ln(n)/n (natural-log units),
// mixed with Jeffreys. epsilon in [0,1]; c in (0, 1/2) nats.
struct ModifiedPriorSpec {
  double epsilon = 0.05;
  double c = 0.25;
  std::int64_t n = 0;

  static ModifiedPriorSpec create(double epsilon, double c, std::int64_t n);
  double face_coordinate() const;  // c ln(n) / n
};

// k = 2: (1-eps) Q* + (eps/2) P^n_{a} + (eps/2) P^n_{1-a}, a = c ln n / n.
ExchangeableMixture modified_mixture_binary(const ModifiedPriorSpec& spec,
                                            std::int64_t cap = 10'000'000);

// k >= 3: (eps/k) sum_i M_i + (1-eps) Q* with
// M_i(t) = a^{t_i} (1-a)^{n-t_i} D_{k-1}(t_{-i}+1/2) / D_{k-1}(1/2,...,1/2).
ExchangeableMixture modified_mixture_general(const ModifiedPriorSpec& spec,
                                             int k,
                                             std::int64_t cap = 10'000'000);

// D_{1+lambda}(P_{Y^n|V=theta} || Q) as the exact type-class sum
// (1/lambda) ln sum_t C(n,t) exp((1+lambda) LL(theta,t) - lambda lq(t)).
// Returns +inf when Q assigns zero to a type with positive likelihood.
double divergence_to_mixture(const SimplexPoint& theta,
                             const ExchangeableMixture& Q, RenyiOrder order);

struct VertexDivergence {
  // ln [Gamma(l/2) Gamma(n+k/2)] / [Gamma(k/2) Gamma(n+l/2)]
  double correction = 0.0;
  // for l = 1, the full divergence -ln Q*(constant sequence); divergences
  // from a point mass coincide at every order, so lambda does not enter
  std::optional<double> full_value;
};

// Face decomposition of the divergence to Jeffreys' mixture. 1 <= l <= k.
VertexDivergence vertex_divergence_closed_form(std::int64_t n, int k, int l,
                                               RenyiOrder order);

}  // namespace renyi

#endif  // RENYI_MIXTURES_HPP
