// SPDX-License-Identifier: Apache-2.0
#ifndef RENYI_SOLVER_HPP
#define RENYI_SOLVER_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "renyi/mixtures.hpp"

namespace renyi {

// Discretization of the simplex used for both sides of the game.
struct ParameterGrid {
  std::vector<SimplexPoint> points;
  std::string descriptor;

  int k() const { return points.empty() ? 0 : points[0].k(); }
  std::size_t size() const { return points.size(); }

  // m equally spaced points on [0,1] (both vertices included); m >= 2.
  static ParameterGrid uniform_binary(int m);
  // Barycentric lattice of the given denominator on the (k-1)-simplex;
  // includes all vertices and edge midpoints when denom is even.
  static ParameterGrid barycentric(int k, int denom);
  // Arbitrary point list (distinctness checked, vertex coverage not required).
  static ParameterGrid from_points(std::vector<SimplexPoint> pts,
                                   std::string descriptor);
};

struct MaximinResult {
  DiscretePrior prior;   // support pruned below 1e-14 and renormalized
  double value = 0.0;    // I_{1+lambda}(prior) in nats, a grid-game lower bound
  double gap = 0.0;      // max over grid of D(. || sibson output) minus value
  int iterations = 0;
  bool converged = false;
};

// Conditional-gradient ascent of the Sibson objective over priors on the
// grid, with golden-section line search and the duality gap
//   max_j D_{1+lambda}(P^n_{theta_j} || Q_w) - I_{1+lambda}(w)
// as the stopping rule. Non-convergence returns the best iterate.
MaximinResult maximin_solve(const ParameterGrid& grid, std::int64_t n,
                            RenyiOrder order, double tol,
                            int max_iterations = 200000);

// Sibson-optimal output on Y^n for an exchangeable prior, stored per type:
// log q(t) = (1/(1+lambda)) ln sum_v w_v exp((1+lambda) LL(theta_v, t)),
// normalized over sequences.
ExchangeableMixture equalizer_mixture(const DiscretePrior& prior,
                                      std::int64_t n, RenyiOrder order,
                                      std::int64_t cap = 10'000'000);

struct MinimaxUpper {
  double value = 0.0;
  std::size_t argmax_index = 0;  // lowest grid index among ties
};

// sup over the grid of divergence_to_mixture(theta, Q, lambda).
MinimaxUpper minimax_upper(const ExchangeableMixture& Q,
                           const ParameterGrid& grid, RenyiOrder order);

// Certified lower/upper pair for the grid-restricted game.
struct RedundancyBracket {
  double lower = 0.0;  // I_{1+lambda}(P*) for the returned prior
  double upper = 0.0;  // sup-grid D(. || equalizer mixture of P*)
  double gap = 0.0;
  int iterations = 0;
  double tolerance = 0.0;
  bool certified = false;
  SimplexPoint argmax_theta;
  DiscretePrior prior;
};

RedundancyBracket renyi_redundancy(std::int64_t n, int k, RenyiOrder order,
                                   const ParameterGrid& grid, double tol,
                                   double certify_threshold = 1e-4);

// alpha-mutual information of order 1+lambda between V ~ prior and Y^n,
// evaluated with the Sibson formula aggregated over types.
double alpha_mutual_information_iid(const DiscretePrior& prior,
                                    std::int64_t n, RenyiOrder order,
                                    std::int64_t cap = 10'000'000);

// Exact NML log-normalizer ln sum_t C(n,t) exp(-n H(t/n)).
double shtarkov_regret(std::int64_t n, int k, std::int64_t cap = 10'000'000);

struct BlahutArimotoResult {
  double value = 0.0;  // I(P*) lower estimate for the grid channel
  double upper = 0.0;  // max_j D(W_j || q) at the final iterate
  int iterations = 0;
  bool converged = false;
};

// Classical redundancy R_0 over the grid via Blahut-Arimoto alternating
// maximization on the type-aggregated channel.
BlahutArimotoResult classical_redundancy_r0(std::int64_t n, int k,
                                            const ParameterGrid& grid,
                                            double tol,
                                            int max_iterations = 100000);

// (k-1)/2 ln(n / (2 pi (1+lambda)^{1/lambda})) + ln(Gamma^k(1/2)/Gamma(k/2)).
double asymptotic_prediction(std::int64_t n, int k, RenyiOrder order);

// Theorem-2 constant: ln(Gamma^k(1/2)/Gamma(k/2)) - (k-1)/(2 lambda) ln(1+lambda).
double asymptotic_constant(int k, RenyiOrder order);

// Z-channel with 1/2 crossover: rows (1,0) and (1/2,1/2).
double zchannel_value(double lambda);          // ln(1 + (2^{1+l}-1)^{-1/l})
double zchannel_optimal_prior(double lambda);  // P_V(1), weight of (1/2,1/2)
ParameterGrid zchannel_grid();

}  // namespace renyi

#endif  // RENYI_SOLVER_HPP
