// SPDX-License-Identifier: Apache-2.0
#ifndef RENYI_SIMPLEX_HPP
#define RENYI_SIMPLEX_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "renyi/logspace.hpp"

namespace renyi {

// Probability vector on an alphabet of size k >= 2.
struct SimplexPoint {
  std::vector<double> probs;

  int k() const { return static_cast<int>(probs.size()); }

  // Validates: k >= 2, entries >= 0, sum within 1e-12 of 1.
  static SimplexPoint create(std::vector<double> p);
  // Bernoulli(theta) as (theta, 1-theta).
  static SimplexPoint binary(double theta);
};

// Composition of n into k nonnegative counts.
struct TypeVector {
  std::vector<std::int64_t> counts;
  std::int64_t n = 0;

  int k() const { return static_cast<int>(counts.size()); }

  static TypeVector create(std::vector<std::int64_t> counts);
};

// Flat container for every composition of n into k parts, in the order
// produced by enumerate_types (first coordinate descending, recursively).
class TypeSet {
 public:
  TypeSet(std::int64_t n, int k, std::vector<std::int32_t> flat);

  std::int64_t n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return count_; }
  std::span<const std::int32_t> counts(std::size_t i) const {
    return {flat_.data() + i * static_cast<std::size_t>(k_),
            static_cast<std::size_t>(k_)};
  }
  TypeVector type(std::size_t i) const;
  // log of n!/(t_1! ... t_k!) for row i (precomputed).
  double log_multinomial(std::size_t i) const { return log_multi_[i]; }
  // true iff every count of row i is >= 1
  bool all_positive(std::size_t i) const;

 private:
  std::int64_t n_;
  int k_;
  std::size_t count_;
  std::vector<std::int32_t> flat_;
  std::vector<double> log_multi_;
};

// Number of compositions C(n+k-1, k-1), or -1 on overflow past 2^62.
std::int64_t composition_count(std::int64_t n, int k);

// All compositions of n into k parts, first coordinate descending.
// Throws std::length_error naming the count when it exceeds `cap`.
TypeSet enumerate_types(std::int64_t n, int k,
                        std::int64_t cap = 10'000'000);

// ln Gamma(x); throws std::domain_error for x <= 0.
double log_gamma(double x);

// ln of the multinomial coefficient n! / prod t_i!.
LogValue log_multinomial(const TypeVector& t);
double log_multinomial(std::span<const std::int32_t> counts, std::int64_t n);

// sum_i t_i ln(theta_i) with 0*ln(0) = 0; log-zero when some t_i > 0 has
// theta_i = 0.
LogValue type_log_likelihood(const SimplexPoint& theta, const TypeVector& t);
double type_log_likelihood(std::span<const double> theta,
                           std::span<const std::int32_t> counts);

// Empirical distribution t/n of a type.
SimplexPoint empirical_distribution(const TypeVector& t);

// Entropy of the empirical distribution, in nats.
double empirical_entropy(std::span<const std::int32_t> counts, std::int64_t n);

}  // namespace renyi

#endif  // RENYI_SIMPLEX_HPP
