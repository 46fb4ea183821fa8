// SPDX-License-Identifier: Apache-2.0
#include "renyi/simplex.hpp"

#include <cmath>
#include <stdexcept>

namespace renyi {

SimplexPoint SimplexPoint::create(std::vector<double> p) {
  if (p.size() < 2) throw std::invalid_argument("SimplexPoint: k must be >= 2");
  double sum = 0.0;
  for (double x : p) {
    if (!(x >= 0.0)) throw std::invalid_argument("SimplexPoint: negative entry");
    sum += x;
  }
  if (std::fabs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("SimplexPoint: entries sum to " +
                                std::to_string(sum));
  SimplexPoint s;
  s.probs = std::move(p);
  return s;
}

SimplexPoint SimplexPoint::binary(double theta) {
  return create({theta, 1.0 - theta});
}

TypeVector TypeVector::create(std::vector<std::int64_t> counts) {
  if (counts.size() < 2) throw std::invalid_argument("TypeVector: k must be >= 2");
  std::int64_t n = 0;
  for (auto c : counts) {
    if (c < 0) throw std::invalid_argument("TypeVector: negative count");
    n += c;
  }
  if (n < 1) throw std::invalid_argument("TypeVector: n must be >= 1");
  TypeVector t;
  t.counts = std::move(counts);
  t.n = n;
  return t;
}

TypeSet::TypeSet(std::int64_t n, int k, std::vector<std::int32_t> flat)
    : n_(n), k_(k), count_(flat.size() / static_cast<std::size_t>(k)),
      flat_(std::move(flat)) {
  log_multi_.resize(count_);
  for (std::size_t i = 0; i < count_; ++i)
    log_multi_[i] = renyi::log_multinomial(counts(i), n_);
}

TypeVector TypeSet::type(std::size_t i) const {
  auto c = counts(i);
  std::vector<std::int64_t> v(c.begin(), c.end());
  return TypeVector::create(std::move(v));
}

bool TypeSet::all_positive(std::size_t i) const {
  for (auto c : counts(i))
    if (c == 0) return false;
  return true;
}

std::int64_t composition_count(std::int64_t n, int k) {
  // C(n+k-1, k-1) with overflow guard
  long double acc = 1.0L;
  std::int64_t r = k - 1;
  for (std::int64_t i = 1; i <= r; ++i) acc = acc * (n + i) / i;
  if (acc > 4.6e18L) return -1;
  return static_cast<std::int64_t>(acc + 0.5L);
}

namespace {
void emit_types(std::int64_t rem, int pos, int k,
                std::vector<std::int32_t>& cur,
                std::vector<std::int32_t>& out) {
  if (pos == k - 1) {
    cur[pos] = static_cast<std::int32_t>(rem);
    out.insert(out.end(), cur.begin(), cur.end());
    return;
  }
  for (std::int64_t c = rem; c >= 0; --c) {
    cur[pos] = static_cast<std::int32_t>(c);
    emit_types(rem - c, pos + 1, k, cur, out);
  }
}
}  // namespace

TypeSet enumerate_types(std::int64_t n, int k, std::int64_t cap) {
  if (n < 1) throw std::invalid_argument("enumerate_types: n must be >= 1");
  if (k < 2) throw std::invalid_argument("enumerate_types: k must be >= 2");
  const std::int64_t count = composition_count(n, k);
  if (count < 0 || count > cap)
    throw std::length_error("enumerate_types: " +
                            (count < 0 ? std::string(">2^62")
                                       : std::to_string(count)) +
                            " types exceed cap " + std::to_string(cap));
  std::vector<std::int32_t> flat;
  flat.reserve(static_cast<std::size_t>(count) * static_cast<std::size_t>(k));
  std::vector<std::int32_t> cur(static_cast<std::size_t>(k));
  emit_types(n, 0, k, cur, flat);
  return TypeSet(n, k, std::move(flat));
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: x must be > 0");
  return std::lgamma(x);
}

double log_multinomial(std::span<const std::int32_t> counts, std::int64_t n) {
  double s = std::lgamma(static_cast<double>(n) + 1.0);
  for (auto c : counts) s -= std::lgamma(static_cast<double>(c) + 1.0);
  return s;
}

LogValue log_multinomial(const TypeVector& t) {
  double s = std::lgamma(static_cast<double>(t.n) + 1.0);
  for (auto c : t.counts) s -= std::lgamma(static_cast<double>(c) + 1.0);
  return LogValue::from_log(s);
}

double type_log_likelihood(std::span<const double> theta,
                           std::span<const std::int32_t> counts) {
  double s = 0.0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (counts[i] == 0) continue;  // 0*ln(0) = 0
    if (theta[i] == 0.0) return kNegInf;
    s += static_cast<double>(counts[i]) * std::log(theta[i]);
  }
  return s;
}

LogValue type_log_likelihood(const SimplexPoint& theta, const TypeVector& t) {
  if (theta.k() != t.k())
    throw std::invalid_argument("type_log_likelihood: dimension mismatch");
  std::vector<std::int32_t> c(t.counts.begin(), t.counts.end());
  const double lv = type_log_likelihood(
      std::span<const double>(theta.probs),
      std::span<const std::int32_t>(c));
  return lv == kNegInf ? LogValue::zero() : LogValue::from_log(lv);
}

SimplexPoint empirical_distribution(const TypeVector& t) {
  std::vector<double> p(t.counts.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    p[i] = static_cast<double>(t.counts[i]) / static_cast<double>(t.n);
  return SimplexPoint::create(std::move(p));
}

double empirical_entropy(std::span<const std::int32_t> counts,
                         std::int64_t n) {
  double h = 0.0;
  for (auto c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(n);
    h -= p * std::log(p);
  }
  return h;
}

}  // namespace renyi
