// SPDX-License-Identifier: Apache-2.0
#ifndef RENYI_LOGSPACE_HPP
#define RENYI_LOGSPACE_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace renyi {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();

// log(e^a + e^b) without overflow; -inf encodes zero.
inline double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  if (a == kPosInf || b == kPosInf) return kPosInf;
  const double hi = (a > b) ? a : b;
  const double lo = (a > b) ? b : a;
  return hi + std::log1p(std::exp(lo - hi));
}

// Signed value stored as (log|x|, sign). sign in {-1,0,+1}; sign==0 means x==0.
class LogValue {
 public:
  LogValue() : log_abs_(kNegInf), sign_(0) {}

  static LogValue zero() { return LogValue(); }

  static LogValue from_log(double log_abs, int sign = +1) {
    LogValue v;
    if (log_abs == kNegInf || sign == 0) return v;
    v.log_abs_ = log_abs;
    v.sign_ = sign < 0 ? -1 : +1;
    return v;
  }

  static LogValue from_linear(double x) {
    if (x == 0.0) return LogValue();
    return from_log(std::log(std::fabs(x)), x < 0 ? -1 : +1);
  }

  double log() const { return log_abs_; }  // log of |x|; -inf for zero
  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }

  double to_double() const {
    if (sign_ == 0) return 0.0;
    return sign_ * std::exp(log_abs_);
  }

  LogValue operator*(const LogValue& o) const {
    if (sign_ == 0 || o.sign_ == 0) return LogValue();
    return from_log(log_abs_ + o.log_abs_, sign_ * o.sign_);
  }

  LogValue operator+(const LogValue& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    if (sign_ == o.sign_) return from_log(log_add(log_abs_, o.log_abs_), sign_);
    // opposite signs: subtract the smaller magnitude from the larger
    if (log_abs_ == o.log_abs_) return LogValue();
    const bool mine = log_abs_ > o.log_abs_;
    const double hi = mine ? log_abs_ : o.log_abs_;
    const double lo = mine ? o.log_abs_ : log_abs_;
    const double diff = hi + std::log1p(-std::exp(lo - hi));
    return from_log(diff, mine ? sign_ : o.sign_);
  }

  LogValue operator-(const LogValue& o) const {
    return *this + from_log(o.log_abs_, -o.sign_);
  }

  LogValue pow(double e) const {
    if (sign_ == 0) return LogValue();
    return from_log(log_abs_ * e, sign_);
  }

 private:
  double log_abs_;
  int sign_;
};

// Pairwise (tree) reduction in a fixed order: results do not depend on any
// parallel schedule, only on element order.
inline double tree_sum(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n == 0) return 0.0;
  if (n == 1) return xs[0];
  if (n <= 8) {
    double s = xs[0];
    for (std::size_t i = 1; i < n; ++i) s += xs[i];
    return s;
  }
  const std::size_t half = n / 2;
  return tree_sum(xs.subspan(0, half)) + tree_sum(xs.subspan(half));
}

inline double tree_sum(const std::vector<double>& xs) {
  return tree_sum(std::span<const double>(xs.data(), xs.size()));
}

// log(sum e^{x_i}) over a span; tolerates -inf entries, returns -inf on empty
// input. Accumulation is a fixed-order tree reduction.
inline double log_sum_exp(std::span<const double> xs) {
  double hi = kNegInf;
  for (double x : xs) {
    if (x == kPosInf) return kPosInf;
    if (x > hi) hi = x;
  }
  if (hi == kNegInf) return kNegInf;
  std::vector<double> scaled(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    scaled[i] = (xs[i] == kNegInf) ? 0.0 : std::exp(xs[i] - hi);
  return hi + std::log(tree_sum(scaled));
}

inline double log_sum_exp(const std::vector<double>& xs) {
  return log_sum_exp(std::span<const double>(xs.data(), xs.size()));
}

}  // namespace renyi

#endif  // RENYI_LOGSPACE_HPP
