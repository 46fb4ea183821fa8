// SPDX-License-Identifier: Apache-2.0
#include "renyi/mixtures.hpp"

#include <cmath>
#include <stdexcept>

#include "renyi/format.hpp"

namespace renyi {

DiscretePrior DiscretePrior::create(std::vector<SimplexPoint> support,
                                    std::vector<double> weights) {
  if (support.empty())
    throw std::invalid_argument("DiscretePrior: empty support");
  if (support.size() != weights.size())
    throw std::invalid_argument("DiscretePrior: size mismatch");
  const int k = support[0].k();
  double sum = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i].k() != k)
      throw std::invalid_argument("DiscretePrior: mixed alphabet sizes");
    if (!(weights[i] >= 0.0))
      throw std::invalid_argument("DiscretePrior: negative weight");
    sum += weights[i];
  }
  if (std::fabs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("DiscretePrior: weights sum to " +
                                std::to_string(sum));
  DiscretePrior p;
  p.support = std::move(support);
  p.weights = std::move(weights);
  return p;
}

DiscretePrior DiscretePrior::point_mass(SimplexPoint theta) {
  return create({std::move(theta)}, {1.0});
}

ExchangeableMixture::ExchangeableMixture(
    std::shared_ptr<const TypeSet> types, std::vector<double> log_type_prob)
    : types_(std::move(types)), logp_(std::move(log_type_prob)) {
  if (logp_.size() != types_->size())
    throw std::invalid_argument("ExchangeableMixture: size mismatch");
  for (double lp : logp_)
    if (std::isnan(lp) || lp == kPosInf)
      throw std::invalid_argument("ExchangeableMixture: non-finite log prob");
  const double defect = normalization_defect();
  if (defect > 1e-9)
    throw std::invalid_argument(
        "ExchangeableMixture: normalization defect " + std::to_string(defect));
}

double ExchangeableMixture::normalization_defect() const {
  std::vector<double> terms(logp_.size());
  for (std::size_t i = 0; i < logp_.size(); ++i)
    terms[i] = types_->log_multinomial(i) + logp_[i];
  return std::fabs(std::exp(log_sum_exp(terms)) - 1.0);
}

namespace {
// Rank of a type in the enumeration order (first coordinate descending).
std::size_t type_rank(const TypeSet& ts, std::span<const std::int64_t> t) {
  const int k = ts.k();
  std::int64_t rem = ts.n();
  std::size_t rank = 0;
  for (int pos = 0; pos + 1 < k; ++pos) {
    for (std::int64_t c = rem; c > t[pos]; --c) {
      const std::int64_t cnt = composition_count(rem - c, k - pos - 1);
      rank += static_cast<std::size_t>(cnt);
    }
    rem -= t[pos];
  }
  return rank;
}
}  // namespace

double ExchangeableMixture::log_type_prob(const TypeVector& t) const {
  if (t.k() != k() || t.n != n())
    throw std::invalid_argument("log_type_prob: type does not match mixture");
  return logp_[type_rank(*types_, t.counts)];
}

std::string ExchangeableMixture::to_csv() const {
  std::string out;
  for (int i = 1; i <= k(); ++i) {
    out += "t_" + std::to_string(i) + ",";
  }
  out += "log_prob\n";
  for (std::size_t i = 0; i < size(); ++i) {
    for (auto c : types_->counts(i)) {
      out += std::to_string(c);
      out += ',';
    }
    out += format_g12(logp_[i]);
    out += '\n';
  }
  return out;
}

LogValue dirichlet_log(std::span<const double> alphas) {
  if (alphas.empty()) throw std::invalid_argument("dirichlet_log: empty");
  double s = 0.0, tot = 0.0;
  for (double a : alphas) {
    if (!(a > 0.0))
      throw std::invalid_argument("dirichlet_log: nonpositive argument");
    s += std::lgamma(a);
    tot += a;
  }
  return LogValue::from_log(s - std::lgamma(tot));
}

double dirichlet_log_half(int k) {
  return k * std::lgamma(0.5) - std::lgamma(0.5 * k);
}

double jeffreys_prior_log_density(const SimplexPoint& theta) {
  double s = 0.0;
  for (double t : theta.probs) {
    if (t == 0.0) return kPosInf;
    s -= 0.5 * std::log(t);
  }
  return s - dirichlet_log_half(theta.k());
}

ExchangeableMixture jeffreys_mixture(std::shared_ptr<const TypeSet> types) {
  const int k = types->k();
  const double lden = dirichlet_log_half(k);
  std::vector<double> lp(types->size());
  for (std::size_t i = 0; i < types->size(); ++i) {
    auto t = types->counts(i);
    double num = 0.0;
    for (auto c : t) num += std::lgamma(c + 0.5);
    num -= std::lgamma(static_cast<double>(types->n()) + 0.5 * k);
    lp[i] = num - lden;
  }
  return ExchangeableMixture(std::move(types), std::move(lp));
}

ExchangeableMixture jeffreys_mixture(std::int64_t n, int k, std::int64_t cap) {
  return jeffreys_mixture(
      std::make_shared<const TypeSet>(enumerate_types(n, k, cap)));
}

ModifiedPriorSpec ModifiedPriorSpec::create(double epsilon, double c,
                                            std::int64_t n) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("ModifiedPriorSpec: epsilon must be in [0,1]");
  if (!(c > 0.0 && c < 0.5))
    throw std::invalid_argument(
        "ModifiedPriorSpec: c must be in (0, 1/2) in natural-log units");
  if (n < 1) throw std::invalid_argument("ModifiedPriorSpec: n must be >= 1");
  ModifiedPriorSpec s;
  s.epsilon = epsilon;
  s.c = c;
  s.n = n;
  return s;
}

double ModifiedPriorSpec::face_coordinate() const {
  return c * std::log(static_cast<double>(n)) / static_cast<double>(n);
}

ExchangeableMixture modified_mixture_binary(const ModifiedPriorSpec& spec,
                                            std::int64_t cap) {
  const double a = spec.face_coordinate();
  if (!(a < 0.5))
    throw std::invalid_argument("modified_mixture_binary: c ln n / n >= 1/k");
  auto types = std::make_shared<const TypeSet>(enumerate_types(spec.n, 2, cap));
  const auto jef = jeffreys_mixture(types);
  const double la = std::log(a), l1a = std::log1p(-a);
  std::vector<double> lp(types->size());
  const double eps = spec.epsilon;
  for (std::size_t i = 0; i < types->size(); ++i) {
    auto t = types->counts(i);
    const double t1 = t[0], t2 = t[1];
    double comps[3];
    std::size_t m = 0;
    if (eps < 1.0) comps[m++] = std::log1p(-eps) + jef.log_type_prob(i);
    if (eps > 0.0) {
      comps[m++] = std::log(eps / 2) + t1 * la + t2 * l1a;
      comps[m++] = std::log(eps / 2) + t1 * l1a + t2 * la;
    }
    lp[i] = log_sum_exp(std::span<const double>(comps, m));
  }
  return ExchangeableMixture(std::move(types), std::move(lp));
}

ExchangeableMixture modified_mixture_general(const ModifiedPriorSpec& spec,
                                             int k, std::int64_t cap) {
  if (k < 3)
    throw std::invalid_argument("modified_mixture_general: requires k >= 3");
  const double a = spec.face_coordinate();
  if (!(a < 1.0 / k))
    throw std::invalid_argument("modified_mixture_general: c ln n / n >= 1/k");
  auto types = std::make_shared<const TypeSet>(enumerate_types(spec.n, k, cap));
  const auto jef = jeffreys_mixture(types);
  const double la = std::log(a), l1a = std::log1p(-a);
  const double lden_face = dirichlet_log_half(k - 1);
  const double eps = spec.epsilon;
  const std::int64_t n = spec.n;
  std::vector<double> lp(types->size());
  std::vector<double> comps;
  for (std::size_t i = 0; i < types->size(); ++i) {
    auto t = types->counts(i);
    double lg_sum = 0.0;  // sum of lgamma(t_j + 1/2) over all j
    for (auto c : t) lg_sum += std::lgamma(c + 0.5);
    comps.clear();
    if (eps < 1.0) comps.push_back(std::log1p(-eps) + jef.log_type_prob(i));
    if (eps > 0.0) {
      for (int face = 0; face < k; ++face) {
        const double ti = t[face];
        const double lg_rest = lg_sum - std::lgamma(ti + 0.5);
        const double ldir =
            lg_rest - std::lgamma(n - ti + 0.5 * (k - 1)) - lden_face;
        comps.push_back(std::log(eps / k) + ti * la + (n - ti) * l1a + ldir);
      }
    }
    lp[i] = log_sum_exp(comps);
  }
  return ExchangeableMixture(std::move(types), std::move(lp));
}

double divergence_to_mixture(const SimplexPoint& theta,
                             const ExchangeableMixture& Q, RenyiOrder order) {
  if (theta.k() != Q.k())
    throw std::invalid_argument("divergence_to_mixture: dimension mismatch");
  if (order.is_infinite() || order.lambda() <= 0.0)
    throw std::invalid_argument(
        "divergence_to_mixture: requires lambda in (0, inf)");
  const double lam = order.lambda();
  const TypeSet& ts = Q.types();
  std::vector<double> terms;
  terms.reserve(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double ll = type_log_likelihood(theta.probs, ts.counts(i));
    if (ll == kNegInf) continue;
    const double lq = Q.log_type_prob(i);
    if (lq == kNegInf) return kPosInf;
    terms.push_back(ts.log_multinomial(i) + (1.0 + lam) * ll - lam * lq);
  }
  return log_sum_exp(terms) / lam;
}

VertexDivergence vertex_divergence_closed_form(std::int64_t n, int k, int l,
                                               RenyiOrder order) {
  if (l < 1 || l > k)
    throw std::invalid_argument("vertex_divergence_closed_form: invalid l");
  if (!order.is_infinite() && !(order.lambda() >= 0.0))
    throw std::invalid_argument("vertex_divergence_closed_form: bad order");
  VertexDivergence v;
  v.correction = std::lgamma(0.5 * l) + std::lgamma(n + 0.5 * k) -
                 std::lgamma(0.5 * k) - std::lgamma(n + 0.5 * l);
  if (l == 1) v.full_value = v.correction;
  return v;
}

}  // namespace renyi
