// SPDX-License-Identifier: Apache-2.0
#ifndef RENYI_BOUNDS_AUDIT_HPP
#define RENYI_BOUNDS_AUDIT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "renyi/mixtures.hpp"
#include "renyi/solver.hpp"

namespace renyi {

// Outcome of one inequality audit. max_violation <= 0 means the bound held
// everywhere on the audited domain; the witness holds the inputs achieving
// the extreme slack (replaying them through the same *_violation function
// reproduces max_violation bit-exactly).
struct BoundReport {
  std::string name;
  std::string domain;
  double max_violation = kNegInf;
  std::map<std::string, double> witness;
  std::map<std::string, double> aux;  // measured extras (trend values etc.)

  bool satisfied() const { return max_violation <= 0.0; }
};

struct RobbinsBounds {
  LogValue lower;  // log-space lower bound on C(n, t)
  LogValue exact;
  LogValue upper;
};

// Robbins' sharpening of Stirling for the multinomial coefficient; requires
// every count >= 1.
RobbinsBounds robbins_multinomial_bounds(const TypeVector& t);
double robbins_violation(const TypeVector& t);  // max one-sided defect, logs

struct StirlingGammaBounds {
  double log_approx;        // ln( sqrt(2 pi) x^{x-1/2} e^{-x} )
  double remainder_bound;   // e^{1/(12x)} - 1
};

StirlingGammaBounds stirling_gamma_bounds(double x);
double stirling_violation(double x);  // |Gamma/approx - 1| - bound

struct PaperConstants {
  double C1 = 0.0;
  double C2 = 0.0;
  double C3 = 0.0;
  double C_tilde = 0.0;
  double M_uniform = 0.0;
};

PaperConstants constants(int k, double lambda);

// K(k, lambda, n, t) of the Laplace machinery; counts may be real-valued.
double laplace_K(int k, double lambda, std::int64_t n,
                 std::span<const double> t);
double laplace_K(int k, double lambda, std::int64_t n,
                 std::span<const std::int32_t> t);
// Windowed bound M(k, lambda, n, c, delta) = K at c(1-delta)u.
double laplace_K_window_bound(int k, double lambda, std::int64_t n, double c,
                              double delta);

// Split of the divergence sum into types with a zero count (V) and
// all-positive types (W): (1/lambda) ln(V + W) = D_{1+lambda}(P^n_theta||Q*).
struct EdgeMassSplit {
  double log_V = kNegInf;
  double log_W = kNegInf;
  double log_bound = kNegInf;  // ln( C~ n^{-(1+lambda)c + lambda(k-1)/2} )
  double divergence = 0.0;     // recombined (1/lambda) ln(V+W)
};

EdgeMassSplit edge_mass_split(std::int64_t n, int k, double lambda,
                              const SimplexPoint& theta, double c);

// Uniform divergence bound (Lemma 3): relative information against Q* is at
// most (k-1)/2 ln n + ln C1(k). c1_scale perturbs C1 for fault injection.
BoundReport audit_uniform_divergence_bound(std::int64_t n_max, int k,
                                           double lambda, int thetas_per_n,
                                           std::uint64_t seed,
                                           double c1_scale = 1.0);

// Lemma 4: V <= C~(k,lambda) n^{-(1+lambda)c + lambda(k-1)/2} on R_0.
BoundReport audit_edge_mass_bound(std::int64_t n, int k, double lambda,
                                  const SimplexPoint& theta, double c);

// Lemma 5: T(k,lambda,theta,n) uniform upper bound.
double frak_T(std::int64_t n, int k, double lambda, const SimplexPoint& theta);
double frak_T_bound(int k, double lambda);
BoundReport audit_T_bound(std::int64_t n_max, int k, double lambda,
                          int theta_grid);

// Lemmas 6-7: uniform and windowed bounds on K. Reports the measured
// |M(k,lambda,n_trend,c,delta) - 1| in aux["M_window_minus_1"].
BoundReport audit_K_bounds(std::int64_t n_max, int k, double lambda, double c,
                           double delta, std::int64_t n_trend = 4096);

// Binary Laplace split S1+S2+S3 = frak_S (Eqs. 134-137).
struct LaplaceBinary {
  double S1 = 0.0;
  double S2 = 0.0;
  double S3 = 0.0;
  double total() const { return S1 + S2 + S3; }
};

LaplaceBinary laplace_decomposition_binary(std::int64_t n, double lambda,
                                           double theta1, double delta,
                                           double c);
double frak_S_binary(std::int64_t n, double lambda, double theta1);

// General-k split S1 (types in the delta-window N^theta_delta) + S2.
struct LaplaceGeneral {
  double S1 = 0.0;
  double S2 = 0.0;
  double total() const { return S1 + S2; }
};

LaplaceGeneral laplace_decomposition_general(std::int64_t n, int k,
                                             double lambda,
                                             const SimplexPoint& theta,
                                             double delta);
double frak_S_general(std::int64_t n, int k, double lambda,
                      const SimplexPoint& theta);

// Appendix H: integral upper bound via quadrature.
struct IntegralBoundResult {
  double lhs = 0.0;  // quadrature value
  double rhs = 0.0;  // closed-form bound
  bool quadrature_ok = false;
};

IntegralBoundResult integral_bound(std::int64_t n, double lambda,
                                   double theta1, double delta, double kappa);
BoundReport audit_integral_bound(std::int64_t n, double lambda, double theta1,
                                 double delta, double kappa, double beta,
                                 double c);

// Converse machinery (Eqs. 102-104).
struct ConverseBound {
  double beta = 0.0;
  double epsilon = 0.0;
  double bound_residual = 0.0;  // lower bound on R_lambda(n)-(k-1)/2 ln(n/2pi)
};

ConverseBound converse_lower_bound(std::int64_t n, int k, double lambda,
                                   double delta);

// Lemma 10: measured face-sup residual gap above the Theorem-2 asymptote,
// plus the auxiliary factor L(k,l,n) -> 1.
struct JeffreysGap {
  double face_sup = 0.0;    // sup over the l-face grid of D(.||Q*)
  double asymptote = 0.0;   // (k-1)/2 ln(n/2pi) + Theorem-2 constant
  double gap = 0.0;         // face_sup - asymptote
  double L = 0.0;
};

JeffreysGap jeffreys_gap(std::int64_t n, int k, int l, double lambda,
                         int face_grid = 201);
double jeffreys_gap_L(int k, int l, std::int64_t n);

// Pinsker, Taylor expansions, and weak duality.
BoundReport audit_pinsker(int grid);
BoundReport audit_taylor_binary(int grid);
BoundReport audit_taylor_general(int k, int grid);
BoundReport audit_weak_duality(std::uint64_t seed, int trials);
BoundReport audit_robbins(std::int64_t n_max, int k);
BoundReport audit_stirling(const std::vector<double>& xs);

struct AuditConfig {
  double lambda = 1.0;
  double c = 0.25;
  double delta = 0.1;
  std::uint64_t seed = 20170513;
  double c1_scale = 1.0;  // != 1 injects a fault into the Lemma-3 audit
};

// The full inequality battery (criterion-7 scope).
std::vector<BoundReport> run_full_audit(const AuditConfig& cfg);

}  // namespace renyi

#endif  // RENYI_BOUNDS_AUDIT_HPP
