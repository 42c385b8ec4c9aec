#pragma once

#include <span>
#include <string>
#include <vector>

#include "maxinfo/errors.hpp"

namespace maxinfo {

struct PrivacyParams {
  double epsilon = 0;
  double delta = 0;
};

// A (k bits, beta) max-information bound with its producing rule. The beta
// is clamped to [0,1]; `vacuous` records that the raw formula exceeded 1.
struct MaxInfoBound {
  double k_bits = 0;
  double beta = 0;
  std::string provenance;
  bool vacuous = false;
};

// Intermediate constants of the approximate-DP product bound. The two beta
// forms are mathematically identical (t = epsilon * sqrt(2n)) and are both
// reported so the identity is auditable.
struct BoundBreakdown {
  double delta_hat = 0;
  double delta_prime = 0;
  double delta_dprime = 0;
  double nu = 0;  // bits
  double azuma_t = 0;
  double k_bits = 0;
  double beta = 0;      // raw, before clamping
  double beta_azuma_form = 0;   // e^{-t^2/2} + n(delta' + delta'')
  double beta_direct_form = 0;  // e^{-eps^2 n} + n(delta' + delta'')
};

struct ApproxDpBound {
  MaxInfoBound bound;
  BoundBreakdown breakdown;
};

// I_inf(A, n) <= log2(e) * eps * n for (eps,0)-DP algorithms.
MaxInfoBound pure_dp_bound(double epsilon, std::size_t n);

// Product-distribution bound for (eps,0)-DP:
// k = log2(e) * (eps^2 n / 2 + eps sqrt(n ln(2/beta) / 2)).
MaxInfoBound pure_dp_product_bound(double epsilon, std::size_t n, double beta);

// Product-distribution bound for (eps,delta)-DP with the explicit proof
// constants: delta_hat = sqrt(eps delta)/15, t = eps sqrt(2n),
// k = n nu(delta_hat) + 6 t eps sqrt(n),
// beta = e^{-t^2/2} + n (delta' + delta'').
// Requires eps in (0, 1/2] and delta in (0, eps).
ApproxDpBound approx_dp_product_bound(const PrivacyParams& params,
                                      std::size_t n);

// k = r + log2(1/beta) for algorithms with r-bit outputs.
MaxInfoBound description_length_bound(double r_bits, double beta);

// Adaptive composition: k = sum k_i, beta = min(1, sum beta_i).
MaxInfoBound compose(std::span<const MaxInfoBound> bounds);

// Mutual information m (bits) to max-information: (k, (m + 0.54)/k).
MaxInfoBound mi_to_maxinfo(double m_bits, double k_bits);

// Max-information to mutual information. The printed formula mixes a nats
// first term (2k ln 2) with a base-2 log in the second term; the value is
// returned exactly as printed and `mixed_units` flags the convention.
struct MutualInfoBound {
  double value = 0;
  bool mixed_units = true;
};
MutualInfoBound maxinfo_to_mi(double k_bits, double beta,
                              std::size_t sigma_size);

// Order-of-magnitude mutual-information bound for (eps,delta)-DP over product
// distributions, with every suppressed constant set to 1. Reference only.
double dp_to_mi_bound(const PrivacyParams& params, std::size_t n,
                      std::size_t x_size);

// gamma(alpha) = max((alpha - beta) / 2^k, 0).
double pvalue_correction(double k_bits, double beta, double alpha);

// gamma(alpha) = alpha/2 * 2^{-(2/alpha)(m + 0.54)} from a mutual-information
// bound of m bits.
double mi_pvalue_correction(double m_bits, double alpha);

// Upper bound on the best correction derivable from the Russo-Zou bias
// bound: min{alpha/2, 1/2 * 2^{-log2(e) m / alpha^2}}.
double rz_pvalue_correction(double m_bits, double alpha);

// min(1, 2^k exp(-2 tau^2 / (n Delta^2)) + beta): McDiarmid paired with a
// max-information bound.
double generalization_tail(double k_bits, double beta, std::size_t n,
                           double sensitivity, double tau);

// Lower bound 0.37 / sqrt(n) on the sensitivity of any p-value map.
double pvalue_sensitivity_floor(std::size_t n);

}  // namespace maxinfo
