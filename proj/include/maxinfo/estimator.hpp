#pragma once

#include <optional>
#include <string>

#include "maxinfo/prob.hpp"

namespace maxinfo {

// Pair achieving the supremum (for exact max-information the maximum-ratio
// pair; for a threshold set the maximum-residual pair).
struct MaxInfoWitness {
  std::string x;
  std::string z;
  double value = 0;  // ratio (exact) or residual (threshold set)
};

struct MaxInfoResult {
  double k_bits = 0;      // max(0, raw_k_bits)
  double raw_k_bits = 0;  // may be negative; -inf when unbounded below
  double beta = 0;
  std::optional<MaxInfoWitness> witness;
};

// I_inf(X;Z): log2 of the maximum pointwise ratio joint/product over the
// support. Pairs with zero joint mass are ignored. Throws UnboundedRatio if
// a support pair has zero product-of-marginals mass.
MaxInfoResult exact_max_info(const JointPMF& joint);

// f(k) = sum over pairs of max(joint - 2^k * product, 0). Nonincreasing and
// continuous in k; this is the hockey-stick residual at ratio 2^k.
double beta_at_k(const JointPMF& joint, double k_bits);

// beta-approximate max-information: raw k = inf{k : beta_at_k(joint,k) <=
// beta}, by bisection to 1e-10 bits over [-40, exact raw k]; the reported
// k_bits is clamped at 0 and the raw value retained.
MaxInfoResult approx_max_info(const JointPMF& joint, double beta);

struct BoundCheck {
  double margin = 0;       // beta_at_k(joint, bound_k) - bound_beta
  double residual = 0;     // beta_at_k(joint, bound_k)
  bool holds = false;      // margin <= 0
  std::optional<MaxInfoWitness> witness;
};

// Empirical validation of a claimed (k, beta) bound against an exact joint.
BoundCheck check_bound(const JointPMF& joint, double bound_k_bits,
                       double bound_beta);

}  // namespace maxinfo
