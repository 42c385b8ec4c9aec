#include "maxinfo/estimator.hpp"

#include <cmath>
#include <limits>

namespace maxinfo {

namespace {

constexpr double kBisectTol = 1e-10;
constexpr double kBracketLow = -40.0;

MaxInfoWitness residual_witness(const JointPMF& joint, double k_bits) {
  const double lambda = std::exp2(k_bits);
  MaxInfoWitness best;
  double best_residual = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < joint.rows(); ++i) {
    for (std::size_t j = 0; j < joint.cols(); ++j) {
      const double p = joint.mass(i, j);
      if (p <= 0) continue;
      const double residual =
          p - lambda * joint.left_marginal()[i] * joint.right_marginal()[j];
      if (residual > best_residual) {
        best_residual = residual;
        best = {joint.left_domain().label(i), joint.right_domain().label(j),
                residual};
      }
    }
  }
  return best;
}

}  // namespace

MaxInfoResult exact_max_info(const JointPMF& joint) {
  double best_ratio = 0;
  std::optional<MaxInfoWitness> witness;
  for (std::size_t i = 0; i < joint.rows(); ++i) {
    for (std::size_t j = 0; j < joint.cols(); ++j) {
      const double p = joint.mass(i, j);
      if (p <= 0) continue;
      const double q = joint.left_marginal()[i] * joint.right_marginal()[j];
      if (q <= 0) {
        fail(ErrorCode::unbounded_ratio,
             "support pair (" + joint.left_domain().label(i) + ", " +
                 joint.right_domain().label(j) +
                 ") has zero product-of-marginals mass");
      }
      const double ratio = p / q;
      if (ratio > best_ratio) {
        best_ratio = ratio;
        witness = MaxInfoWitness{joint.left_domain().label(i),
                                 joint.right_domain().label(j), ratio};
      }
    }
  }
  MaxInfoResult result;
  result.raw_k_bits = best_ratio > 0 ? std::log2(best_ratio) : 0.0;
  result.k_bits = std::max(0.0, result.raw_k_bits);
  result.beta = 0;
  result.witness = witness;
  return result;
}

double beta_at_k(const JointPMF& joint, double k_bits) {
  const double lambda = std::exp2(k_bits);
  double residual = 0;
  for (std::size_t i = 0; i < joint.rows(); ++i) {
    for (std::size_t j = 0; j < joint.cols(); ++j) {
      const double p = joint.mass(i, j);
      if (p <= 0) continue;
      const double excess =
          p - lambda * joint.left_marginal()[i] * joint.right_marginal()[j];
      if (excess > 0) residual += excess;
    }
  }
  return residual;
}

MaxInfoResult approx_max_info(const JointPMF& joint, double beta) {
  if (!(beta >= 0) || beta >= 1) {
    fail(ErrorCode::invalid_beta, "beta must be in [0, 1)");
  }
  const MaxInfoResult exact = exact_max_info(joint);

  MaxInfoResult result;
  result.beta = beta;
  double hi = std::max(exact.raw_k_bits, kBracketLow);  // f(hi) = 0 <= beta
  double lo = kBracketLow;
  if (beta_at_k(joint, lo) <= beta) {
    // Every k in the bracket already satisfies the bound; the infimum is
    // unbounded below at this resolution.
    result.raw_k_bits = -std::numeric_limits<double>::infinity();
    result.k_bits = 0;
    result.witness = residual_witness(joint, 0.0);
    return result;
  }
  while (hi - lo > kBisectTol) {
    const double mid = 0.5 * (lo + hi);
    if (beta_at_k(joint, mid) <= beta) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  result.raw_k_bits = hi;
  result.k_bits = std::max(0.0, hi);
  result.witness = residual_witness(joint, hi);
  return result;
}

BoundCheck check_bound(const JointPMF& joint, double bound_k_bits,
                       double bound_beta) {
  BoundCheck check;
  check.residual = beta_at_k(joint, bound_k_bits);
  check.margin = check.residual - bound_beta;
  check.holds = check.margin <= 0;
  check.witness = residual_witness(joint, bound_k_bits);
  return check;
}

}  // namespace maxinfo
