#pragma once

#include <cstddef>
#include <string>

#include "maxinfo/prob.hpp"
#include "maxinfo/rng.hpp"

namespace maxinfo {

// Randomized response on n bits: each bit is reported truthfully with
// probability e^eps / (1 + e^eps), independently. Input domain is the
// enumerated dataset space over {0,1}; rows are exact products.
MechanismKernel rr_kernel(double epsilon, std::size_t n,
                          std::size_t cap = kDefaultEnumCap);

// Hamming weight plus two-sided geometric noise with ratio e^{-eps}, clamped
// to [0, truncation] by folding the boundary mass. Exact rows; (eps,0)-DP for
// the sensitivity-1 weight statistic.
MechanismKernel geometric_count_kernel(double epsilon, std::size_t n,
                                       std::size_t truncation,
                                       std::size_t cap = kDefaultEnumCap);

// One Laplace(0, scale) draw from the stream (inverse-CDF transform).
double laplace_sample(double scale, RngStream& rng);

// P[Lap(0, scale) <= x].
double laplace_cdf(double scale, double x);

struct DpVerdict {
  bool passes = false;
  std::string worst_x;
  std::string worst_x_prime;
  double worst_residual = 0;
  double epsilon = 0;
  double delta = 0;
};

// Exhaustive (eps,delta)-DP check of an exact kernel whose input domain is
// the enumerated dataset space over `marginal` with length n. For every
// ordered neighbor pair (substitution in at most one entry) computes the
// hockey-stick residual sum_y max(p_x(y) - e^eps p_x'(y), 0); the kernel
// passes iff the worst residual is <= delta + 1e-12.
DpVerdict verify_dp(const MechanismKernel& kernel, double epsilon,
                    double delta, const Domain& marginal, std::size_t n,
                    std::size_t pair_cap = kDefaultEnumCap);

}  // namespace maxinfo
