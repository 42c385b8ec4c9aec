#pragma once

#include <cstdint>
#include <optional>

#include "maxinfo/gf2.hpp"
#include "maxinfo/prob.hpp"
#include "maxinfo/rng.hpp"

namespace maxinfo {

enum class AttackMode { theorem, demo };

struct AttackParams {
  double epsilon = 0;
  double delta = 0;
  std::size_t n = 0;
  std::size_t d_min = 0;  // the code's minimum distance t
  std::size_t r = 0;      // syndrome length n - k
  double w = 0;           // release threshold (t-1)/4 - log2(1/delta)/epsilon
  AttackMode mode = AttackMode::demo;
  bool verification_feasible = false;  // 2^(n-r) within the enumeration cap
};

// Theorem-mode parameters: d_min = 8 log2(1/delta)/epsilon + 1 and
// r = 3 d_min log2 n, under the hypotheses epsilon in (0,1/2], delta in
// (0,1/4], n > 64e. Fails with ParamOutOfRange when r >= n.
AttackParams derive_params(double epsilon, double delta, std::size_t n,
                           std::size_t cap = std::size_t{1} << 24);

// Demo-mode parameters around an existing code: only w >= 0 and code
// feasibility are enforced. The threshold is computed from delta when given
// and may be overridden directly.
AttackParams demo_params(double epsilon, std::optional<double> delta,
                         const ParityCheckCode& code,
                         std::optional<double> w_override = std::nullopt,
                         std::size_t cap = std::size_t{1} << 24);

// Algorithm B: nearest-coset decoding with a Laplace(1/epsilon)-noised
// distance test. Returns the decoded codeword iff d_x + L < w, nullopt
// otherwise. The threshold comparison is exactly as written; no
// special-casing of w <= 0.
std::optional<BitString> mechanism_b_threshold(const BitString& x,
                                               const BitString& a,
                                               const ParityCheckCode& code,
                                               double epsilon, double w,
                                               RngStream& rng);

// Same mechanism with w = (d_min - 1)/4 - log2(1/delta)/epsilon computed
// from the code's minimum distance.
std::optional<BitString> mechanism_b(const BitString& x, const BitString& a,
                                     const ParityCheckCode& code,
                                     double epsilon, double delta,
                                     RngStream& rng);

struct AttackReport {
  std::uint64_t trials = 0;
  std::uint64_t reconstruct_successes = 0;
  std::uint64_t bot_count = 0;
  std::uint64_t wrong_codeword_count = 0;
  double analytic_success = 0;
  std::optional<double> analytic_bot;
  std::uint64_t seed = 0;
};

// Composition trials: x uniform on {0,1}^n, a = H x, run B(x, a). Since
// x is in C_a, d_x = 0 exactly and the analytic success probability is
// P[Lap(1/eps) < w].
AttackReport run_composition_trials(const AttackParams& params,
                                    const ParityCheckCode& code,
                                    std::uint64_t trials, std::uint64_t seed,
                                    unsigned threads = 1);

// Fixed-syndrome trials: x uniform on {0,1}^n, a held fixed. Reports the
// bot rate; when 2^n <= 2^20 the exact bot probability is computed by
// enumerating every x.
AttackReport run_fixed_syndrome_trials(const AttackParams& params,
                                       const ParityCheckCode& code,
                                       const BitString& a,
                                       std::uint64_t trials,
                                       std::uint64_t seed,
                                       unsigned threads = 1);

// Diagonal-event witness bound log2((success_rate - beta) / 2^-n) at
// beta = 0.1, using the measured composition success rate. Returns 0 when
// the rate does not exceed beta.
double maxinfo_blowup_estimate(const AttackParams& params,
                               const ParityCheckCode& code,
                               std::uint64_t trials, std::uint64_t seed);

// Exact kernel of B(. , a) over the output domain {codewords of C_a, "bot"},
// with the Laplace threshold integrated analytically per dataset. Input
// domain is the enumerated dataset space over {0,1}.
MechanismKernel mechanism_b_kernel(const ParityCheckCode& code,
                                   const BitString& a, double epsilon,
                                   double w,
                                   std::size_t cap = std::size_t{1} << 20);

// Distance from every x in {0,1}^n to the coset {c : H c = a}, indexed by
// sum_i x_i 2^i. Multi-source BFS over the hypercube; requires 2^n <= cap.
std::vector<std::uint8_t> coset_distance_table(const ParityCheckCode& code,
                                               const BitString& a,
                                               std::size_t cap = std::size_t{1}
                                                                 << 20);

}  // namespace maxinfo
