#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "maxinfo/bounds.hpp"
#include "maxinfo/prob.hpp"
#include "maxinfo/rng.hpp"

namespace maxinfo {

// Exact upper binomial tail P[Bin(n, 1/2) >= successes], computed with
// big-integer arithmetic.
double binomial_pvalue(std::size_t n, std::size_t successes);

// Index of the largest positive-feature count, ties to the lowest index.
std::size_t select_naive(std::span<const std::uint32_t> counts);

// Report-noisy-max: argmax of count_j + Lap(2/epsilon). The counts have
// sensitivity 1 per record under substitution, so the selection is
// epsilon-differentially private with the 2/epsilon calibration.
std::size_t select_noisy_max(std::span<const std::uint32_t> counts,
                             double epsilon, RngStream& rng);

enum class Selector { naive, noisy_max };

struct SimConfig {
  std::size_t n = 0;       // records per trial
  std::size_t m = 0;       // candidate statistics
  std::uint64_t trials = 0;
  double alpha = 0.05;
  Selector selector = Selector::naive;
  double epsilon = 0;      // noisy-max privacy parameter
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool keep_per_trial = false;
};

struct TrialRecord {
  std::uint32_t selected = 0;
  double p_value = 1;
};

struct FdrReport {
  double naive_fdr = 0;
  std::optional<double> corrected_fdr;   // noisy-max runs only
  std::optional<double> gamma_used;
  std::optional<MaxInfoBound> bound_used;
  std::vector<std::uint64_t> selection_histogram;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<TrialRecord> per_trial;    // filled when keep_per_trial is set
};

// Per trial: draw n x m uniform +/-1 null data, select one statistic, and
// compute the exact binomial p-value of the selected positive count on the
// same data. naive_fdr counts p <= alpha. For noisy-max selection the
// corrected rate counts p <= gamma where gamma = pvalue_correction applied
// to pure_dp_product_bound(epsilon, n, beta = alpha/2).
FdrReport run_fdr_experiment(const SimConfig& config);

// Exhaustive sensitivity of a statistic over the enumerated dataset space:
// max over substitution neighbors |f(x) - f(x')|. The statistic receives the
// dataset as a digit vector over the marginal domain.
double statistic_sensitivity(
    const std::function<double(std::span<const std::size_t>)>& statistic,
    std::size_t n, const Domain& domain,
    std::size_t cap = kDefaultEnumCap);

}  // namespace maxinfo
