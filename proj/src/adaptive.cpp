#include "maxinfo/adaptive.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>
#include <thread>

namespace maxinfo {

namespace {

using boost::multiprecision::cpp_int;

// One trial's null data: m features of n packed +/-1 records (bit = +1).
std::vector<std::uint32_t> draw_counts(std::size_t n, std::size_t m,
                                       RngStream& rng) {
  std::vector<std::uint32_t> counts(m, 0);
  const std::size_t words = (n + 63) / 64;
  const std::size_t tail = n & 63;
  for (std::size_t j = 0; j < m; ++j) {
    std::uint32_t count = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = rng.next_u64();
      if (w + 1 == words && tail != 0) {
        bits &= (std::uint64_t{1} << tail) - 1;
      }
      count += static_cast<std::uint32_t>(std::popcount(bits));
    }
    counts[j] = count;
  }
  return counts;
}

}  // namespace

double binomial_pvalue(std::size_t n, std::size_t successes) {
  if (successes > n) {
    fail(ErrorCode::param_out_of_range, "successes must be <= n");
  }
  cpp_int tail = 0;
  cpp_int binom = 1;  // C(n, i) walked upward from i = 0
  for (std::size_t i = 0; i <= n; ++i) {
    if (i >= successes) tail += binom;
    binom = binom * static_cast<std::uint64_t>(n - i) /
            static_cast<std::uint64_t>(i + 1);
  }
  const cpp_int denom = cpp_int(1) << n;
  return static_cast<double>(
      boost::multiprecision::cpp_bin_float_100(tail) /
      boost::multiprecision::cpp_bin_float_100(denom));
}

std::size_t select_naive(std::span<const std::uint32_t> counts) {
  if (counts.empty()) fail(ErrorCode::param_out_of_range, "no statistics");
  std::size_t best = 0;
  for (std::size_t j = 1; j < counts.size(); ++j) {
    if (counts[j] > counts[best]) best = j;
  }
  return best;
}

std::size_t select_noisy_max(std::span<const std::uint32_t> counts,
                             double epsilon, RngStream& rng) {
  if (counts.empty()) fail(ErrorCode::param_out_of_range, "no statistics");
  if (!(epsilon > 0)) {
    fail(ErrorCode::param_out_of_range, "epsilon must be > 0");
  }
  std::size_t best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < counts.size(); ++j) {
    const double value =
        static_cast<double>(counts[j]) + rng.next_laplace(2 / epsilon);
    if (value > best_value) {
      best_value = value;
      best = j;
    }
  }
  return best;
}

FdrReport run_fdr_experiment(const SimConfig& config) {
  if (config.n < 1 || config.m < 1 || config.trials < 1) {
    fail(ErrorCode::config_invalid, "n, m, and trials must be >= 1");
  }
  if (!(config.alpha > 0) || config.alpha >= 1) {
    fail(ErrorCode::config_invalid, "alpha must be in (0, 1)");
  }
  if (config.selector == Selector::noisy_max && !(config.epsilon > 0)) {
    fail(ErrorCode::config_invalid, "noisy-max needs epsilon > 0");
  }

  std::optional<MaxInfoBound> bound;
  std::optional<double> gamma;
  if (config.selector == Selector::noisy_max) {
    // beta split: alpha/2 into the bound, the rest absorbed by gamma.
    bound = pure_dp_product_bound(config.epsilon, config.n, config.alpha / 2);
    gamma = pvalue_correction(bound->k_bits, bound->beta, config.alpha);
  }

  // Exact tail per count value, precomputed once.
  std::vector<double> tail(config.n + 1);
  for (std::size_t c = 0; c <= config.n; ++c) {
    tail[c] = binomial_pvalue(config.n, c);
  }

  const unsigned threads = std::max(1u, config.threads);
  std::vector<std::uint64_t> naive_hits(threads, 0);
  std::vector<std::uint64_t> corrected_hits(threads, 0);
  std::vector<std::vector<std::uint64_t>> histograms(
      threads, std::vector<std::uint64_t>(config.m, 0));
  std::vector<TrialRecord> records;
  if (config.keep_per_trial) records.resize(config.trials);

  auto worker = [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t t = lo; t < hi; ++t) {
      RngStream rng = RngStream::substream(config.seed, "simulate", t);
      const auto counts = draw_counts(config.n, config.m, rng);
      const std::size_t selected =
          config.selector == Selector::naive
              ? select_naive(counts)
              : select_noisy_max(counts, config.epsilon, rng);
      const double p = tail[counts[selected]];
      if (p <= config.alpha) ++naive_hits[w];
      if (gamma && p <= *gamma) ++corrected_hits[w];
      ++histograms[w][selected];
      if (config.keep_per_trial) {
        records[t] = {static_cast<std::uint32_t>(selected), p};
      }
    }
  };

  if (threads == 1) {
    worker(0, 0, config.trials);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (config.trials + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = std::min<std::uint64_t>(config.trials,
                                                       lo + chunk);
      pool.emplace_back(worker, w, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  FdrReport report;
  report.trials = config.trials;
  report.seed = config.seed;
  report.selection_histogram.assign(config.m, 0);
  std::uint64_t naive_total = 0;
  std::uint64_t corrected_total = 0;
  for (unsigned w = 0; w < threads; ++w) {
    naive_total += naive_hits[w];
    corrected_total += corrected_hits[w];
    for (std::size_t j = 0; j < config.m; ++j) {
      report.selection_histogram[j] += histograms[w][j];
    }
  }
  report.naive_fdr =
      static_cast<double>(naive_total) / static_cast<double>(config.trials);
  if (gamma) {
    report.corrected_fdr = static_cast<double>(corrected_total) /
                           static_cast<double>(config.trials);
    report.gamma_used = gamma;
    report.bound_used = bound;
  }
  report.per_trial = std::move(records);
  return report;
}

double statistic_sensitivity(
    const std::function<double(std::span<const std::size_t>)>& statistic,
    std::size_t n, const Domain& domain, std::size_t cap) {
  const std::size_t base = domain.size();
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (count > cap / base) {
      fail(ErrorCode::cap_exceeded, "|X|^n exceeds enumeration cap");
    }
    count *= base;
  }
  // Memoize f over the whole space, then scan substitution neighbors.
  std::vector<double> values(count);
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    values[idx] = statistic(digits);
    for (std::size_t pos = n; pos-- > 0;) {
      if (++digits[pos] < base) break;
      digits[pos] = 0;
    }
  }
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t pos = n; pos-- > 1;) stride[pos - 1] = stride[pos] * base;
  double worst = 0;
  for (std::size_t idx = 0; idx < count; ++idx) {
    for (std::size_t pos = 0; pos < n; ++pos) {
      const std::size_t digit = (idx / stride[pos]) % base;
      for (std::size_t alt = digit + 1; alt < base; ++alt) {
        const std::size_t other = idx + (alt - digit) * stride[pos];
        worst = std::max(worst, std::fabs(values[idx] - values[other]));
      }
    }
  }
  return worst;
}

}  // namespace maxinfo
