#include "maxinfo/attack.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>
#include <vector>

#include "maxinfo/mechanisms.hpp"

namespace maxinfo {

namespace {

constexpr double kE = 2.718281828459045;

std::size_t bits_to_index(const BitString& x) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.get(i)) index |= std::size_t{1} << i;
  }
  return index;
}

BitString index_to_bits(std::size_t index, std::size_t n) {
  BitString x(n);
  for (std::size_t i = 0; i < n; ++i) {
    if ((index >> i) & 1) x.set(i, true);
  }
  return x;
}

double threshold_from(double epsilon, double delta, std::size_t d_min) {
  return (static_cast<double>(d_min) - 1) / 4 -
         std::log2(1 / delta) / epsilon;
}

void check_code_matches(const AttackParams& params,
                        const ParityCheckCode& code) {
  if (code.n() != params.n || code.r() != params.r) {
    fail(ErrorCode::param_out_of_range,
         "code dimensions do not match the attack parameters");
  }
  if (!code.d_min() || *code.d_min() < params.d_min) {
    fail(ErrorCode::param_out_of_range,
         "code minimum distance below the attack parameters");
  }
}

struct TrialCounts {
  std::uint64_t successes = 0;
  std::uint64_t bots = 0;
  std::uint64_t wrongs = 0;
};

template <typename TrialFn>
TrialCounts run_trials(std::uint64_t trials, unsigned threads,
                       const TrialFn& trial) {
  threads = std::max(1u, threads);
  if (threads == 1) {
    TrialCounts counts;
    for (std::uint64_t t = 0; t < trials; ++t) trial(t, counts);
    return counts;
  }
  std::vector<TrialCounts> partial(threads);
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (trials + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = std::min(trials, lo + chunk);
    workers.emplace_back([&, lo, hi, w] {
      for (std::uint64_t t = lo; t < hi; ++t) trial(t, partial[w]);
    });
  }
  for (auto& worker : workers) worker.join();
  TrialCounts counts;
  for (const TrialCounts& p : partial) {
    counts.successes += p.successes;
    counts.bots += p.bots;
    counts.wrongs += p.wrongs;
  }
  return counts;
}

}  // namespace

AttackParams derive_params(double epsilon, double delta, std::size_t n,
                           std::size_t cap) {
  if (!(epsilon > 0) || epsilon > 0.5) {
    fail(ErrorCode::param_out_of_range, "epsilon must be in (0, 1/2]");
  }
  if (!(delta > 0) || delta > 0.25) {
    fail(ErrorCode::param_out_of_range, "delta must be in (0, 1/4]");
  }
  if (static_cast<double>(n) <= 64 * kE) {
    fail(ErrorCode::param_out_of_range, "requires n > 64e");
  }
  AttackParams params;
  params.mode = AttackMode::theorem;
  params.epsilon = epsilon;
  params.delta = delta;
  params.n = n;
  const double t = 8 * std::log2(1 / delta) / epsilon + 1;
  params.d_min = static_cast<std::size_t>(std::ceil(t - 1e-9));
  const double r = 3 * static_cast<double>(params.d_min) *
                   std::log2(static_cast<double>(n));
  if (r >= static_cast<double>(n)) {
    fail(ErrorCode::param_out_of_range,
         "syndrome length 3 t log2(n) reaches n; no code rank left");
  }
  params.r = static_cast<std::size_t>(std::ceil(r - 1e-9));
  params.w = threshold_from(epsilon, delta, params.d_min);
  const std::size_t k = params.n - params.r;
  params.verification_feasible = k < 64 && (std::size_t{1} << k) <= cap;
  return params;
}

AttackParams demo_params(double epsilon, std::optional<double> delta,
                         const ParityCheckCode& code,
                         std::optional<double> w_override, std::size_t cap) {
  if (!(epsilon > 0)) {
    fail(ErrorCode::param_out_of_range, "epsilon must be > 0");
  }
  if (!code.d_min()) {
    fail(ErrorCode::param_out_of_range,
         "demo mode needs a code with a declared minimum distance");
  }
  AttackParams params;
  params.mode = AttackMode::demo;
  params.epsilon = epsilon;
  params.delta = delta.value_or(1.0);
  params.n = code.n();
  params.d_min = *code.d_min();
  params.r = code.r();
  if (w_override) {
    params.w = *w_override;
  } else {
    if (!delta || !(*delta > 0) || *delta > 1) {
      fail(ErrorCode::param_out_of_range,
           "demo mode needs delta in (0, 1] or an explicit threshold");
    }
    params.w = threshold_from(epsilon, *delta, params.d_min);
  }
  if (!(params.w >= 0)) {
    fail(ErrorCode::param_out_of_range, "threshold w must be >= 0");
  }
  const std::size_t k = params.n - params.r;
  params.verification_feasible = k < 64 && (std::size_t{1} << k) <= cap;
  return params;
}

std::optional<BitString> mechanism_b_threshold(const BitString& x,
                                               const BitString& a,
                                               const ParityCheckCode& code,
                                               double epsilon, double w,
                                               RngStream& rng) {
  auto [codeword, distance] = nearest_codeword(AffineCoset{&code, a}, x);
  const double noised =
      static_cast<double>(distance) + rng.next_laplace(1 / epsilon);
  if (noised < w) return codeword;
  return std::nullopt;
}

std::optional<BitString> mechanism_b(const BitString& x, const BitString& a,
                                     const ParityCheckCode& code,
                                     double epsilon, double delta,
                                     RngStream& rng) {
  if (!code.d_min()) {
    fail(ErrorCode::param_out_of_range,
         "code needs a declared minimum distance");
  }
  return mechanism_b_threshold(
      x, a, code, epsilon, threshold_from(epsilon, delta, *code.d_min()),
      rng);
}

AttackReport run_composition_trials(const AttackParams& params,
                                    const ParityCheckCode& code,
                                    std::uint64_t trials, std::uint64_t seed,
                                    unsigned threads) {
  check_code_matches(params, code);
  const TrialCounts counts = run_trials(
      trials, threads, [&](std::uint64_t t, TrialCounts& c) {
        RngStream rng = RngStream::substream(seed, "attack.composition", t);
        const BitString x = BitString::random(params.n, rng);
        const BitString a = code.syndrome(x);
        const auto out =
            mechanism_b_threshold(x, a, code, params.epsilon, params.w, rng);
        if (!out) {
          ++c.bots;
        } else if (*out == x) {
          ++c.successes;
        } else {
          ++c.wrongs;
        }
      });
  AttackReport report;
  report.trials = trials;
  report.reconstruct_successes = counts.successes;
  report.bot_count = counts.bots;
  report.wrong_codeword_count = counts.wrongs;
  report.analytic_success = laplace_cdf(1 / params.epsilon, params.w);
  report.seed = seed;
  return report;
}

std::vector<std::uint8_t> coset_distance_table(const ParityCheckCode& code,
                                               const BitString& a,
                                               std::size_t cap) {
  const std::size_t n = code.n();
  if (n >= 32 || (std::size_t{1} << n) > cap) {
    fail(ErrorCode::cap_exceeded, "2^n exceeds the enumeration cap");
  }
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint8_t> dist(total, 0xff);
  std::vector<std::size_t> frontier;

  // Seed with every coset member, then relax hypercube edges level by level.
  const std::size_t k = code.k();
  BitString member = code.solve(a);
  dist[bits_to_index(member)] = 0;
  frontier.push_back(bits_to_index(member));
  const std::size_t members = std::size_t{1} << k;
  for (std::size_t i = 1; i < members; ++i) {
    member ^= code.null_basis()[std::countr_zero(i)];
    const std::size_t idx = bits_to_index(member);
    if (dist[idx] != 0) {
      dist[idx] = 0;
      frontier.push_back(idx);
    }
  }
  std::uint8_t level = 0;
  std::vector<std::size_t> next;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (std::size_t idx : frontier) {
      for (std::size_t bit = 0; bit < n; ++bit) {
        const std::size_t neighbor = idx ^ (std::size_t{1} << bit);
        if (dist[neighbor] == 0xff) {
          dist[neighbor] = level;
          next.push_back(neighbor);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

AttackReport run_fixed_syndrome_trials(const AttackParams& params,
                                       const ParityCheckCode& code,
                                       const BitString& a,
                                       std::uint64_t trials,
                                       std::uint64_t seed, unsigned threads) {
  check_code_matches(params, code);
  if (a.size() != code.r()) {
    fail(ErrorCode::length_mismatch, "syndrome length differs from r");
  }
  const TrialCounts counts = run_trials(
      trials, threads, [&](std::uint64_t t, TrialCounts& c) {
        RngStream rng = RngStream::substream(seed, "attack.fixed", t);
        const BitString x = BitString::random(params.n, rng);
        const auto out =
            mechanism_b_threshold(x, a, code, params.epsilon, params.w, rng);
        if (!out) {
          ++c.bots;
        } else if (*out == x) {
          ++c.successes;
        } else {
          ++c.wrongs;
        }
      });
  AttackReport report;
  report.trials = trials;
  report.reconstruct_successes = counts.successes;
  report.bot_count = counts.bots;
  report.wrong_codeword_count = counts.wrongs;
  report.seed = seed;

  const double release = laplace_cdf(1 / params.epsilon, params.w);
  const std::size_t k = params.n - params.r;
  report.analytic_success =
      std::exp2(static_cast<double>(k) - static_cast<double>(params.n)) *
      release;
  if (params.n < 21) {
    const auto dist = coset_distance_table(code, a);
    double bot = 0;
    const double scale = 1 / params.epsilon;
    const double weight = std::exp2(-static_cast<double>(params.n));
    for (std::uint8_t d : dist) {
      bot += weight *
             (1 - laplace_cdf(scale, params.w - static_cast<double>(d)));
    }
    report.analytic_bot = bot;
  }
  return report;
}

double maxinfo_blowup_estimate(const AttackParams& params,
                               const ParityCheckCode& code,
                               std::uint64_t trials, std::uint64_t seed) {
  const AttackReport report =
      run_composition_trials(params, code, trials, seed);
  const double beta = 0.1;
  const double rate = static_cast<double>(report.reconstruct_successes) /
                      static_cast<double>(report.trials);
  if (rate <= beta) return 0;
  return static_cast<double>(params.n) + std::log2(rate - beta);
}

MechanismKernel mechanism_b_kernel(const ParityCheckCode& code,
                                   const BitString& a, double epsilon,
                                   double w, std::size_t cap) {
  const std::size_t n = code.n();
  if (n >= 32 || (std::size_t{1} << n) > cap) {
    fail(ErrorCode::cap_exceeded, "2^n exceeds the enumeration cap");
  }
  DomainPtr bits = make_domain({"0", "1"});
  DomainPtr datasets = enumerate_datasets(*bits, n, cap);

  // Coset members in lexicographic order form the output domain, plus "bot".
  const std::size_t k = code.k();
  std::vector<BitString> members;
  members.reserve(std::size_t{1} << k);
  BitString member = code.solve(a);
  members.push_back(member);
  for (std::size_t i = 1; i < (std::size_t{1} << k); ++i) {
    member ^= code.null_basis()[std::countr_zero(i)];
    members.push_back(member);
  }
  std::sort(members.begin(), members.end(),
            [](const BitString& lhs, const BitString& rhs) {
              return lhs.lex_less(rhs);
            });
  std::vector<std::string> outputs;
  outputs.reserve(members.size() + 1);
  for (const BitString& m : members) outputs.push_back(m.to_string());
  outputs.push_back("bot");
  DomainPtr output_domain = make_domain(std::move(outputs));

  const std::size_t cols = members.size() + 1;
  const double scale = 1 / epsilon;
  std::vector<double> rows(datasets->size() * cols, 0.0);
  for (std::size_t idx = 0; idx < datasets->size(); ++idx) {
    // Dataset index is lexicographic with tuple position 0 most significant.
    BitString x(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
      if ((idx >> (n - 1 - pos)) & 1) x.set(pos, true);
    }
    auto [codeword, distance] = nearest_codeword(AffineCoset{&code, a}, x);
    const double release =
        laplace_cdf(scale, w - static_cast<double>(distance));
    const std::size_t col =
        output_domain->index_of(codeword.to_string());
    rows[idx * cols + col] = release;
    rows[idx * cols + (cols - 1)] = 1 - release;
  }
  return MechanismKernel(datasets, output_domain, std::move(rows));
}

}  // namespace maxinfo
