#include "maxinfo/mechanisms.hpp"

#include <bit>
#include <cmath>
#include <vector>

namespace maxinfo {

namespace {

DomainPtr binary_domain() {
  return make_domain({"0", "1"});
}

}  // namespace

MechanismKernel rr_kernel(double epsilon, std::size_t n, std::size_t cap) {
  if (!(epsilon >= 0)) {
    fail(ErrorCode::param_out_of_range, "epsilon must be >= 0");
  }
  DomainPtr bits = binary_domain();
  DomainPtr datasets = enumerate_datasets(*bits, n, cap);
  const std::size_t count = datasets->size();
  const double truthful = std::exp(epsilon) / (1 + std::exp(epsilon));
  std::vector<double> rows(count * count);
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t y = 0; y < count; ++y) {
      const std::size_t agree = n - std::popcount(x ^ y);
      rows[x * count + y] = std::pow(truthful, static_cast<double>(agree)) *
                            std::pow(1 - truthful,
                                     static_cast<double>(n - agree));
    }
  }
  return MechanismKernel(datasets, datasets, std::move(rows));
}

MechanismKernel geometric_count_kernel(double epsilon, std::size_t n,
                                       std::size_t truncation,
                                       std::size_t cap) {
  if (!(epsilon > 0)) {
    fail(ErrorCode::param_out_of_range, "epsilon must be > 0");
  }
  if (truncation < n) {
    fail(ErrorCode::param_out_of_range, "truncation must be >= n");
  }
  DomainPtr bits = binary_domain();
  DomainPtr datasets = enumerate_datasets(*bits, n, cap);
  const double q = std::exp(-epsilon);

  std::vector<std::string> outputs;
  outputs.reserve(truncation + 1);
  for (std::size_t m = 0; m <= truncation; ++m) {
    outputs.push_back(std::to_string(m));
  }
  DomainPtr output_domain = make_domain(std::move(outputs));

  // Row depends only on the Hamming weight w of the input:
  //   interior m:  (1-q)/(1+q) * q^|m-w|
  //   m = 0:       P[G <= -w]   (folded lower tail)
  //   m = T:       P[G >= T-w]  (folded upper tail)
  // where P[G <= -j] = q^j / (1+q) for j >= 1 and 1/(1+q) for j <= 0.
  auto lower_tail = [&](long long j) {
    return j >= 1 ? std::pow(q, static_cast<double>(j)) / (1 + q)
                  : 1.0 / (1 + q);
  };
  const std::size_t cols = truncation + 1;
  std::vector<std::vector<double>> by_weight(n + 1,
                                             std::vector<double>(cols, 0.0));
  for (std::size_t w = 0; w <= n; ++w) {
    auto& row = by_weight[w];
    for (std::size_t m = 1; m + 1 <= truncation; ++m) {
      const long long d = static_cast<long long>(m) - static_cast<long long>(w);
      row[m] = (1 - q) / (1 + q) * std::pow(q, static_cast<double>(std::llabs(d)));
    }
    row[0] = lower_tail(static_cast<long long>(w));
    // Upper fold by symmetry: P[G >= T - w] = P[G <= -(T - w)].
    row[truncation] = lower_tail(static_cast<long long>(truncation) -
                                 static_cast<long long>(w));
  }

  const std::size_t count = datasets->size();
  std::vector<double> rows(count * cols);
  for (std::size_t x = 0; x < count; ++x) {
    const std::size_t w = static_cast<std::size_t>(std::popcount(x));
    for (std::size_t m = 0; m < cols; ++m) {
      rows[x * cols + m] = by_weight[w][m];
    }
  }
  return MechanismKernel(datasets, output_domain, std::move(rows));
}

double laplace_sample(double scale, RngStream& rng) {
  return rng.next_laplace(scale);
}

double laplace_cdf(double scale, double x) {
  if (!(scale > 0)) fail(ErrorCode::param_out_of_range, "laplace scale <= 0");
  if (x >= 0) return 1 - 0.5 * std::exp(-x / scale);
  return 0.5 * std::exp(x / scale);
}

DpVerdict verify_dp(const MechanismKernel& kernel, double epsilon,
                    double delta, const Domain& marginal, std::size_t n,
                    std::size_t pair_cap) {
  const std::size_t base = marginal.size();
  const std::size_t count = kernel.inputs();
  std::size_t expected = 1;
  for (std::size_t i = 0; i < n; ++i) expected *= base;
  if (expected != count) {
    fail(ErrorCode::domain_mismatch,
         "kernel input domain is not the enumerated dataset space");
  }
  const std::size_t pairs = count * n * base;
  if (pairs > pair_cap) {
    fail(ErrorCode::cap_exceeded,
         "neighbor pair count " + std::to_string(pairs) + " exceeds cap");
  }

  const double factor = std::exp(epsilon);
  const std::size_t outputs = kernel.outputs();
  DpVerdict verdict;
  verdict.epsilon = epsilon;
  verdict.delta = delta;
  verdict.worst_residual = -1;

  // Stride of position pos in the lexicographic index: base^(n-1-pos).
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t pos = n; pos-- > 1;) {
    stride[pos - 1] = stride[pos] * base;
  }

  for (std::size_t x = 0; x < count; ++x) {
    const double* px = kernel.row(x);
    for (std::size_t pos = 0; pos < n; ++pos) {
      const std::size_t digit = (x / stride[pos]) % base;
      for (std::size_t alt = 0; alt < base; ++alt) {
        const std::size_t xp = x - digit * stride[pos] + alt * stride[pos];
        const double* pxp = kernel.row(xp);
        double residual = 0;
        for (std::size_t y = 0; y < outputs; ++y) {
          const double excess = px[y] - factor * pxp[y];
          if (excess > 0) residual += excess;
        }
        if (residual > verdict.worst_residual) {
          verdict.worst_residual = residual;
          verdict.worst_x = kernel.input_domain().label(x);
          verdict.worst_x_prime = kernel.input_domain().label(xp);
        }
      }
    }
  }
  verdict.passes = verdict.worst_residual <= delta + 1e-12;
  return verdict;
}

}  // namespace maxinfo
