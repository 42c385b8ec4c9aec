#include "maxinfo/bounds.hpp"

#include <cmath>
#include <numbers>

namespace maxinfo {

namespace {

constexpr double kLog2E = std::numbers::log2e;

MaxInfoBound clamp_beta(double k_bits, double beta, std::string provenance) {
  MaxInfoBound bound;
  bound.k_bits = k_bits;
  bound.provenance = std::move(provenance);
  bound.vacuous = beta > 1.0;
  bound.beta = bound.vacuous ? 1.0 : std::max(0.0, beta);
  return bound;
}

}  // namespace

MaxInfoBound pure_dp_bound(double epsilon, std::size_t n) {
  if (!(epsilon >= 0)) {
    fail(ErrorCode::param_out_of_range, "epsilon must be >= 0");
  }
  if (n < 1) fail(ErrorCode::param_out_of_range, "n must be >= 1");
  return {kLog2E * epsilon * static_cast<double>(n), 0.0, "pure_dp", false};
}

MaxInfoBound pure_dp_product_bound(double epsilon, std::size_t n,
                                   double beta) {
  if (!(epsilon >= 0)) {
    fail(ErrorCode::param_out_of_range, "epsilon must be >= 0");
  }
  if (n < 1) fail(ErrorCode::param_out_of_range, "n must be >= 1");
  if (!(beta > 0) || beta >= 1) {
    fail(ErrorCode::invalid_beta, "beta must be in (0, 1)");
  }
  const double nn = static_cast<double>(n);
  const double k = kLog2E * (epsilon * epsilon * nn / 2 +
                             epsilon * std::sqrt(nn * std::log(2 / beta) / 2));
  return {k, beta, "pure_dp_product", false};
}

ApproxDpBound approx_dp_product_bound(const PrivacyParams& params,
                                      std::size_t n) {
  const double eps = params.epsilon;
  const double delta = params.delta;
  if (!(eps > 0) || eps > 0.5) {
    fail(ErrorCode::param_out_of_range, "epsilon must be in (0, 1/2]");
  }
  if (!(delta > 0) || delta >= eps) {
    fail(ErrorCode::param_out_of_range, "delta must be in (0, epsilon)");
  }
  if (n < 1) fail(ErrorCode::param_out_of_range, "n must be >= 1");

  const double nn = static_cast<double>(n);
  BoundBreakdown bd;
  bd.delta_hat = std::sqrt(eps * delta) / 15;
  // delta < eps guarantees delta_hat <= eps/15, the admissible range for nu.
  bd.azuma_t = eps * std::sqrt(2 * nn);
  const double e3 = std::exp(3 * eps);
  const double e6 = std::exp(6 * eps);
  const double e9 = std::exp(9 * eps);
  const double e12 = std::exp(12 * eps);
  const double linear_coeff =
      24 * e6 / (1 - std::exp(-3 * eps)) + kLog2E * (2 * e3 + 1);
  const double quad_coeff =
      2 * kLog2E * (4 * e12 + 4 * e9 - 3 * e6 - 2 * e3 + 1) /
      (e6 - 2 * e3 + 1);
  bd.nu = 72 * eps * eps + bd.delta_hat * linear_coeff +
          bd.delta_hat * bd.delta_hat * quad_coeff;
  bd.delta_prime = 2 * delta / bd.delta_hat + 2 * delta / (1 - std::exp(-eps));
  bd.delta_dprime = 2 * bd.delta_hat / (1 - std::exp(-3 * eps));
  bd.k_bits = nn * bd.nu + 6 * bd.azuma_t * eps * std::sqrt(nn);
  bd.beta_azuma_form = std::exp(-bd.azuma_t * bd.azuma_t / 2) +
                       nn * (bd.delta_prime + bd.delta_dprime);
  bd.beta_direct_form =
      std::exp(-eps * eps * nn) + nn * (bd.delta_prime + bd.delta_dprime);
  bd.beta = bd.beta_azuma_form;

  ApproxDpBound out;
  out.breakdown = bd;
  out.bound = clamp_beta(bd.k_bits, bd.beta, "approx_dp_product");
  return out;
}

MaxInfoBound description_length_bound(double r_bits, double beta) {
  if (!(r_bits >= 0)) {
    fail(ErrorCode::param_out_of_range, "r_bits must be >= 0");
  }
  if (!(beta > 0) || beta > 1) {
    fail(ErrorCode::invalid_beta, "beta must be in (0, 1]");
  }
  return {r_bits + std::log2(1 / beta), beta, "description_length", false};
}

MaxInfoBound compose(std::span<const MaxInfoBound> bounds) {
  if (bounds.empty()) {
    fail(ErrorCode::param_out_of_range, "compose needs at least one bound");
  }
  double k = 0;
  double beta = 0;
  for (const MaxInfoBound& b : bounds) {
    k += b.k_bits;
    beta += b.beta;
  }
  MaxInfoBound out = clamp_beta(k, beta, "compose");
  return out;
}

MaxInfoBound mi_to_maxinfo(double m_bits, double k_bits) {
  if (!(k_bits > 0)) fail(ErrorCode::param_out_of_range, "k_bits must be > 0");
  if (!(m_bits >= 0)) fail(ErrorCode::param_out_of_range, "m_bits must be >= 0");
  return clamp_beta(k_bits, (m_bits + 0.54) / k_bits, "mi_to_maxinfo");
}

MutualInfoBound maxinfo_to_mi(double k_bits, double beta,
                              std::size_t sigma_size) {
  if (!(k_bits > 0)) fail(ErrorCode::param_out_of_range, "k_bits must be > 0");
  const double denom = 1 - std::exp2(-k_bits);
  if (!(beta >= 0) || beta > 3 * denom / 20) {
    fail(ErrorCode::hypothesis_violated,
         "beta must be in [0, 3(1 - 2^-k)/20]");
  }
  MutualInfoBound out;
  out.value = 2 * k_bits * std::numbers::ln2;
  if (beta > 0) {
    out.value +=
        2 * beta * std::log2(static_cast<double>(sigma_size) / (2 * beta)) /
        denom;
  }
  return out;
}

double dp_to_mi_bound(const PrivacyParams& params, std::size_t n,
                      std::size_t x_size) {
  const double eps = params.epsilon;
  const double delta = params.delta;
  const double nn = static_cast<double>(n);
  if (!(eps > 0) || eps > 0.5) {
    fail(ErrorCode::param_out_of_range, "epsilon must be in (0, 1/2]");
  }
  // The asymptotic hypotheses, checked with explicit constant 1.
  if (eps < 1 / std::sqrt(nn)) {
    fail(ErrorCode::param_out_of_range, "requires epsilon >= 1/sqrt(n)");
  }
  if (!(delta >= 0) || delta > eps / (nn * nn)) {
    fail(ErrorCode::param_out_of_range, "requires delta <= epsilon / n^2");
  }
  if (x_size < 1) fail(ErrorCode::param_out_of_range, "|X| must be >= 1");
  double value = nn * eps * eps;
  if (delta > 0) {
    value += nn * std::sqrt(delta / eps) *
             (1 + std::log(std::sqrt(eps / delta) / nn) +
              nn * std::log2(static_cast<double>(x_size)));
  }
  return value;
}

double pvalue_correction(double k_bits, double beta, double alpha) {
  if (!(alpha >= 0) || alpha > 1) {
    fail(ErrorCode::param_out_of_range, "alpha must be in [0, 1]");
  }
  return std::max((alpha - beta) / std::exp2(k_bits), 0.0);
}

double mi_pvalue_correction(double m_bits, double alpha) {
  if (!(alpha > 0) || alpha > 1) {
    fail(ErrorCode::param_out_of_range, "alpha must be in (0, 1]");
  }
  if (!(m_bits >= 0)) fail(ErrorCode::param_out_of_range, "m_bits must be >= 0");
  return alpha / 2 * std::exp2(-2 / alpha * (m_bits + 0.54));
}

double rz_pvalue_correction(double m_bits, double alpha) {
  if (!(alpha > 0) || alpha > 1) {
    fail(ErrorCode::param_out_of_range, "alpha must be in (0, 1]");
  }
  if (!(m_bits >= 0)) fail(ErrorCode::param_out_of_range, "m_bits must be >= 0");
  return std::min(alpha / 2,
                  0.5 * std::exp2(-kLog2E * m_bits / (alpha * alpha)));
}

double generalization_tail(double k_bits, double beta, std::size_t n,
                           double sensitivity, double tau) {
  if (!(sensitivity > 0)) {
    fail(ErrorCode::param_out_of_range, "sensitivity must be > 0");
  }
  if (!(tau >= 0)) fail(ErrorCode::param_out_of_range, "tau must be >= 0");
  if (n < 1) fail(ErrorCode::param_out_of_range, "n must be >= 1");
  const double nn = static_cast<double>(n);
  const double mcdiarmid =
      std::exp(-2 * tau * tau / (nn * sensitivity * sensitivity));
  return std::min(1.0, std::exp2(k_bits) * mcdiarmid + beta);
}

double pvalue_sensitivity_floor(std::size_t n) {
  if (n < 1) fail(ErrorCode::param_out_of_range, "n must be >= 1");
  return 0.37 / std::sqrt(static_cast<double>(n));
}

}  // namespace maxinfo
