#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace maxinfo {

// Deterministic random stream. The engine is std::mt19937_64, which is fully
// specified by the standard; all variate transforms are implemented here so
// that a fixed seed yields the same sequence on every platform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(mix(seed)) {}

  // Substream for (master seed, module tag, trial index). Streams with
  // distinct (tag, index) are independent for our purposes, and the mapping
  // is stable across runs and worker counts.
  static RngStream substream(std::uint64_t master, std::string_view tag,
                             std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1); never returns an endpoint, so inverse-CDF transforms
  // stay finite.
  double next_open_unit() {
    return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
  }

  bool next_bool() { return (next_u64() >> 63) != 0; }

  // Unbiased integer in [0, bound) by rejection.
  std::uint64_t next_below(std::uint64_t bound);

  double next_laplace(double scale);

 private:
  static std::uint64_t mix(std::uint64_t x);

  std::mt19937_64 engine_;
};

// Inverse-CDF Laplace transform: maps u in (0,1) to a Laplace(0, scale)
// variate; u = 1/2 maps to exactly 0.
double laplace_from_unit(double scale, double u);

}  // namespace maxinfo
