#include "maxinfo/rng.hpp"

#include <cmath>

#include "maxinfo/errors.hpp"

namespace maxinfo {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t RngStream::mix(std::uint64_t x) {
  std::uint64_t state = x;
  return splitmix64(state);
}

RngStream RngStream::substream(std::uint64_t master, std::string_view tag,
                               std::uint64_t index) {
  std::uint64_t state = master;
  std::uint64_t a = splitmix64(state);
  state = a ^ fnv1a64(tag);
  std::uint64_t b = splitmix64(state);
  state = b ^ index;
  return RngStream(splitmix64(state));
}

std::uint64_t RngStream::next_below(std::uint64_t bound) {
  if (bound == 0) fail(ErrorCode::param_out_of_range, "next_below(0)");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % bound;
}

double RngStream::next_laplace(double scale) {
  return laplace_from_unit(scale, next_open_unit());
}

double laplace_from_unit(double scale, double u) {
  if (!(scale > 0)) fail(ErrorCode::param_out_of_range, "laplace scale <= 0");
  const double v = u - 0.5;
  const double sign = (v > 0) - (v < 0);
  return -scale * sign * std::log1p(-2.0 * std::fabs(v));
}

}  // namespace maxinfo
