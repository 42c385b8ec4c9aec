#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxinfo/errors.hpp"
#include "maxinfo/rng.hpp"

namespace maxinfo {

using BigInt = boost::multiprecision::cpp_int;

// Fixed-length bit vector packed into 64-bit words (bit i lives at word i/64,
// bit i%64). Lexicographic order reads bit 0 first.
class BitString {
 public:
  explicit BitString(std::size_t n);
  static BitString from_string(std::string_view bits);  // e.g. "0101"
  static BitString from_hex(std::string_view hex, std::size_t n);
  static BitString random(std::size_t n, RngStream& rng);

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  void set(std::size_t i, bool value) {
    if (value) {
      words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    } else {
      words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
  }

  std::size_t weight() const;
  std::size_t hamming_distance(const BitString& other) const;
  bool and_parity(const BitString& other) const;  // popcount(a & b) mod 2

  BitString& operator^=(const BitString& other);
  friend BitString operator^(BitString a, const BitString& b) {
    a ^= b;
    return a;
  }
  bool operator==(const BitString& other) const {
    return n_ == other.n_ && words_ == other.words_;
  }
  bool lex_less(const BitString& other) const;
  bool is_zero() const;

  std::string to_string() const;
  std::string to_hex() const;  // big-endian hex of sum_i bit_i * 2^i

 private:
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

// Parity-check matrix H (r x n, full row rank over GF(2)) together with the
// derived machinery for working in its null space: a reduced form for solving
// H b = a, and a basis of the code C = ker H.
class ParityCheckCode {
 public:
  ParityCheckCode(std::size_t n, std::vector<BitString> rows);

  std::size_t n() const { return n_; }
  std::size_t r() const { return rows_.size(); }
  std::size_t k() const { return n_ - rows_.size(); }
  const std::vector<BitString>& rows() const { return rows_; }

  std::optional<std::size_t> d_min() const { return d_min_; }
  bool verified() const { return verified_; }
  void declare_d_min(std::size_t d, bool verified);

  // Syndrome H x (r bits).
  BitString syndrome(const BitString& x) const;
  // A particular solution b with H b = a; every syndrome is attained because
  // H has full row rank.
  BitString solve(const BitString& a) const;
  const std::vector<BitString>& null_basis() const { return basis_; }

 private:
  std::size_t n_;
  std::vector<BitString> rows_;
  std::vector<BitString> reduced_rows_;
  std::vector<BitString> row_ops_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<BitString> basis_;
  std::optional<std::size_t> d_min_;
  bool verified_ = false;
};

struct AffineCoset {
  const ParityCheckCode* code;
  BitString syndrome;
};

// Exhaustive minimum nonzero codeword weight of ker H. Enumerates 2^k - 1
// codewords; requires k >= 1 (DegenerateCode otherwise) and 2^k <= cap.
std::size_t min_distance(const ParityCheckCode& code,
                         std::size_t cap = std::size_t{1} << 24);

enum class CodeMode { theorem, demo };

// Rejection-samples a uniformly random full-row-rank H with
// r = min(n-1, ceil(3 d_min log2 n)) rows (or r_override) until the
// exhaustively verified minimum distance reaches d_min. Theorem mode
// enforces d_min < n/2 and n - ceil(3 d_min log2 n) >= 1.
ParityCheckCode random_code_with_distance(
    std::size_t n, std::size_t d_min, std::size_t max_tries, RngStream& rng,
    CodeMode mode = CodeMode::theorem,
    std::optional<std::size_t> r_override = std::nullopt,
    std::size_t cap = std::size_t{1} << 24);

// Nearest codeword of the affine coset {c : H c = a} to x, with ties broken
// by the lexicographically smallest codeword. Returns (codeword, distance).
std::pair<BitString, std::size_t> nearest_codeword(
    const AffineCoset& coset, const BitString& x,
    std::size_t cap = std::size_t{1} << 24);

// Exact |B_radius| = sum_{i<=radius} C(n, i).
BigInt hamming_ball_volume(std::size_t n, std::size_t radius);

// JSON file format: {n, r, rows: [hex...], d_min, verified}.
std::string code_to_json(const ParityCheckCode& code);
ParityCheckCode code_from_json(const std::string& text);

}  // namespace maxinfo
