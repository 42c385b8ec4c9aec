#include "maxinfo/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <nlohmann/json.hpp>

namespace maxinfo {

namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BitString::BitString(std::size_t n) : n_(n), words_(word_count(n), 0) {
  if (n == 0) fail(ErrorCode::length_mismatch, "empty bit string");
}

BitString BitString::from_string(std::string_view bits) {
  BitString out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.set(i, true);
    } else if (bits[i] != '0') {
      fail(ErrorCode::parse_error, "bit strings may contain only 0 and 1");
    }
  }
  return out;
}

BitString BitString::from_hex(std::string_view hex, std::size_t n) {
  BitString out(n);
  // Big-endian hex of the integer sum_i bit_i * 2^i.
  for (std::size_t pos = hex.size(); pos-- > 0;) {
    const int v = hex_value(hex[pos]);
    if (v < 0) fail(ErrorCode::parse_error, "invalid hex digit");
    for (int b = 0; b < 4; ++b) {
      const std::size_t i = (hex.size() - 1 - pos) * 4 + b;
      if ((v >> b) & 1) {
        if (i >= n) {
          fail(ErrorCode::parse_error, "hex value has bits beyond length");
        }
        out.set(i, true);
      }
    }
  }
  return out;
}

BitString BitString::random(std::size_t n, RngStream& rng) {
  BitString out(n);
  for (std::size_t w = 0; w < out.words_.size(); ++w) {
    out.words_[w] = rng.next_u64();
  }
  const std::size_t tail = n & 63;
  if (tail != 0) {
    out.words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
  return out;
}

std::size_t BitString::weight() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

std::size_t BitString::hamming_distance(const BitString& other) const {
  if (n_ != other.n_) fail(ErrorCode::length_mismatch, "length mismatch");
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    total += std::popcount(words_[i] ^ other.words_[i]);
  }
  return total;
}

bool BitString::and_parity(const BitString& other) const {
  if (n_ != other.n_) fail(ErrorCode::length_mismatch, "length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    acc ^= words_[i] & other.words_[i];
  }
  return std::popcount(acc) & 1;
}

BitString& BitString::operator^=(const BitString& other) {
  if (n_ != other.n_) fail(ErrorCode::length_mismatch, "length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] ^= other.words_[i];
  }
  return *this;
}

bool BitString::lex_less(const BitString& other) const {
  if (n_ != other.n_) fail(ErrorCode::length_mismatch, "length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t diff = words_[i] ^ other.words_[i];
    if (diff != 0) {
      // The lowest differing bit index is the earliest position; "0" sorts
      // before "1" there.
      const int bit = std::countr_zero(diff);
      return ((words_[i] >> bit) & 1) == 0;
    }
  }
  return false;
}

bool BitString::is_zero() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::string BitString::to_string() const {
  std::string out(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

std::string BitString::to_hex() const {
  const std::size_t digits = (n_ + 3) / 4;
  std::string out(digits, '0');
  static const char* kHex = "0123456789abcdef";
  for (std::size_t d = 0; d < digits; ++d) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      const std::size_t i = d * 4 + b;
      if (i < n_ && get(i)) v |= 1 << b;
    }
    out[digits - 1 - d] = kHex[v];
  }
  return out;
}

ParityCheckCode::ParityCheckCode(std::size_t n, std::vector<BitString> rows)
    : n_(n), rows_(std::move(rows)) {
  if (rows_.empty() || rows_.size() >= n_) {
    fail(ErrorCode::param_out_of_range,
         "parity-check matrix needs 1 <= r < n rows");
  }
  for (const BitString& row : rows_) {
    if (row.size() != n_) {
      fail(ErrorCode::length_mismatch, "row length differs from n");
    }
  }
  // Gaussian elimination to reduced row echelon form; full row rank required.
  reduced_rows_ = rows_;
  std::vector<BitString> ops;  // row operations applied, for solve()
  ops.reserve(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    BitString e(rows_.size());
    e.set(i, true);
    ops.push_back(e);
  }
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n_ && pivot_row < reduced_rows_.size();
       ++col) {
    std::size_t found = pivot_row;
    while (found < reduced_rows_.size() && !reduced_rows_[found].get(col)) {
      ++found;
    }
    if (found == reduced_rows_.size()) continue;
    std::swap(reduced_rows_[pivot_row], reduced_rows_[found]);
    std::swap(ops[pivot_row], ops[found]);
    for (std::size_t row = 0; row < reduced_rows_.size(); ++row) {
      if (row != pivot_row && reduced_rows_[row].get(col)) {
        reduced_rows_[row] ^= reduced_rows_[pivot_row];
        ops[row] ^= ops[pivot_row];
      }
    }
    pivot_cols_.push_back(col);
    ++pivot_row;
  }
  if (pivot_row != rows_.size()) {
    fail(ErrorCode::validation_error,
         "parity-check matrix does not have full row rank");
  }
  row_ops_ = std::move(ops);

  // Null-space basis: one vector per free column.
  std::vector<bool> is_pivot(n_, false);
  for (std::size_t col : pivot_cols_) is_pivot[col] = true;
  for (std::size_t col = 0; col < n_; ++col) {
    if (is_pivot[col]) continue;
    BitString v(n_);
    v.set(col, true);
    for (std::size_t i = 0; i < pivot_cols_.size(); ++i) {
      if (reduced_rows_[i].get(col)) v.set(pivot_cols_[i], true);
    }
    basis_.push_back(std::move(v));
  }
}

void ParityCheckCode::declare_d_min(std::size_t d, bool verified) {
  if (d == 0 || d > n_) {
    fail(ErrorCode::param_out_of_range, "d_min must be in [1, n]");
  }
  d_min_ = d;
  verified_ = verified;
}

BitString ParityCheckCode::syndrome(const BitString& x) const {
  if (x.size() != n_) {
    fail(ErrorCode::length_mismatch, "vector length differs from n");
  }
  BitString out(rows_.size());
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    if (rows_[j].and_parity(x)) out.set(j, true);
  }
  return out;
}

BitString ParityCheckCode::solve(const BitString& a) const {
  if (a.size() != rows_.size()) {
    fail(ErrorCode::length_mismatch, "syndrome length differs from r");
  }
  // In reduced form, row i reads x[pivot_cols_[i]] = (R a)[i] with free
  // variables set to zero, where R is the accumulated row-operation matrix.
  BitString b(n_);
  for (std::size_t i = 0; i < pivot_cols_.size(); ++i) {
    if (row_ops_[i].and_parity(a)) b.set(pivot_cols_[i], true);
  }
  return b;
}

std::size_t min_distance(const ParityCheckCode& code, std::size_t cap) {
  const std::size_t k = code.k();
  if (k == 0) {
    fail(ErrorCode::degenerate_code,
         "code has rank 0; minimum distance undefined");
  }
  if (k >= 64 || (std::size_t{1} << k) > cap) {
    fail(ErrorCode::cap_exceeded, "2^k codewords exceed enumeration cap");
  }
  const std::size_t total = std::size_t{1} << k;
  BitString current(code.n());
  std::size_t best = code.n() + 1;
  for (std::size_t i = 1; i < total; ++i) {
    current ^= code.null_basis()[std::countr_zero(i)];
    best = std::min(best, current.weight());
  }
  return best;
}

ParityCheckCode random_code_with_distance(std::size_t n, std::size_t d_min,
                                          std::size_t max_tries,
                                          RngStream& rng, CodeMode mode,
                                          std::optional<std::size_t> r_override,
                                          std::size_t cap) {
  if (d_min == 0) fail(ErrorCode::param_out_of_range, "d_min must be >= 1");
  const double log2n = std::log2(static_cast<double>(n));
  const std::size_t r_theorem =
      static_cast<std::size_t>(std::ceil(3.0 * static_cast<double>(d_min) * log2n - 1e-9));
  if (mode == CodeMode::theorem) {
    if (2 * d_min >= n) {
      fail(ErrorCode::param_out_of_range,
           "theorem mode requires d_min < n/2");
    }
    if (r_theorem >= n) {
      fail(ErrorCode::param_out_of_range,
           "theorem mode requires n - ceil(3 d_min log2 n) >= 1");
    }
  } else if (d_min >= n) {
    fail(ErrorCode::param_out_of_range, "d_min must be < n");
  }
  const std::size_t r =
      r_override ? *r_override : std::min(n - 1, r_theorem);
  if (r == 0 || r >= n) {
    fail(ErrorCode::param_out_of_range, "need 1 <= r < n");
  }
  if (n - r >= 64 || (std::size_t{1} << (n - r)) > cap) {
    fail(ErrorCode::cap_exceeded,
         "verification cost 2^(n-r) exceeds cap " + std::to_string(cap));
  }

  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<BitString> rows;
    rows.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
      rows.push_back(BitString::random(n, rng));
    }
    try {
      ParityCheckCode code(n, std::move(rows));
      const std::size_t d = min_distance(code, cap);
      if (d >= d_min) {
        code.declare_d_min(d, true);
        return code;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::validation_error) throw;  // rank deficient: retry
    }
  }
  fail(ErrorCode::exhausted,
       "no code with the requested distance after " +
           std::to_string(max_tries) + " tries");
}

std::pair<BitString, std::size_t> nearest_codeword(const AffineCoset& coset,
                                                   const BitString& x,
                                                   std::size_t cap) {
  const ParityCheckCode& code = *coset.code;
  const std::size_t k = code.k();
  if (k >= 64 || (std::size_t{1} << k) > cap) {
    fail(ErrorCode::cap_exceeded, "2^k coset members exceed enumeration cap");
  }
  BitString current = code.solve(coset.syndrome);
  BitString best = current;
  std::size_t best_dist = current.hamming_distance(x);
  const std::size_t total = std::size_t{1} << k;
  for (std::size_t i = 1; i < total; ++i) {
    current ^= code.null_basis()[std::countr_zero(i)];
    const std::size_t dist = current.hamming_distance(x);
    if (dist < best_dist ||
        (dist == best_dist && current.lex_less(best))) {
      best = current;
      best_dist = dist;
    }
  }
  return {best, best_dist};
}

BigInt hamming_ball_volume(std::size_t n, std::size_t radius) {
  if (radius > n) {
    fail(ErrorCode::param_out_of_range, "radius must be <= n");
  }
  BigInt total = 1;  // C(n, 0)
  BigInt binom = 1;
  for (std::size_t i = 1; i <= radius; ++i) {
    binom = binom * static_cast<std::uint64_t>(n - i + 1) /
            static_cast<std::uint64_t>(i);
    total += binom;
  }
  return total;
}

std::string code_to_json(const ParityCheckCode& code) {
  nlohmann::json j;
  j["n"] = code.n();
  j["r"] = code.r();
  std::vector<std::string> rows;
  rows.reserve(code.r());
  for (const BitString& row : code.rows()) rows.push_back(row.to_hex());
  j["rows"] = rows;
  if (code.d_min()) {
    j["d_min"] = *code.d_min();
  } else {
    j["d_min"] = nullptr;
  }
  j["verified"] = code.verified();
  return j.dump(2) + "\n";
}

ParityCheckCode code_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::parse_error, std::string("bad code file: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("rows")) {
    fail(ErrorCode::parse_error, "code file needs fields n and rows");
  }
  const std::size_t n = j["n"].get<std::size_t>();
  std::vector<BitString> rows;
  for (const auto& row : j["rows"]) {
    rows.push_back(BitString::from_hex(row.get<std::string>(), n));
  }
  if (j.contains("r") && j["r"].get<std::size_t>() != rows.size()) {
    fail(ErrorCode::parse_error, "row count differs from declared r");
  }
  ParityCheckCode code(n, std::move(rows));
  if (j.contains("d_min") && !j["d_min"].is_null()) {
    const bool verified = j.value("verified", false);
    code.declare_d_min(j["d_min"].get<std::size_t>(), verified);
  }
  return code;
}

}  // namespace maxinfo
