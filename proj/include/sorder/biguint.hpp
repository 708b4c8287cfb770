#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sorder::detail {

// Unsigned integer with as many 64-bit limbs as needed.  Supports exactly
// the arithmetic required for binomial-factorial coefficient tables:
// multiply by a machine word, exact-divide by a machine word, compare,
// and convert out.  128-bit integers are not enough for the coefficient
// tables this library builds (they overflow around degree 60), hence this.
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(std::uint64_t v) {
    if (v != 0) limbs_.push_back(v);
  }

  bool is_zero() const { return limbs_.empty(); }

  bool operator==(const BigUint&) const = default;

  BigUint& mul_u64(std::uint64_t x) {
    if (x == 0 || limbs_.empty()) {
      limbs_.clear();
      return *this;
    }
    unsigned __int128 carry = 0;
    for (auto& limb : limbs_) {
      unsigned __int128 prod = static_cast<unsigned __int128>(limb) * x + carry;
      limb = static_cast<std::uint64_t>(prod);
      carry = prod >> 64;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
    return *this;
  }

  // Division that must leave no remainder; used where divisibility is an
  // algebraic identity, so a nonzero remainder means a bug.
  BigUint& div_exact_u64(std::uint64_t d) {
    if (d == 0) throw std::logic_error("BigUint: division by zero");
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      unsigned __int128 cur = (rem << 64) | limbs_[i];
      limbs_[i] = static_cast<std::uint64_t>(cur / d);
      rem = cur % d;
    }
    if (rem != 0) throw std::logic_error("BigUint: inexact division");
    trim();
    return *this;
  }

  double to_double() const {
    double r = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      r = std::ldexp(r, 64) + static_cast<double>(limbs_[i]);
    }
    return r;
  }

  // Fits-in-word accessor for small values; throws otherwise.
  std::uint64_t to_u64() const {
    if (limbs_.size() > 1) throw std::logic_error("BigUint: value exceeds 64 bits");
    return limbs_.empty() ? 0 : limbs_[0];
  }

  std::string to_string() const {
    if (limbs_.empty()) return "0";
    // peel off 19 decimal digits at a time
    constexpr std::uint64_t kChunk = 10'000'000'000'000'000'000ull;
    BigUint tmp = *this;
    std::vector<std::uint64_t> chunks;
    while (!tmp.is_zero()) {
      unsigned __int128 rem = 0;
      for (std::size_t i = tmp.limbs_.size(); i-- > 0;) {
        unsigned __int128 cur = (rem << 64) | tmp.limbs_[i];
        tmp.limbs_[i] = static_cast<std::uint64_t>(cur / kChunk);
        rem = cur % kChunk;
      }
      tmp.trim();
      chunks.push_back(static_cast<std::uint64_t>(rem));
    }
    std::string out = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
      std::string part = std::to_string(chunks[i]);
      out += std::string(19 - part.size(), '0') + part;
    }
    return out;
  }

 private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint64_t> limbs_;  // little-endian, no trailing zeros
};

}  // namespace sorder::detail
