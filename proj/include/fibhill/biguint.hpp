#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace fibhill {

/// Minimal arbitrary-precision unsigned integer: enough for exact group orders.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v);  // NOLINT(google-explicit-constructor)

  static BigUint pow(const BigUint& base, unsigned exp);

  BigUint& operator*=(const BigUint& rhs);
  /// Throws out-of-range if rhs > *this.
  BigUint& operator-=(const BigUint& rhs);

  friend BigUint operator*(BigUint a, const BigUint& b) { return a *= b; }
  friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }

  friend bool operator==(const BigUint&, const BigUint&) = default;
  friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b);

  bool is_zero() const noexcept { return limbs_.empty(); }
  std::string to_string() const;
  /// Rounded to `digits` significant digits, e.g. "1.82218e+06".
  std::string to_scientific(unsigned digits = 6) const;
  double log10() const;

 private:
  void trim();

  std::vector<std::uint32_t> limbs_;  // little-endian, no leading zeros
};

}  // namespace fibhill
