#include "fibhill/biguint.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fibhill/error.hpp"

namespace fibhill {

BigUint::BigUint(std::uint64_t v) {
  while (v != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(v));
    v >>= 32;
  }
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::pow(const BigUint& base, unsigned exp) {
  BigUint result(1);
  for (unsigned i = 0; i < exp; ++i) result *= base;
  return result;
}

BigUint& BigUint::operator*=(const BigUint& rhs) {
  if (is_zero() || rhs.is_zero()) {
    limbs_.clear();
    return *this;
  }
  std::vector<std::uint32_t> out(limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      const std::uint64_t cur = out[i + j] + static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    out[i + rhs.limbs_.size()] = static_cast<std::uint32_t>(carry);
  }
  limbs_ = std::move(out);
  trim();
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
  if (*this < rhs) throw Error(Errc::out_of_range, "BigUint subtraction would go negative");
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow -
                       (i < rhs.limbs_.size() ? static_cast<std::int64_t>(rhs.limbs_[i]) : 0);
    borrow = cur < 0 ? 1 : 0;
    if (cur < 0) cur += std::int64_t{1} << 32;
    limbs_[i] = static_cast<std::uint32_t>(cur);
  }
  trim();
  return *this;
}

std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
  if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() <=> b.limbs_.size();
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
  }
  return std::strong_ordering::equal;
}

std::string BigUint::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> work = limbs_;
  std::vector<std::uint32_t> chunks;  // base 10^9, little-endian
  while (!work.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      const std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1'000'000'000u);
      rem = cur % 1'000'000'000u;
    }
    chunks.push_back(static_cast<std::uint32_t>(rem));
    while (!work.empty() && work.back() == 0) work.pop_back();
  }
  std::string out = std::to_string(chunks.back());
  char buf[16];
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::snprintf(buf, sizeof buf, "%09u", chunks[i]);
    out += buf;
  }
  return out;
}

std::string BigUint::to_scientific(unsigned digits) const {
  if (digits == 0) digits = 1;
  std::string dec = to_string();
  int exponent = static_cast<int>(dec.size()) - 1;
  std::string mant = dec.substr(0, std::min<std::size_t>(digits, dec.size()));
  if (dec.size() > digits && dec[digits] >= '5') {
    // Round half up on the decimal expansion.
    int i = static_cast<int>(mant.size()) - 1;
    while (i >= 0 && mant[static_cast<std::size_t>(i)] == '9') mant[static_cast<std::size_t>(i--)] = '0';
    if (i < 0) {
      mant.insert(mant.begin(), '1');
      mant.pop_back();
      ++exponent;
    } else {
      ++mant[static_cast<std::size_t>(i)];
    }
  }
  while (mant.size() < digits) mant.push_back('0');
  std::string out(1, mant[0]);
  if (mant.size() > 1) out += "." + mant.substr(1);
  char buf[16];
  std::snprintf(buf, sizeof buf, "e%c%02d", exponent < 0 ? '-' : '+', std::abs(exponent));
  return out + buf;
}

double BigUint::log10() const {
  if (is_zero()) return -HUGE_VAL;
  // The top two limbs carry more precision than a double keeps.
  const std::size_t n = limbs_.size();
  double top = limbs_[n - 1];
  std::size_t shifted = n - 1;
  if (n >= 2) {
    top = top * 4294967296.0 + limbs_[n - 2];
    shifted = n - 2;
  }
  return std::log10(top) + static_cast<double>(shifted) * 32.0 * std::log10(2.0);
}

}  // namespace fibhill
