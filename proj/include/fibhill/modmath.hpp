#pragma once

/**
 * @file modmath.hpp
 * @brief Exact modular integer arithmetic over Z/mZ.
 *
 * All moduli handled by the cipher are below 2^31, so a product of two
 * residues always fits in 64 bits. Primality testing accepts anything
 * below 2^63 and uses 128-bit intermediates internally.
 */

#include <cstdint>
#include <map>

namespace fibhill {

using Residue = std::uint64_t;

__extension__ using uint128 = unsigned __int128;
__extension__ using int128 = __int128;

/// Upper bound (exclusive) on every modulus used for matrices and keys.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

/// A prime p with 2 <= p < 2^31. Construction validates both conditions.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t value() const noexcept { return p_; }
  operator std::uint64_t() const noexcept { return p_; }

  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  std::uint64_t p_;
};

/// Canonical representative of x in [0, m).
constexpr Residue reduce(std::int64_t x, std::uint64_t m) noexcept {
  const auto sm = static_cast<std::int64_t>(m);
  const std::int64_t r = x % sm;
  return static_cast<Residue>(r < 0 ? r + sm : r);
}

constexpr Residue mul_mod(Residue a, Residue b, std::uint64_t m) noexcept {
  return static_cast<Residue>(static_cast<uint128>(a) * b % m);
}

constexpr Residue add_mod(Residue a, Residue b, std::uint64_t m) noexcept {
  const Residue s = a + b;
  return s >= m ? s - m : s;
}

constexpr Residue sub_mod(Residue a, Residue b, std::uint64_t m) noexcept {
  return a >= b ? a - b : a + m - b;
}

/// base^exp mod m by square-and-multiply. Throws invalid-modulus for m < 2.
Residue mod_pow(Residue base, std::uint64_t exp, std::uint64_t m);

/// a^-1 mod m via extended Euclid. Throws not-invertible when gcd(a, m) != 1.
Residue mod_inv(Residue a, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for every n < 2^63.
bool is_prime(std::uint64_t n);

/// Prime factorization by trial division: prime -> multiplicity.
std::map<std::uint64_t, unsigned> factorize(std::uint64_t n);

/// True iff alpha has multiplicative order p - 1. alpha = 0 is rejected.
bool is_primitive_root(Residue alpha, PrimeModulus p);

/// Smallest primitive root of p (1 for p = 2).
Residue find_primitive_root(PrimeModulus p);

}  // namespace fibhill
