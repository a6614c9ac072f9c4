#include "fibhill/modmath.hpp"

#include <array>
#include <string>

#include "fibhill/error.hpp"

namespace fibhill {

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p < 2 || p >= kMaxModulus) {
    throw Error(Errc::invalid_modulus, "prime modulus must satisfy 2 <= p < 2^31, got " + std::to_string(p));
  }
  if (!is_prime(p)) {
    throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  }
}

Residue mod_pow(Residue base, std::uint64_t exp, std::uint64_t m) {
  if (m < 2) {
    throw Error(Errc::invalid_modulus, "modulus must be >= 2, got " + std::to_string(m));
  }
  Residue result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

Residue mod_inv(Residue a, std::uint64_t m) {
  if (m < 2) {
    throw Error(Errc::invalid_modulus, "modulus must be >= 2, got " + std::to_string(m));
  }
  // Extended Euclid on (a mod m, m), tracking only the coefficient of a.
  std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(a % m);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) {
    throw Error(Errc::not_invertible,
                std::to_string(a) + " is not a unit mod " + std::to_string(m) + " (gcd " + std::to_string(r0) + ")");
  }
  return reduce(s0, m);
}

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
  std::uint64_t x = mod_pow(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto q : kWitnesses) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve prime bases are exact below 3.18e23.
  for (auto a : kWitnesses) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> factors;
  if (n < 2) return factors;
  while ((n & 1) == 0) {
    ++factors[2];
    n >>= 1;
  }
  for (std::uint64_t q = 3; q <= n / q; q += 2) {
    while (n % q == 0) {
      ++factors[q];
      n /= q;
    }
  }
  if (n > 1) ++factors[n];
  return factors;
}

bool is_primitive_root(Residue alpha, PrimeModulus p) {
  if (alpha == 0 || alpha >= p.value()) {
    throw Error(Errc::invalid_argument,
                "primitive root candidate must lie in [1, p), got " + std::to_string(alpha));
  }
  const std::uint64_t group_order = p.value() - 1;
  if (group_order == 1) return alpha == 1;
  for (const auto& [q, mult] : factorize(group_order)) {
    if (mod_pow(alpha, group_order / q, p.value()) == 1) return false;
  }
  return true;
}

Residue find_primitive_root(PrimeModulus p) {
  for (Residue alpha = 1; alpha < p.value(); ++alpha) {
    if (is_primitive_root(alpha, p)) return alpha;
  }
  // Unreachable: every prime has a primitive root.
  throw Error(Errc::invalid_argument, "no primitive root found for " + std::to_string(p.value()));
}

}  // namespace fibhill
