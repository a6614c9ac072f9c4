#pragma once

/**
 * @file multinacci.hpp
 * @brief Order-lambda generalized Fibonacci ("multinacci") sequences.
 *
 * Seeds are f_0 = ... = f_{lambda-2} = 0 and f_{lambda-1} = 1. Every term is
 * the sum of the lambda terms before it; running the same relation backwards
 * gives f_n = f_{n+lambda} - (f_{n+1} + ... + f_{n+lambda-1}) for negative n.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "fibhill/modmath.hpp"

namespace fibhill {

/// Largest accepted sequence order. Bounds key matrices to desk scale.
inline constexpr unsigned kMaxOrder = 64;

/// Recurrence order lambda, validated to [2, kMaxOrder].
class MultinacciOrder {
 public:
  explicit MultinacciOrder(std::int64_t lambda);

  unsigned value() const noexcept { return lambda_; }
  operator unsigned() const noexcept { return lambda_; }

  friend bool operator==(MultinacciOrder, MultinacciOrder) = default;

 private:
  unsigned lambda_;
};

/// f_lo..f_hi as exact signed integers or, with a modulus, canonical residues.
struct SequenceWindow {
  MultinacciOrder order;
  std::int64_t lo = 0;
  std::vector<std::int64_t> terms;
  std::optional<std::uint64_t> modulus;

  std::int64_t hi() const noexcept { return lo + static_cast<std::int64_t>(terms.size()) - 1; }
  std::int64_t at(std::int64_t index) const;
};

/// Seed block f_0..f_{lambda-1} = [0, ..., 0, 1].
SequenceWindow initial_values(MultinacciOrder order);

/**
 * Terms f_lo..f_hi. Without a modulus the recurrence runs in checked 64-bit
 * arithmetic and throws `overflow` rather than wrapping; with a modulus every
 * step is reduced and no intermediate grows. Runs in O(|lo| + |hi| + lambda)
 * time and O(hi - lo + lambda) memory.
 */
SequenceWindow terms(MultinacciOrder order, std::int64_t lo, std::int64_t hi,
                     std::optional<std::uint64_t> modulus = std::nullopt);

/// f_n mod m, computed entirely in mod-m arithmetic.
Residue term_mod(MultinacciOrder order, std::int64_t n, std::uint64_t m);

}  // namespace fibhill
