#pragma once

/**
 * @file analysis.hpp
 * @brief Keyspace measurements and a known-plaintext search over (lambda, k).
 *
 * gl_order counts every invertible lambda x lambda matrix over F_p, the space
 * a naive key search would face. The scheme only ever reaches powers of one
 * companion matrix, which structured_keyspace counts directly.
 */

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fibhill/biguint.hpp"
#include "fibhill/cipher.hpp"
#include "fibhill/modmath.hpp"

namespace fibhill {

inline constexpr unsigned kMaxGlOrderLambda = 16;

/// |GL_lambda(F_p)| = (p^l - p^(l-1)) (p^l - p^(l-2)) ... (p^l - p)(p^l - 1), exact.
/// Accepts 1 <= lambda <= 16.
BigUint gl_order(unsigned lambda, PrimeModulus p);

struct KeyspaceCount {
  std::uint64_t count = 0;
  std::optional<std::uint64_t> period;  // smallest k > 0 with Q^k = I, if <= k_max
};

/// Distinct Q_lambda^k mod p for k in [1, k_max].
KeyspaceCount structured_keyspace(PrimeModulus p, MultinacciOrder lambda, std::uint64_t k_max);

struct KeyspaceReport {
  std::uint64_t p = 0;
  unsigned lambda = 0;
  BigUint gl_order;
  std::uint64_t structured_count = 0;
  std::optional<std::uint64_t> period;
  double ratio_log10 = 0;  // log10(structured_count / gl_order)
};

KeyspaceReport keyspace_report(PrimeModulus p, MultinacciOrder lambda, std::uint64_t k_max);

/// A plaintext/ciphertext residue pair of equal length (one or more blocks).
struct KnownPair {
  std::vector<Residue> plain;
  std::vector<Residue> cipher;
};

struct AttackOptions {
  std::optional<std::vector<Residue>> shift;  // B, if known
  unsigned lambda_max = 8;
  std::uint64_t k_max = 100;
  /// Stop after this many (lambda, k) trials; unlimited when unset.
  std::optional<std::uint64_t> budget;
};

struct Candidate {
  unsigned lambda;
  std::uint64_t k;
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct AttackResult {
  std::vector<Candidate> candidates;  // lambda ascending, then k
  std::uint64_t tried = 0;
  bool budget_exhausted = false;
  std::chrono::nanoseconds elapsed{};
};

/**
 * Tries every lambda in [2, lambda_max] and k in [1, k_max], keeping each
 * (lambda, k) under which all pairs encrypt consistently. A pair whose length
 * is not a multiple of lambda rules that lambda out. With B unknown the search
 * works on differences C_i - C_j = (P_i - P_j) K, so at least two pairs are
 * required.
 */
AttackResult known_plaintext_attack(std::span<const KnownPair> pairs, PrimeModulus p, const AttackOptions& opts);

}  // namespace fibhill
