#pragma once

/**
 * @file keyexchange.hpp
 * @brief ElGamal-style agreement on the pair (k, lambda) that selects Q_lambda^k.
 *
 * The receiver publishes (p, e1, e2 = e1^d). A sender with ephemeral e sends
 * k = e1^e and keeps lambda = e2^e; the receiver recovers lambda = k^d.
 * Nothing here authenticates anyone: k is public and carries no signature.
 */

#include <cstdint>
#include <optional>

#include "fibhill/modmath.hpp"
#include "fibhill/multinacci.hpp"
#include "fibhill/qmatrix.hpp"

namespace fibhill {

struct PublicKey {
  PrimeModulus p;
  Residue e1;  // primitive root
  Residue e2;
};

struct PrivateKey {
  PrimeModulus p;
  std::uint64_t d;
  Residue e1;
};

struct KeyPair {
  PublicKey public_key;
  PrivateKey private_key;
};

struct SessionKey {
  Residue k;
  MultinacciOrder lambda;
};

/// Accepted range for a derived lambda. Anything else must be re-drawn.
struct LambdaPolicy {
  std::uint64_t min = 2;
  std::uint64_t max = kMaxOrder;
};

/// Throws lambda-degenerate / lambda-too-large (message carries the value).
MultinacciOrder check_lambda(std::uint64_t lambda, const LambdaPolicy& policy = {});

/// Uses the smallest primitive root when alpha is not given.
KeyPair make_keypair(PrimeModulus p, std::uint64_t d, std::optional<Residue> alpha = std::nullopt);

/// Checks that `sk` and `pk` belong together and that e1 is a primitive root.
void validate_keypair(const PublicKey& pk, const PrivateKey& sk);
void validate_public_key(const PublicKey& pk);

SessionKey derive_session(const PublicKey& pk, std::uint64_t e, const LambdaPolicy& policy = {});

MultinacciOrder recover_session(const PrivateKey& sk, Residue k, const LambdaPolicy& policy = {});

/// Q_lambda^k mod p, or Q_lambda^-k when `inverse` is set.
QMatrix session_to_keymatrix(const SessionKey& s, PrimeModulus p, bool inverse);

}  // namespace fibhill
