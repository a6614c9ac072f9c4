#include "fibhill/keyexchange.hpp"

#include <string>

#include "fibhill/error.hpp"

namespace fibhill {

namespace {

void check_exponent(std::uint64_t x, PrimeModulus p, const char* name) {
  if (x <= 1 || x >= p.value() - 1) {
    throw Error(Errc::out_of_range, std::string(name) + " must satisfy 1 < " + name + " < p - 1 = " +
                                        std::to_string(p.value() - 1) + ", got " + std::to_string(x));
  }
}

}  // namespace

MultinacciOrder check_lambda(std::uint64_t lambda, const LambdaPolicy& policy) {
  if (lambda < policy.min) {
    throw Error(Errc::lambda_degenerate, "derived lambda = " + std::to_string(lambda) + " is below " +
                                             std::to_string(policy.min) + "; choose another ephemeral exponent");
  }
  if (lambda > policy.max || lambda > kMaxOrder) {
    throw Error(Errc::lambda_too_large, "derived lambda = " + std::to_string(lambda) + " exceeds " +
                                            std::to_string(policy.max) + "; choose another ephemeral exponent");
  }
  return MultinacciOrder(static_cast<std::int64_t>(lambda));
}

void validate_public_key(const PublicKey& pk) {
  if (pk.e1 == 0 || pk.e1 >= pk.p.value() || !is_primitive_root(pk.e1, pk.p)) {
    throw Error(Errc::invalid_argument,
                "e1 = " + std::to_string(pk.e1) + " is not a primitive root of " + std::to_string(pk.p.value()));
  }
  if (pk.e2 == 0 || pk.e2 >= pk.p.value()) {
    throw Error(Errc::invalid_argument, "e2 = " + std::to_string(pk.e2) + " is not a unit mod p");
  }
}

KeyPair make_keypair(PrimeModulus p, std::uint64_t d, std::optional<Residue> alpha) {
  check_exponent(d, p, "d");
  const Residue e1 = alpha ? *alpha : find_primitive_root(p);
  if (e1 == 0 || e1 >= p.value() || !is_primitive_root(e1, p)) {
    throw Error(Errc::invalid_argument,
                std::to_string(e1) + " is not a primitive root of " + std::to_string(p.value()));
  }
  const Residue e2 = mod_pow(e1, d, p.value());
  return KeyPair{PublicKey{p, e1, e2}, PrivateKey{p, d, e1}};
}

void validate_keypair(const PublicKey& pk, const PrivateKey& sk) {
  validate_public_key(pk);
  if (!(pk.p == sk.p) || pk.e1 != sk.e1 || mod_pow(sk.e1, sk.d, sk.p.value()) != pk.e2) {
    throw Error(Errc::invalid_argument, "private key does not match public key");
  }
}

SessionKey derive_session(const PublicKey& pk, std::uint64_t e, const LambdaPolicy& policy) {
  check_exponent(e, pk.p, "e");
  const Residue k = mod_pow(pk.e1, e, pk.p.value());
  const Residue lambda = mod_pow(pk.e2, e, pk.p.value());
  return SessionKey{k, check_lambda(lambda, policy)};
}

MultinacciOrder recover_session(const PrivateKey& sk, Residue k, const LambdaPolicy& policy) {
  if (k == 0 || k >= sk.p.value()) {
    throw Error(Errc::out_of_range, "signature k = " + std::to_string(k) + " outside [1, p)");
  }
  return check_lambda(mod_pow(k, sk.d, sk.p.value()), policy);
}

QMatrix session_to_keymatrix(const SessionKey& s, PrimeModulus p, bool inverse) {
  const auto k = static_cast<std::int64_t>(s.k);
  return q_power(s.lambda, inverse ? -k : k, p.value());
}

}  // namespace fibhill
