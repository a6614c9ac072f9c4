#pragma once

/**
 * @file serialization.hpp
 * @brief On-disk JSON formats. Field order is fixed and output is compact:
 *
 *   public key   {"v":1,"p":37,"e1":5,"e2":13}
 *   private key  {"v":1,"p":37,"e1":5,"d":13}
 *   envelope     {"v":1,"p":37,"k":4,"b":[31,13,19],"len":9,"cipher":"HP393IVY1"}
 *   alphabet     {"v":1,"symbols":"ABC..."}
 *
 * Every writer appends a single trailing newline.
 */

#include <string>
#include <string_view>

#include "fibhill/analysis.hpp"
#include "fibhill/cipher.hpp"
#include "fibhill/keyexchange.hpp"

namespace fibhill {

std::string to_json(const PublicKey& pk);
std::string to_json(const PrivateKey& sk);
std::string to_json(const Envelope& env);
std::string to_json(const Alphabet& a);
std::string to_json(const KeyspaceReport& r);
std::string to_json(const AttackResult& r);

PublicKey parse_public_key(std::string_view json);
PrivateKey parse_private_key(std::string_view json);
Envelope parse_envelope(std::string_view json);
Alphabet parse_alphabet(std::string_view json);

}  // namespace fibhill
