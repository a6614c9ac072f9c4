#include "fibhill/serialization.hpp"

#include <json.hpp>

#include "fibhill/error.hpp"

namespace fibhill {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump_line(const ordered_json& j) { return j.dump() + "\n"; }

ordered_json parse_object(std::string_view text, const char* what) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, std::string(what) + ": " + e.what());
  }
  if (!j.is_object()) throw Error(Errc::parse_error, std::string(what) + ": expected a JSON object");
  const auto v = j.find("v");
  if (v == j.end() || !v->is_number_unsigned() || v->get<std::uint64_t>() != 1) {
    throw Error(Errc::parse_error, std::string(what) + ": missing or unsupported \"v\" (expected 1)");
  }
  return j;
}

std::uint64_t get_uint(const ordered_json& j, const char* field, const char* what) {
  const auto it = j.find(field);
  if (it == j.end() || !it->is_number_unsigned()) {
    throw Error(Errc::parse_error, std::string(what) + ": field \"" + field + "\" must be a non-negative integer");
  }
  return it->get<std::uint64_t>();
}

}  // namespace

std::string to_json(const PublicKey& pk) {
  ordered_json j;
  j["v"] = 1;
  j["p"] = pk.p.value();
  j["e1"] = pk.e1;
  j["e2"] = pk.e2;
  return dump_line(j);
}

std::string to_json(const PrivateKey& sk) {
  ordered_json j;
  j["v"] = 1;
  j["p"] = sk.p.value();
  j["e1"] = sk.e1;
  j["d"] = sk.d;
  return dump_line(j);
}

std::string to_json(const Envelope& env) {
  ordered_json j;
  j["v"] = 1;
  j["p"] = env.p;
  j["k"] = env.k;
  j["b"] = env.b;
  j["len"] = env.len;
  j["cipher"] = env.cipher;
  return dump_line(j);
}

std::string to_json(const Alphabet& a) {
  ordered_json j;
  j["v"] = 1;
  j["symbols"] = a.utf8();
  return dump_line(j);
}

std::string to_json(const KeyspaceReport& r) {
  ordered_json j;
  j["p"] = r.p;
  j["lambda"] = r.lambda;
  j["gl_order"] = r.gl_order.to_string();
  j["structured_count"] = r.structured_count;
  j["period"] = r.period ? ordered_json(*r.period) : ordered_json(nullptr);
  j["ratio_log10"] = r.ratio_log10;
  return dump_line(j);
}

std::string to_json(const AttackResult& r) {
  ordered_json j;
  ordered_json candidates = ordered_json::array();
  for (const Candidate& c : r.candidates) {
    ordered_json entry;
    entry["lambda"] = c.lambda;
    entry["k"] = c.k;
    candidates.push_back(entry);
  }
  j["candidates"] = candidates;
  j["tried"] = r.tried;
  j["budget_exhausted"] = r.budget_exhausted;
  j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  return dump_line(j);
}

PublicKey parse_public_key(std::string_view json) {
  const auto j = parse_object(json, "public key");
  PublicKey pk{PrimeModulus(get_uint(j, "p", "public key")), get_uint(j, "e1", "public key"),
               get_uint(j, "e2", "public key")};
  validate_public_key(pk);
  return pk;
}

PrivateKey parse_private_key(std::string_view json) {
  const auto j = parse_object(json, "private key");
  const PrimeModulus p(get_uint(j, "p", "private key"));
  const std::uint64_t d = get_uint(j, "d", "private key");
  const Residue e1 = get_uint(j, "e1", "private key");
  // Re-deriving the pair checks d's range and that e1 is a primitive root.
  make_keypair(p, d, e1);
  return PrivateKey{p, d, e1};
}

Envelope parse_envelope(std::string_view json) {
  const auto j = parse_object(json, "envelope");
  Envelope env;
  env.p = get_uint(j, "p", "envelope");
  env.k = get_uint(j, "k", "envelope");
  env.len = get_uint(j, "len", "envelope");
  const auto b = j.find("b");
  if (b == j.end() || !b->is_array()) throw Error(Errc::parse_error, "envelope: field \"b\" must be an array");
  for (const auto& x : *b) {
    if (!x.is_number_unsigned()) throw Error(Errc::parse_error, "envelope: \"b\" entries must be non-negative integers");
    env.b.push_back(x.get<Residue>());
  }
  const auto cipher = j.find("cipher");
  if (cipher == j.end() || !cipher->is_string()) {
    throw Error(Errc::parse_error, "envelope: field \"cipher\" must be a string");
  }
  env.cipher = cipher->get<std::string>();
  return env;
}

Alphabet parse_alphabet(std::string_view json) {
  const auto j = parse_object(json, "alphabet");
  const auto symbols = j.find("symbols");
  if (symbols == j.end() || !symbols->is_string()) {
    throw Error(Errc::parse_error, "alphabet: field \"symbols\" must be a string");
  }
  return Alphabet::from_utf8(symbols->get<std::string>());
}

}  // namespace fibhill
