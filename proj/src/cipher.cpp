#include "fibhill/cipher.hpp"

#include <string>

#include "fibhill/error.hpp"
#include "utf8.hpp"

namespace fibhill {

namespace {

constexpr char32_t kExtensionBase = 0x100;
constexpr char32_t kExtensionEnd = 0xD800;  // surrogates start here

std::string describe(char32_t c) {
  std::string s;
  detail::utf8_append(s, c);
  return "'" + s + "'";
}

void check_block_shapes(std::span<const Block> blocks, const QMatrix& key, const ShiftVector& b) {
  const auto n = static_cast<Eigen::Index>(key.order().value());
  if (b.size() != n) {
    throw Error(Errc::dimension_mismatch,
                "shift vector has length " + std::to_string(b.size()) + ", key order is " + std::to_string(n));
  }
  if (b.modulus() != key.modulus()) {
    throw Error(Errc::modulus_mismatch, "shift vector and key use different moduli");
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].size() != n) {
      throw Error(Errc::dimension_mismatch, "block " + std::to_string(i) + " has length " +
                                                std::to_string(blocks[i].size()) + ", key order is " +
                                                std::to_string(n));
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      if (blocks[i](j) >= key.modulus()) {
        throw Error(Errc::value_out_of_range, "block " + std::to_string(i) + " holds non-canonical residue " +
                                                  std::to_string(blocks[i](j)));
      }
    }
  }
}

}  // namespace

Alphabet::Alphabet(std::u32string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() < 2) throw Error(Errc::invalid_argument, "alphabet needs at least two symbols");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!index_.emplace(symbols_[i], static_cast<Residue>(i)).second) {
      throw Error(Errc::invalid_argument, "duplicate alphabet symbol " + describe(symbols_[i]));
    }
  }
}

Alphabet Alphabet::from_utf8(std::string_view symbols) { return Alphabet(detail::utf8_decode(symbols)); }

const Alphabet& Alphabet::standard() {
  static const Alphabet kStandard(U"ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789 ");
  return kStandard;
}

std::optional<Residue> Alphabet::index_of(char32_t c) const {
  if (auto it = index_.find(c); it != index_.end()) return it->second;
  return std::nullopt;
}

char32_t Alphabet::symbol(Residue index) const {
  if (index >= symbols_.size()) {
    throw Error(Errc::value_out_of_range,
                "value " + std::to_string(index) + " outside alphabet of size " + std::to_string(symbols_.size()));
  }
  return symbols_[index];
}

std::string Alphabet::utf8() const { return detail::utf8_encode(symbols_); }

ShiftVector::ShiftVector(std::span<const Residue> entries, std::uint64_t p)
    : entries_(static_cast<Eigen::Index>(entries.size())), modulus_(p) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] >= p) {
      throw Error(Errc::out_of_range,
                  "shift entry " + std::to_string(entries[i]) + " is not a residue mod " + std::to_string(p));
    }
    entries_(static_cast<Eigen::Index>(i)) = entries[i];
  }
}

std::vector<Residue> ShiftVector::to_vector() const { return {entries_.data(), entries_.data() + entries_.size()}; }

std::vector<Residue> encode(std::string_view text, const Alphabet& a) {
  const std::u32string cps = detail::utf8_decode(text);
  std::vector<Residue> out;
  out.reserve(cps.size());
  for (std::size_t pos = 0; pos < cps.size(); ++pos) {
    char32_t c = cps[pos];
    auto idx = a.index_of(c);
    if (!idx && c >= U'a' && c <= U'z') idx = a.index_of(c - U'a' + U'A');
    if (!idx) {
      throw Error(Errc::unmapped_character,
                  "character " + describe(c) + " at position " + std::to_string(pos) + " is not in the alphabet");
    }
    out.push_back(*idx);
  }
  return out;
}

std::string decode(std::span<const Residue> values, const Alphabet& a) {
  std::string out;
  for (Residue v : values) detail::utf8_append(out, a.symbol(v));
  return out;
}

std::string render_cipher(std::span<const Residue> values, const Alphabet& a) {
  std::string out;
  for (Residue v : values) {
    if (v < a.size()) {
      detail::utf8_append(out, a.symbol(v));
      continue;
    }
    const Residue offset = v - a.size();
    if (offset >= kExtensionEnd - kExtensionBase) {
      throw Error(Errc::value_out_of_range, "ciphertext residue " + std::to_string(v) + " has no text symbol");
    }
    const auto cp = static_cast<char32_t>(kExtensionBase + offset);
    if (a.index_of(cp)) {
      throw Error(Errc::invalid_argument, "alphabet symbol " + describe(cp) + " collides with ciphertext extension");
    }
    detail::utf8_append(out, cp);
  }
  return out;
}

std::vector<Residue> parse_cipher(std::string_view text, const Alphabet& a, std::uint64_t p) {
  const std::u32string cps = detail::utf8_decode(text);
  std::vector<Residue> out;
  out.reserve(cps.size());
  for (std::size_t pos = 0; pos < cps.size(); ++pos) {
    const char32_t c = cps[pos];
    Residue v;
    if (auto idx = a.index_of(c)) {
      v = *idx;
    } else if (c >= kExtensionBase && c < kExtensionEnd) {
      v = a.size() + (c - kExtensionBase);
    } else {
      throw Error(Errc::unmapped_character,
                  "ciphertext character " + describe(c) + " at position " + std::to_string(pos) + " is not decodable");
    }
    if (v >= p) {
      throw Error(Errc::value_out_of_range, "ciphertext character " + describe(c) + " at position " +
                                                std::to_string(pos) + " is not a residue mod " + std::to_string(p));
    }
    out.push_back(v);
  }
  return out;
}

BlockSet make_blocks(std::span<const Residue> values, unsigned lambda, Residue pad) {
  if (lambda < 2) throw Error(Errc::lambda_degenerate, "block length must be >= 2");
  BlockSet out;
  out.true_len = values.size();
  const std::size_t n_blocks = (values.size() + lambda - 1) / lambda;
  out.blocks.reserve(n_blocks);
  for (std::size_t b = 0; b < n_blocks; ++b) {
    Block block = Block::Constant(static_cast<Eigen::Index>(lambda), pad);
    for (unsigned j = 0; j < lambda && b * lambda + j < values.size(); ++j) {
      block(static_cast<Eigen::Index>(j)) = values[b * lambda + j];
    }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

std::vector<Block> encrypt_blocks(std::span<const Block> blocks, const QMatrix& key, const ShiftVector& b) {
  check_block_shapes(blocks, key, b);
  const std::uint64_t p = key.modulus();
  std::vector<Block> out;
  out.reserve(blocks.size());
  for (const Block& block : blocks) {
    Block c = row_times(block, key.matrix());
    for (Eigen::Index j = 0; j < c.size(); ++j) c(j) = add_mod(c(j), b.entries()(j), p);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Block> decrypt_blocks(std::span<const Block> cblocks, const QMatrix& key_inv, const ShiftVector& b) {
  check_block_shapes(cblocks, key_inv, b);
  const std::uint64_t p = key_inv.modulus();
  std::vector<Block> out;
  out.reserve(cblocks.size());
  for (const Block& block : cblocks) {
    Block shifted(block.size());
    for (Eigen::Index j = 0; j < block.size(); ++j) shifted(j) = sub_mod(block(j), b.entries()(j), p);
    out.push_back(row_times(shifted, key_inv.matrix()));
  }
  return out;
}

Envelope encrypt_message(const PublicKey& pk, std::uint64_t e, std::span<const Residue> b, std::string_view text,
                         const Alphabet& a, const LambdaPolicy& policy) {
  const std::uint64_t p = pk.p.value();
  if (a.size() > p) {
    throw Error(Errc::invalid_argument,
                "alphabet of size " + std::to_string(a.size()) + " does not fit in Z_" + std::to_string(p));
  }
  const SessionKey session = derive_session(pk, e, policy);
  if (b.size() != session.lambda.value()) {
    throw Error(Errc::dimension_mismatch, "shift vector has length " + std::to_string(b.size()) +
                                              " but the derived lambda is " +
                                              std::to_string(session.lambda.value()));
  }
  const ShiftVector shift(b, p);
  const QMatrix key = session_to_keymatrix(session, pk.p, false);
  const BlockSet plain = make_blocks(encode(text, a), session.lambda.value(), a.pad());
  const std::vector<Block> cblocks = encrypt_blocks(plain.blocks, key, shift);

  std::vector<Residue> flat;
  flat.reserve(cblocks.size() * session.lambda.value());
  for (const Block& c : cblocks) flat.insert(flat.end(), c.data(), c.data() + c.size());
  return Envelope{p, session.k, shift.to_vector(), plain.true_len, render_cipher(flat, a)};
}

std::string decrypt_message(const PrivateKey& sk, const Envelope& env, const Alphabet& a,
                            const LambdaPolicy& policy) {
  const std::uint64_t p = sk.p.value();
  if (env.p != p) {
    throw Error(Errc::modulus_mismatch,
                "envelope modulus " + std::to_string(env.p) + " does not match key modulus " + std::to_string(p));
  }
  const MultinacciOrder lambda = recover_session(sk, env.k, policy);
  const std::size_t lam = lambda.value();
  if (env.b.size() != lam) {
    throw Error(Errc::malformed_envelope, "shift vector has length " + std::to_string(env.b.size()) +
                                              " but the recovered lambda is " + std::to_string(lam));
  }
  const std::vector<Residue> flat = parse_cipher(env.cipher, a, p);
  if (flat.size() % lam != 0) {
    throw Error(Errc::malformed_envelope, "ciphertext length " + std::to_string(flat.size()) +
                                              " is not a multiple of the recovered lambda " + std::to_string(lam));
  }
  if (env.len > flat.size() || flat.size() - env.len >= lam) {
    throw Error(Errc::malformed_envelope, "declared length " + std::to_string(env.len) +
                                              " is inconsistent with " + std::to_string(flat.size()) +
                                              " ciphertext symbols");
  }
  const ShiftVector shift(env.b, p);
  std::vector<Block> cblocks;
  cblocks.reserve(flat.size() / lam);
  for (std::size_t i = 0; i < flat.size(); i += lam) {
    cblocks.emplace_back(Eigen::Map<const Block>(flat.data() + i, static_cast<Eigen::Index>(lam)));
  }
  const QMatrix key_inv = session_to_keymatrix(SessionKey{env.k, lambda}, sk.p, true);
  const std::vector<Block> plain = decrypt_blocks(cblocks, key_inv, shift);

  std::vector<Residue> values;
  values.reserve(env.len);
  for (const Block& block : plain) {
    for (Eigen::Index j = 0; j < block.size() && values.size() < env.len; ++j) values.push_back(block(j));
  }
  return decode(values, a);
}

}  // namespace fibhill
