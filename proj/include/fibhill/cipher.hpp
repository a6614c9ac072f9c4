#pragma once

/**
 * @file cipher.hpp
 * @brief Affine-Hill block cipher keyed by Q_lambda^k.
 *
 * Plaintext blocks are row vectors P_i of length lambda and
 *
 *   C_i = P_i K + B        P_i = (C_i - B) K^-1        (mod p)
 *
 * with K = Q_lambda^k and K^-1 = Q_lambda^-k. B is the public shift vector.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fibhill/keyexchange.hpp"
#include "fibhill/matrix.hpp"
#include "fibhill/qmatrix.hpp"

namespace fibhill {

/// Bijection between text symbols (Unicode code points) and residues 0..size-1.
/// The last symbol doubles as the padding symbol.
class Alphabet {
 public:
  explicit Alphabet(std::u32string symbols);
  static Alphabet from_utf8(std::string_view symbols);

  /// "A".."Z" -> 0..25, "0".."9" -> 26..35, space -> 36.
  static const Alphabet& standard();

  std::size_t size() const noexcept { return symbols_.size(); }
  Residue pad() const noexcept { return symbols_.size() - 1; }

  /// Exact lookup, no case folding.
  std::optional<Residue> index_of(char32_t c) const;
  char32_t symbol(Residue index) const;

  const std::u32string& symbols() const noexcept { return symbols_; }
  std::string utf8() const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

 private:
  std::u32string symbols_;
  std::unordered_map<char32_t, Residue> index_;
};

using Block = ResidueRow;

/// The additive vector B, canonical mod p.
class ShiftVector {
 public:
  ShiftVector(std::span<const Residue> entries, std::uint64_t p);

  Eigen::Index size() const noexcept { return entries_.size(); }
  std::uint64_t modulus() const noexcept { return modulus_; }
  const ResidueRow& entries() const noexcept { return entries_; }
  std::vector<Residue> to_vector() const;

 private:
  ResidueRow entries_;
  std::uint64_t modulus_;
};

struct BlockSet {
  std::vector<Block> blocks;
  std::size_t true_len = 0;
};

/// Transmitted ciphertext object. lambda is deliberately absent.
struct Envelope {
  std::uint64_t p = 0;
  Residue k = 0;
  std::vector<Residue> b;
  std::size_t len = 0;
  std::string cipher;  // UTF-8 text over the (extended) alphabet

  friend bool operator==(const Envelope&, const Envelope&) = default;
};

/// Symbol indices of `text` (UTF-8). A lowercase ASCII letter missing from the
/// alphabet is looked up upper-cased; anything else unmapped is an error.
std::vector<Residue> encode(std::string_view text, const Alphabet& a);

std::string decode(std::span<const Residue> values, const Alphabet& a);

/// Ciphertext residues range over all of Z_p, which may exceed the alphabet.
/// Residue r >= |alphabet| is written as code point U+0100 + (r - |alphabet|).
std::string render_cipher(std::span<const Residue> values, const Alphabet& a);
std::vector<Residue> parse_cipher(std::string_view text, const Alphabet& a, std::uint64_t p);

/// ceil(n / lambda) blocks; the last one is filled with `pad`.
BlockSet make_blocks(std::span<const Residue> values, unsigned lambda, Residue pad);

std::vector<Block> encrypt_blocks(std::span<const Block> blocks, const QMatrix& key, const ShiftVector& b);
std::vector<Block> decrypt_blocks(std::span<const Block> cblocks, const QMatrix& key_inv, const ShiftVector& b);

Envelope encrypt_message(const PublicKey& pk, std::uint64_t e, std::span<const Residue> b, std::string_view text,
                         const Alphabet& a = Alphabet::standard(), const LambdaPolicy& policy = {});

std::string decrypt_message(const PrivateKey& sk, const Envelope& env, const Alphabet& a = Alphabet::standard(),
                            const LambdaPolicy& policy = {});

}  // namespace fibhill
