#include "fibhill/analysis.hpp"

#include <cmath>
#include <string>
#include <unordered_set>

#include "fibhill/error.hpp"
#include "fibhill/qmatrix.hpp"

namespace fibhill {

namespace {

struct EntriesHash {
  std::size_t operator()(const std::vector<Residue>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Residue x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

std::vector<Residue> flatten(const ModMatrix& a) {
  const auto& e = a.entries();
  return {e.data(), e.data() + e.size()};
}

// Right-hand sides the key must map plaintext rows onto.
struct Equation {
  Block plain;
  Block target;
};

std::optional<std::vector<Equation>> equations_for(std::span<const KnownPair> pairs, unsigned lambda,
                                                   const std::optional<std::vector<Residue>>& shift,
                                                   std::uint64_t p) {
  std::vector<Block> plain_blocks;
  std::vector<Block> cipher_blocks;
  for (const KnownPair& pair : pairs) {
    if (pair.plain.size() % lambda != 0) return std::nullopt;
    for (std::size_t i = 0; i < pair.plain.size(); i += lambda) {
      plain_blocks.emplace_back(Eigen::Map<const Block>(pair.plain.data() + i, static_cast<Eigen::Index>(lambda)));
      cipher_blocks.emplace_back(Eigen::Map<const Block>(pair.cipher.data() + i, static_cast<Eigen::Index>(lambda)));
    }
  }
  std::vector<Equation> eqs;
  if (shift) {
    for (std::size_t b = 0; b < plain_blocks.size(); ++b) {
      Block target(static_cast<Eigen::Index>(lambda));
      for (Eigen::Index j = 0; j < target.size(); ++j) {
        target(j) = sub_mod(cipher_blocks[b](j), (*shift)[static_cast<std::size_t>(j)], p);
      }
      eqs.push_back({plain_blocks[b], target});
    }
  } else {
    // Subtracting block 0 cancels B: C_b - C_0 = (P_b - P_0) K.
    for (std::size_t b = 1; b < plain_blocks.size(); ++b) {
      Block dp(static_cast<Eigen::Index>(lambda)), dc(static_cast<Eigen::Index>(lambda));
      for (Eigen::Index j = 0; j < dp.size(); ++j) {
        dp(j) = sub_mod(plain_blocks[b](j), plain_blocks[0](j), p);
        dc(j) = sub_mod(cipher_blocks[b](j), cipher_blocks[0](j), p);
      }
      eqs.push_back({dp, dc});
    }
  }
  return eqs;
}

}  // namespace

BigUint gl_order(unsigned lambda, PrimeModulus p) {
  if (lambda < 1 || lambda > kMaxGlOrderLambda) {
    throw Error(Errc::out_of_range, "gl_order supports 1 <= lambda <= " + std::to_string(kMaxGlOrderLambda) +
                                        ", got " + std::to_string(lambda));
  }
  const BigUint base(p.value());
  const BigUint top = BigUint::pow(base, lambda);
  BigUint order(1);
  for (unsigned i = 0; i < lambda; ++i) order *= top - BigUint::pow(base, i);
  return order;
}

KeyspaceCount structured_keyspace(PrimeModulus p, MultinacciOrder lambda, std::uint64_t k_max) {
  KeyspaceCount out;
  const QMatrix q = q_matrix(lambda, p.value());
  std::unordered_set<std::vector<Residue>, EntriesHash> seen;
  ModMatrix power = q.matrix();
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    seen.insert(flatten(power));
    if (power.is_identity()) {
      // Powers are periodic from here on, so nothing new can appear.
      out.period = k;
      break;
    }
    power = power * q.matrix();
  }
  out.count = seen.size();
  return out;
}

KeyspaceReport keyspace_report(PrimeModulus p, MultinacciOrder lambda, std::uint64_t k_max) {
  KeyspaceReport r;
  r.p = p.value();
  r.lambda = lambda.value();
  r.gl_order = gl_order(lambda.value(), p);
  const KeyspaceCount sc = structured_keyspace(p, lambda, k_max);
  r.structured_count = sc.count;
  r.period = sc.period;
  r.ratio_log10 = sc.count == 0 ? -HUGE_VAL : std::log10(static_cast<double>(sc.count)) - r.gl_order.log10();
  return r;
}

AttackResult known_plaintext_attack(std::span<const KnownPair> pairs, PrimeModulus p, const AttackOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t needed = opts.shift ? 1 : 2;
  if (pairs.size() < needed) {
    throw Error(Errc::insufficient_pairs, "need at least " + std::to_string(needed) + " known pair(s) when B is " +
                                              (opts.shift ? "known" : "unknown") + ", got " +
                                              std::to_string(pairs.size()));
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].plain.size() != pairs[i].cipher.size() || pairs[i].plain.empty()) {
      throw Error(Errc::dimension_mismatch, "pair " + std::to_string(i) + " has unequal or empty sides");
    }
    for (const auto* side : {&pairs[i].plain, &pairs[i].cipher}) {
      for (Residue v : *side) {
        if (v >= p.value()) {
          throw Error(Errc::value_out_of_range, "pair " + std::to_string(i) + " holds value " + std::to_string(v) +
                                                    " outside Z_" + std::to_string(p.value()));
        }
      }
    }
  }
  if (opts.shift) {
    for (Residue v : *opts.shift) {
      if (v >= p.value()) throw Error(Errc::value_out_of_range, "shift entry outside Z_p");
    }
  }

  AttackResult result;
  const unsigned lambda_max = std::min<unsigned>(opts.lambda_max, kMaxOrder);
  for (unsigned lambda = 2; lambda <= lambda_max && !result.budget_exhausted; ++lambda) {
    if (opts.shift && opts.shift->size() != lambda) continue;
    const auto eqs = equations_for(pairs, lambda, opts.shift, p.value());
    if (!eqs) continue;
    const ModMatrix q = q_matrix(MultinacciOrder(lambda), p.value()).matrix();
    ModMatrix key = q;
    for (std::uint64_t k = 1; k <= opts.k_max; ++k) {
      if (opts.budget && result.tried >= *opts.budget) {
        result.budget_exhausted = true;
        break;
      }
      ++result.tried;
      bool consistent = true;
      for (const Equation& eq : *eqs) {
        if (row_times(eq.plain, key) != eq.target) {
          consistent = false;
          break;
        }
      }
      if (consistent) result.candidates.push_back({lambda, k});
      if (k < opts.k_max) key = key * q;
    }
  }
  result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return result;
}

}  // namespace fibhill
