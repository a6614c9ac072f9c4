#include "fibhill/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "fibhill/analysis.hpp"
#include "fibhill/cipher.hpp"
#include "fibhill/error.hpp"
#include "fibhill/keyexchange.hpp"
#include "fibhill/multinacci.hpp"
#include "fibhill/qmatrix.hpp"
#include "fibhill/serialization.hpp"

namespace fibhill {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes next to the target and renames, so readers never see a partial file.
void write_file_atomic(const std::string& path, const std::string& contents) {
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io_error, "cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw Error(Errc::io_error, "failed writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(Errc::io_error, "cannot move output into place at " + path);
  }
}

std::vector<Residue> parse_shift(const std::string& literal) {
  std::vector<Residue> out;
  std::stringstream ss(literal);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument("");
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      throw UsageError("--shift expects comma-separated non-negative integers, got '" + literal + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--shift must not be empty");
  return out;
}

Alphabet load_alphabet(const std::string& path) {
  return path.empty() ? Alphabet::standard() : parse_alphabet(read_file(path));
}

void print_session(std::ostream& out, Residue k, unsigned lambda) {
  out << "{\"k\":" << k << ",\"lambda\":" << lambda << "}\n";
}

// Draws ephemeral exponents until one yields lambda == wanted.
std::pair<std::uint64_t, SessionKey> random_session(const PublicKey& pk, std::size_t wanted,
                                                     std::optional<std::uint64_t> seed) {
  const std::uint64_t p = pk.p.value();
  if (p < 5) throw Error(Errc::out_of_range, "no ephemeral exponent satisfies 1 < e < p - 1 for p < 5");
  std::mt19937_64 rng(seed ? *seed : std::random_device{}());
  std::uniform_int_distribution<std::uint64_t> dist(2, p - 2);
  const std::uint64_t attempts = std::min<std::uint64_t>(4 * p, 1'000'000);
  for (std::uint64_t i = 0; i < attempts; ++i) {
    const std::uint64_t e = dist(rng);
    const Residue lambda = mod_pow(pk.e2, e, p);
    if (lambda == wanted && lambda >= 2 && lambda <= kMaxOrder) return {e, derive_session(pk, e)};
  }
  throw Error(Errc::lambda_degenerate, "no ephemeral exponent found giving lambda = " + std::to_string(wanted) +
                                           " after " + std::to_string(attempts) + " draws");
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Affine-Hill cipher keyed by multinacci matrix powers", "fibhill"};
  app.require_subcommand(1);

  // keygen
  std::uint64_t kg_prime = 0, kg_private = 0;
  std::optional<std::uint64_t> kg_alpha;
  std::string kg_out;
  auto* keygen = app.add_subcommand("keygen", "Write <out>.pub and <out>.key");
  keygen->add_option("--prime", kg_prime, "Prime modulus p")->required();
  keygen->add_option("--private", kg_private, "Private exponent d, 1 < d < p-1")->required();
  keygen->add_option("--alpha", kg_alpha, "Primitive root (default: smallest)");
  keygen->add_option("--out", kg_out, "Output path prefix")->required();

  // session
  std::string se_pub, se_key;
  std::optional<std::uint64_t> se_ephemeral, se_signature;
  auto* session = app.add_subcommand("session", "Derive (k, lambda) or recover lambda from k");
  auto* se_pub_opt = session->add_option("--pub", se_pub, "Public key file");
  auto* se_key_opt = session->add_option("--key", se_key, "Private key file");
  auto* se_eph_opt = session->add_option("--ephemeral", se_ephemeral, "Ephemeral exponent e");
  auto* se_sig_opt = session->add_option("--signature", se_signature, "Received k");
  se_pub_opt->excludes(se_key_opt);
  se_pub_opt->needs(se_eph_opt);
  se_key_opt->needs(se_sig_opt);
  se_eph_opt->excludes(se_sig_opt);

  // encrypt
  std::string en_pub, en_ephemeral, en_shift, en_text, en_in, en_out, en_alphabet;
  std::optional<std::uint64_t> en_seed;
  auto* encrypt = app.add_subcommand("encrypt", "Encrypt text into an envelope file");
  encrypt->add_option("--pub", en_pub, "Public key file")->required();
  encrypt->add_option("--ephemeral", en_ephemeral, "Ephemeral exponent e, or 'random'")->required();
  encrypt->add_option("--shift", en_shift, "Shift vector B, comma-separated")->required();
  auto* text_opt = encrypt->add_option("--text", en_text, "Plaintext");
  auto* in_opt = encrypt->add_option("--in", en_in, "Plaintext file");
  text_opt->excludes(in_opt);
  encrypt->add_option("--out", en_out, "Envelope output file")->required();
  encrypt->add_option("--alphabet", en_alphabet, "Alphabet file");
  encrypt->add_option("--seed", en_seed, "Seed for --ephemeral random");

  // decrypt
  std::string de_key, de_env, de_alphabet;
  auto* decrypt = app.add_subcommand("decrypt", "Decrypt an envelope and print the plaintext");
  decrypt->add_option("--key", de_key, "Private key file")->required();
  decrypt->add_option("--envelope", de_env, "Envelope file")->required();
  decrypt->add_option("--alphabet", de_alphabet, "Alphabet file");

  // inspect
  auto* inspect = app.add_subcommand("inspect", "Print key matrices or sequence terms");
  inspect->require_subcommand(1);
  std::int64_t iq_lambda = 0, iq_power = 0;
  std::uint64_t iq_mod = 0;
  auto* iq = inspect->add_subcommand("qmatrix", "Print Q_lambda^k mod m");
  iq->add_option("--lambda", iq_lambda, "Order")->required();
  iq->add_option("--power", iq_power, "Signed power k")->required();
  iq->add_option("--mod", iq_mod, "Modulus")->required();
  std::int64_t is_lambda = 0, is_from = 0, is_to = 0;
  std::optional<std::uint64_t> is_mod;
  auto* iseq = inspect->add_subcommand("sequence", "Print f_from..f_to");
  iseq->add_option("--lambda", is_lambda, "Order")->required();
  iseq->add_option("--from", is_from, "First index")->required();
  iseq->add_option("--to", is_to, "Last index")->required();
  iseq->add_option("--mod", is_mod, "Optional modulus");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Keyspace analysis");
  analyze->require_subcommand(1);
  std::uint64_t ak_prime = 0, ak_kmax = 10000;
  std::int64_t ak_lambda = 0;
  auto* ak = analyze->add_subcommand("keyspace", "Compare |GL| with the reachable keyspace");
  ak->add_option("--prime", ak_prime, "Prime modulus")->required();
  ak->add_option("--lambda", ak_lambda, "Order")->required();
  ak->add_option("--kmax", ak_kmax, "Largest power enumerated")->capture_default_str();

  // attack
  std::uint64_t at_prime = 0, at_kmax = 100;
  unsigned at_lambda_max = 8;
  std::optional<std::uint64_t> at_budget;
  std::vector<std::string> at_plain, at_cipher;
  std::string at_shift, at_alphabet;
  auto* attack = app.add_subcommand("attack", "Known-plaintext search over (lambda, k)");
  attack->add_option("--prime", at_prime, "Prime modulus")->required();
  attack->add_option("--plain", at_plain, "Known plaintext (repeatable)")->required();
  attack->add_option("--cipher", at_cipher, "Matching ciphertext (repeatable)")->required();
  attack->add_option("--shift", at_shift, "Known shift vector B");
  attack->add_option("--lambda-max", at_lambda_max, "Largest lambda tried")->capture_default_str();
  attack->add_option("--k-max", at_kmax, "Largest k tried")->capture_default_str();
  attack->add_option("--budget", at_budget, "Maximum number of trials");
  attack->add_option("--alphabet", at_alphabet, "Alphabet file");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (keygen->parsed()) {
      const KeyPair kp = make_keypair(PrimeModulus(kg_prime), kg_private, kg_alpha);
      write_file_atomic(kg_out + ".pub", to_json(kp.public_key));
      write_file_atomic(kg_out + ".key", to_json(kp.private_key));
      out << to_json(kp.public_key);
    } else if (session->parsed()) {
      if (!se_pub.empty()) {
        const SessionKey s = derive_session(parse_public_key(read_file(se_pub)), *se_ephemeral);
        print_session(out, s.k, s.lambda.value());
      } else if (!se_key.empty()) {
        const MultinacciOrder lambda = recover_session(parse_private_key(read_file(se_key)), *se_signature);
        print_session(out, *se_signature, lambda.value());
      } else {
        throw UsageError("session needs --pub with --ephemeral, or --key with --signature");
      }
    } else if (encrypt->parsed()) {
      if ((text_opt->count() > 0) == (in_opt->count() > 0)) {
        throw UsageError("encrypt needs exactly one of --text or --in");
      }
      const std::vector<Residue> shift = parse_shift(en_shift);
      const bool random_e = en_ephemeral == "random";
      if (!random_e && (en_ephemeral.empty() || en_ephemeral.find_first_not_of("0123456789") != std::string::npos)) {
        throw UsageError("--ephemeral expects an integer or 'random', got '" + en_ephemeral + "'");
      }
      const PublicKey pk = parse_public_key(read_file(en_pub));
      const Alphabet alphabet = load_alphabet(en_alphabet);
      std::string text = in_opt->count() > 0 ? read_file(en_in) : en_text;
      if (in_opt->count() > 0) {
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
      }
      std::uint64_t e = 0;
      if (random_e) {
        e = random_session(pk, shift.size(), en_seed).first;
        out << "ephemeral=" << e << "\n";
      } else {
        try {
          e = std::stoull(en_ephemeral);
        } catch (const std::out_of_range&) {
          throw UsageError("--ephemeral value '" + en_ephemeral + "' is too large");
        }
      }
      const Envelope env = encrypt_message(pk, e, shift, text, alphabet);
      write_file_atomic(en_out, to_json(env));
      out << to_json(env);
    } else if (decrypt->parsed()) {
      const PrivateKey sk = parse_private_key(read_file(de_key));
      const Envelope env = parse_envelope(read_file(de_env));
      out << decrypt_message(sk, env, load_alphabet(de_alphabet)) << "\n";
    } else if (iq->parsed()) {
      out << format_matrix(q_power(MultinacciOrder(iq_lambda), iq_power, iq_mod).matrix());
    } else if (iseq->parsed()) {
      const SequenceWindow w = terms(MultinacciOrder(is_lambda), is_from, is_to, is_mod);
      for (std::size_t i = 0; i < w.terms.size(); ++i) out << (i ? " " : "") << w.terms[i];
      out << "\n";
    } else if (ak->parsed()) {
      out << to_json(keyspace_report(PrimeModulus(ak_prime), MultinacciOrder(ak_lambda), ak_kmax));
    } else if (attack->parsed()) {
      if (at_plain.size() != at_cipher.size()) {
        throw UsageError("--plain and --cipher must be given the same number of times");
      }
      const PrimeModulus p(at_prime);
      const Alphabet alphabet = load_alphabet(at_alphabet);
      std::vector<KnownPair> pairs;
      for (std::size_t i = 0; i < at_plain.size(); ++i) {
        pairs.push_back({encode(at_plain[i], alphabet), parse_cipher(at_cipher[i], alphabet, p.value())});
      }
      AttackOptions opts;
      if (!at_shift.empty()) opts.shift = parse_shift(at_shift);
      opts.lambda_max = at_lambda_max;
      opts.k_max = at_kmax;
      opts.budget = at_budget;
      out << to_json(known_plaintext_attack(pairs, p, opts));
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error [" << e.name() << "]: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace fibhill
