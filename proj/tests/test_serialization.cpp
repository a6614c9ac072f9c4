#include <doctest.h>

#include <random>

#include "fibhill/error.hpp"
#include "fibhill/serialization.hpp"

using namespace fibhill;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::io_error;
}

}  // namespace

TEST_CASE("key files") {
  const KeyPair kp = make_keypair(PrimeModulus(37), 13, 5);
  CHECK(to_json(kp.public_key) == "{\"v\":1,\"p\":37,\"e1\":5,\"e2\":13}\n");
  CHECK(to_json(kp.private_key) == "{\"v\":1,\"p\":37,\"e1\":5,\"d\":13}\n");

  const PublicKey pk = parse_public_key(to_json(kp.public_key));
  CHECK(pk.p.value() == 37);
  CHECK(pk.e1 == 5);
  CHECK(pk.e2 == 13);
  const PrivateKey sk = parse_private_key(to_json(kp.private_key));
  CHECK(sk.d == 13);
  CHECK(sk.e1 == 5);
  // Field order on input does not matter.
  CHECK(parse_public_key(R"({"e2":13,"e1":5,"p":37,"v":1})").e2 == 13);
}

TEST_CASE("envelope file") {
  const Envelope env{37, 4, {31, 13, 19}, 9, "HP393IVY1"};
  const std::string text = to_json(env);
  CHECK(text == "{\"v\":1,\"p\":37,\"k\":4,\"b\":[31,13,19],\"len\":9,\"cipher\":\"HP393IVY1\"}\n");
  CHECK(parse_envelope(text) == env);
  CHECK(to_json(parse_envelope(text)) == text);

  const Envelope wide{101, 9, {1, 2}, 3, "AĀĿ "};
  CHECK(to_json(parse_envelope(to_json(wide))) == to_json(wide));
}

TEST_CASE("envelope files survive a write-read-write cycle") {
  std::mt19937_64 rng(5);
  const KeyPair kp = make_keypair(PrimeModulus(257), 101, 3);
  int written = 0;
  for (std::uint64_t e = 2; e < 255 && written < 50; ++e) {
    const Residue lambda = mod_pow(kp.public_key.e2, e, 257);
    if (lambda < 2 || lambda > 64) continue;
    std::vector<Residue> shift(lambda);
    for (auto& v : shift) v = rng() % 257;
    std::string text;
    for (std::size_t n = rng() % 100; n > 0; --n) text.push_back("ABCXYZ0189 "[rng() % 11]);
    const std::string first = to_json(encrypt_message(kp.public_key, e, shift, text));
    REQUIRE(to_json(parse_envelope(first)) == first);
    ++written;
  }
  CHECK(written == 50);
}

TEST_CASE("alphabet file") {
  const Alphabet a = Alphabet::from_utf8("αβγ ");
  const std::string text = to_json(a);
  CHECK(text == "{\"v\":1,\"symbols\":\"αβγ \"}\n");
  CHECK(parse_alphabet(text) == a);
}

TEST_CASE("reports") {
  const KeyspaceReport r = keyspace_report(PrimeModulus(37), MultinacciOrder(2), 10'000);
  const std::string text = to_json(r);
  CHECK(text.rfind("{\"p\":37,\"lambda\":2,\"gl_order\":\"1822176\",\"structured_count\":76,\"period\":76,\"ratio_log10\":", 0) == 0);
  CHECK(text.back() == '\n');

  KeyspaceReport open = r;
  open.period.reset();
  CHECK(to_json(open).find("\"period\":null") != std::string::npos);

  AttackResult ar;
  ar.candidates = {{3, 4}, {3, 23}};
  ar.tried = 100;
  ar.elapsed = std::chrono::milliseconds(2);
  CHECK(to_json(ar) ==
        "{\"candidates\":[{\"lambda\":3,\"k\":4},{\"lambda\":3,\"k\":23}],\"tried\":100,\"budget_exhausted\":false,"
        "\"elapsed_ms\":2.0}\n");
}

TEST_CASE("malformed input") {
  CHECK(code_of([] { parse_public_key("{"); }) == Errc::parse_error);
  CHECK(code_of([] { parse_public_key("[]"); }) == Errc::parse_error);
  CHECK(code_of([] { parse_public_key(R"({"p":37,"e1":5,"e2":13})"); }) == Errc::parse_error);
  CHECK(code_of([] { parse_public_key(R"({"v":2,"p":37,"e1":5,"e2":13})"); }) == Errc::parse_error);
  CHECK(code_of([] { parse_public_key(R"({"v":1,"p":37,"e1":-5,"e2":13})"); }) == Errc::parse_error);
  CHECK(code_of([] { parse_public_key(R"({"v":1,"p":37,"e1":3,"e2":13})"); }) == Errc::invalid_argument);
  CHECK(code_of([] { parse_public_key(R"({"v":1,"p":38,"e1":5,"e2":13})"); }) == Errc::not_prime);
  CHECK(code_of([] { parse_private_key(R"({"v":1,"p":37,"e1":5,"d":1})"); }) == Errc::out_of_range);
  CHECK(code_of([] { parse_envelope(R"({"v":1,"p":37,"k":4,"b":"x","len":9,"cipher":"A"})"); }) ==
        Errc::parse_error);
  CHECK(code_of([] { parse_envelope(R"({"v":1,"p":37,"k":4,"b":[1.5],"len":9,"cipher":"A"})"); }) ==
        Errc::parse_error);
  CHECK(code_of([] { parse_envelope(R"({"v":1,"p":37,"k":4,"b":[1],"len":9})"); }) == Errc::parse_error);
  CHECK(code_of([] { parse_alphabet(R"({"v":1,"symbols":"A"})"); }) == Errc::invalid_argument);
}
