#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fibhill/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "fibhill");
  std::ostringstream out, err;
  const int code = fibhill::cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("fibhill-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
  static int& counter() {
    static int n = 0;
    return n;
  }
};

}  // namespace

TEST_CASE("keygen, encrypt, decrypt golden flow") {
  TempDir dir;
  const std::string bob = dir / "bob";

  const Run kg = run({"keygen", "--prime", "37", "--private", "13", "--alpha", "5", "--out", bob});
  REQUIRE(kg.code == 0);
  CHECK(kg.out == "{\"v\":1,\"p\":37,\"e1\":5,\"e2\":13}\n");
  CHECK(slurp(bob + ".pub") == "{\"v\":1,\"p\":37,\"e1\":5,\"e2\":13}\n");
  CHECK(slurp(bob + ".key") == "{\"v\":1,\"p\":37,\"e1\":5,\"d\":13}\n");
  CHECK_FALSE(fs::exists(bob + ".pub.tmp"));

  const Run se = run({"session", "--pub", bob + ".pub", "--ephemeral", "22"});
  CHECK(se.code == 0);
  CHECK(se.out == "{\"k\":4,\"lambda\":3}\n");
  const Run rec = run({"session", "--key", bob + ".key", "--signature", "4"});
  CHECK(rec.out == "{\"k\":4,\"lambda\":3}\n");

  const std::string env = dir / "msg.env";
  const std::string pub_before = slurp(bob + ".pub");
  const Run en = run({"encrypt", "--pub", bob + ".pub", "--ephemeral", "22", "--shift", "31,13,19", "--text",
                      "HELLO2019", "--out", env});
  REQUIRE(en.code == 0);
  const std::string golden = "{\"v\":1,\"p\":37,\"k\":4,\"b\":[31,13,19],\"len\":9,\"cipher\":\"HP393IVY1\"}\n";
  CHECK(en.out == golden);
  CHECK(slurp(env) == golden);
  CHECK(slurp(bob + ".pub") == pub_before);

  const std::string key_before = slurp(bob + ".key");
  const Run de = run({"decrypt", "--key", bob + ".key", "--envelope", env});
  CHECK(de.code == 0);
  CHECK(de.out == "HELLO2019\n");
  CHECK(slurp(env) == golden);
  CHECK(slurp(bob + ".key") == key_before);
}

TEST_CASE("encrypt from a file and with a random ephemeral") {
  TempDir dir;
  const std::string bob = dir / "bob";
  REQUIRE(run({"keygen", "--prime", "37", "--private", "13", "--alpha", "5", "--out", bob}).code == 0);
  {
    std::ofstream(dir / "plain.txt") << "attack at dawn\n";
  }
  const Run en = run({"encrypt", "--pub", bob + ".pub", "--ephemeral", "random", "--seed", "1", "--shift", "1,2,3",
                      "--in", dir / "plain.txt", "--out", dir / "m.env"});
  REQUIRE(en.code == 0);
  CHECK(en.out.rfind("ephemeral=", 0) == 0);
  const Run again = run({"encrypt", "--pub", bob + ".pub", "--ephemeral", "random", "--seed", "1", "--shift",
                         "1,2,3", "--in", dir / "plain.txt", "--out", dir / "m2.env"});
  CHECK(again.out == en.out);
  const Run de = run({"decrypt", "--key", bob + ".key", "--envelope", dir / "m.env"});
  CHECK(de.code == 0);
  CHECK(de.out == "ATTACK AT DAWN\n");
}

TEST_CASE("custom alphabet") {
  TempDir dir;
  const std::string bob = dir / "bob";
  REQUIRE(run({"keygen", "--prime", "101", "--private", "7", "--out", bob}).code == 0);
  {
    std::ofstream(dir / "abc.json") << "{\"v\":1,\"symbols\":\"abcdefghijklmnopqrstuvwxyz.,!? \"}\n";
  }
  // Find an ephemeral exponent with lambda = 2 by asking the CLI.
  std::string e_found;
  for (int e = 2; e < 100 && e_found.empty(); ++e) {
    const Run s = run({"session", "--pub", bob + ".pub", "--ephemeral", std::to_string(e)});
    if (s.code == 0 && s.out.find("\"lambda\":2}") != std::string::npos) e_found = std::to_string(e);
  }
  REQUIRE_FALSE(e_found.empty());
  const Run en = run({"encrypt", "--pub", bob + ".pub", "--ephemeral", e_found, "--shift", "40,99", "--text",
                      "hello, world!", "--alphabet", dir / "abc.json", "--out", dir / "m.env"});
  REQUIRE(en.code == 0);
  const Run de = run({"decrypt", "--key", bob + ".key", "--envelope", dir / "m.env", "--alphabet", dir / "abc.json"});
  CHECK(de.out == "hello, world!\n");
}

TEST_CASE("inspect and analyze") {
  const Run q = run({"inspect", "qmatrix", "--lambda", "3", "--power", "-4", "--mod", "37"});
  CHECK(q.code == 0);
  CHECK(q.out == "[36 2 0]\n[0 36 2]\n[2 35 34]\n");
  CHECK(run({"inspect", "qmatrix", "--lambda", "3", "--power", "4", "--mod", "37"}).out == "[7 6 4]\n[4 3 2]\n[2 2 1]\n");

  const Run s = run({"inspect", "sequence", "--lambda", "3", "--from", "-8", "--to", "8"});
  CHECK(s.out == "-8 4 1 -3 2 0 -1 1 0 0 1 1 2 4 7 13 24\n");
  CHECK(run({"inspect", "sequence", "--lambda", "3", "--from", "-8", "--to", "-6", "--mod", "37"}).out ==
        "29 4 1\n");

  const Run a = run({"analyze", "keyspace", "--prime", "37", "--lambda", "2"});
  CHECK(a.code == 0);
  CHECK(a.out.rfind("{\"p\":37,\"lambda\":2,\"gl_order\":\"1822176\",\"structured_count\":76,\"period\":76,", 0) == 0);
}

TEST_CASE("attack") {
  const Run r = run({"attack", "--prime", "37", "--plain", "HELLO2019", "--cipher", "HP393IVY1", "--shift",
                     "31,13,19"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("{\"candidates\":[{\"lambda\":3,\"k\":4}],\"tried\":100,\"budget_exhausted\":false,", 0) == 0);
  CHECK(run({"attack", "--prime", "37", "--plain", "HELLO2019", "--cipher", "HP393IVY1"}).code == 1);
  CHECK(run({"attack", "--prime", "37", "--plain", "A", "--plain", "B", "--cipher", "C"}).code == 2);
}

TEST_CASE("domain errors exit 1") {
  TempDir dir;
  const std::string bob = dir / "bob";
  const Run bad_prime = run({"keygen", "--prime", "36", "--private", "13", "--out", bob});
  CHECK(bad_prime.code == 1);
  CHECK(bad_prime.err.find("error [not-prime]") == 0);
  CHECK_FALSE(fs::exists(bob + ".pub"));

  REQUIRE(run({"keygen", "--prime", "37", "--private", "13", "--alpha", "5", "--out", bob}).code == 0);
  const Run degenerate = run({"session", "--key", bob + ".key", "--signature", "1"});
  CHECK(degenerate.code == 1);
  CHECK(degenerate.err.find("lambda-degenerate") != std::string::npos);

  const Run mismatch = run({"encrypt", "--pub", bob + ".pub", "--ephemeral", "22", "--shift", "1,2", "--text", "HI",
                            "--out", dir / "x.env"});
  CHECK(mismatch.code == 1);
  CHECK(mismatch.err.find("lambda is 3") != std::string::npos);
  CHECK_FALSE(fs::exists(dir / "x.env"));

  CHECK(run({"decrypt", "--key", dir / "missing.key", "--envelope", dir / "x.env"}).err.find("io-error") !=
        std::string::npos);
  CHECK(run({"inspect", "qmatrix", "--lambda", "1", "--power", "2", "--mod", "37"}).code == 1);
  CHECK(run({"inspect", "qmatrix", "--lambda", "3", "--power", "2", "--mod", "1"}).code == 1);

  {
    std::ofstream(dir / "tampered.env") << "{\"v\":1,\"p\":37,\"k\":2,\"b\":[31,13,19],\"len\":9,\"cipher\":\"HP393IVY1\"}\n";
  }
  const Run tampered = run({"decrypt", "--key", bob + ".key", "--envelope", dir / "tampered.env"});
  CHECK(tampered.code == 1);
  CHECK(tampered.err.find("malformed-envelope") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"keygen", "--prime", "37"}).code == 2);
  CHECK(run({"keygen", "--prime", "x", "--private", "13", "--out", "b"}).code == 2);
  CHECK(run({"inspect", "qmatrix", "--lambda", "3", "--power", "2", "--mod", "37", "--bogus"}).code == 2);
  CHECK(run({"encrypt", "--pub", "p", "--ephemeral", "22", "--shift", "1,x", "--text", "A", "--out", "o"}).code == 2);
  CHECK(run({"encrypt", "--pub", "p", "--ephemeral", "22", "--shift", "1,2", "--out", "o"}).code == 2);
  CHECK(run({"encrypt", "--pub", "p", "--ephemeral", "soon", "--shift", "1,2", "--text", "A", "--out", "o"}).code ==
        2);
  CHECK(run({"session", "--pub", "p"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
