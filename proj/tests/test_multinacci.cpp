#include <doctest.h>

#include "fibhill/error.hpp"
#include "fibhill/multinacci.hpp"
#include "oracles.hpp"

using namespace fibhill;

namespace {

std::vector<std::int64_t> exact(unsigned lambda, std::int64_t lo, std::int64_t hi) {
  return terms(MultinacciOrder(lambda), lo, hi).terms;
}

}  // namespace

TEST_CASE("order validation") {
  CHECK_NOTHROW(MultinacciOrder(2));
  CHECK_NOTHROW(MultinacciOrder(64));
  CHECK_THROWS_AS(MultinacciOrder(1), Error);
  CHECK_THROWS_AS(MultinacciOrder(0), Error);
  CHECK_THROWS_AS(MultinacciOrder(65), Error);
}

TEST_CASE("initial values") {
  CHECK(initial_values(MultinacciOrder(2)).terms == std::vector<std::int64_t>{0, 1});
  CHECK(initial_values(MultinacciOrder(3)).terms == std::vector<std::int64_t>{0, 0, 1});
  CHECK(initial_values(MultinacciOrder(5)).terms == std::vector<std::int64_t>{0, 0, 0, 0, 1});
}

TEST_CASE("tribonacci table") {
  CHECK(exact(3, 0, 8) == std::vector<std::int64_t>{0, 0, 1, 1, 2, 4, 7, 13, 24});
  CHECK(exact(3, -8, -1) == std::vector<std::int64_t>{-8, 4, 1, -3, 2, 0, -1, 1});
  CHECK(exact(2, -4, -1) == std::vector<std::int64_t>{-3, 2, -1, 1});

  const SequenceWindow w = terms(MultinacciOrder(3), -8, 8);
  CHECK(w.lo == -8);
  CHECK(w.hi() == 8);
  CHECK(w.at(-8) == -8);
  CHECK(w.at(8) == 24);
  CHECK_THROWS_AS(w.at(9), Error);
}

TEST_CASE("single-index and sub-seed windows") {
  CHECK(exact(4, 1, 1) == std::vector<std::int64_t>{0});
  CHECK(exact(4, 3, 3) == std::vector<std::int64_t>{1});
  CHECK(exact(4, -1, 5) == oracle::sequence(4, -1, 5));
  CHECK(exact(3, 6, 6) == std::vector<std::int64_t>{7});
  CHECK(exact(3, -5, -5) == std::vector<std::int64_t>{-3});
}

TEST_CASE("term_mod") {
  CHECK(term_mod(MultinacciOrder(3), 6, 37) == 7);
  CHECK(term_mod(MultinacciOrder(3), -5, 37) == 34);
  for (unsigned lambda = 2; lambda <= 8; ++lambda) {
    CHECK(term_mod(MultinacciOrder(lambda), lambda - 1, 26) == 1);
  }
}

TEST_CASE("errors") {
  try {
    terms(MultinacciOrder(3), 5, 4);
    FAIL("expected invalid-range");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_range);
  }
  try {
    terms(MultinacciOrder(2), 0, 200);  // F_93 already exceeds int64
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::overflow);
  }
  CHECK_NOTHROW(terms(MultinacciOrder(2), 0, 92));  // F_92 is the largest that fits
  CHECK(terms(MultinacciOrder(2), 92, 92).terms[0] == 7540113804746346429LL);
  CHECK_NOTHROW(terms(MultinacciOrder(2), 0, 200, 1'000'000'007ull));
  CHECK_THROWS_AS(terms(MultinacciOrder(2), 0, 2, 1), Error);
}

TEST_CASE("recurrence closure against the oracle") {
  for (unsigned lambda = 2; lambda <= 8; ++lambda) {
    const auto got = exact(lambda, -30, 30);
    REQUIRE(got == oracle::sequence(lambda, -30, 30));
    for (std::size_t n = 0; n + lambda < got.size(); ++n) {
      std::int64_t sum = 0;
      for (unsigned t = 0; t < lambda; ++t) sum += got[n + t];
      REQUIRE(got[n + lambda] == sum);
    }
  }
}

TEST_CASE("backward terms re-derive forward") {
  for (unsigned lambda = 2; lambda <= 6; ++lambda) {
    const auto low = exact(lambda, -40, -40 + static_cast<std::int64_t>(lambda) - 1);
    std::vector<std::int64_t> run = low;
    for (std::int64_t idx = -40 + static_cast<std::int64_t>(lambda); idx <= 10; ++idx) {
      std::int64_t sum = 0;
      for (unsigned t = 1; t <= lambda; ++t) sum += run[run.size() - t];
      run.push_back(sum);
    }
    REQUIRE(run == exact(lambda, -40, 10));
  }
}

TEST_CASE("negafibonacci identity") {
  const auto pos = exact(2, 1, 40);
  const auto neg = exact(2, -40, -1);
  for (int n = 1; n <= 40; ++n) {
    const std::int64_t fn = pos[static_cast<std::size_t>(n - 1)];
    const std::int64_t fneg = neg[static_cast<std::size_t>(40 - n)];
    REQUIRE(fneg == (n % 2 == 1 ? fn : -fn));
  }
}

TEST_CASE("modular terms agree with exact terms") {
  for (unsigned lambda = 2; lambda <= 6; ++lambda) {
    std::vector<std::int64_t> ex;
    std::int64_t lo = -60, hi = 60;
    // Shrink until the exact window is representable.
    while (true) {
      try {
        ex = exact(lambda, lo, hi);
        break;
      } catch (const Error&) {
        lo += 2;
        hi -= 2;
      }
    }
    for (std::uint64_t m : {26ull, 37ull, 97ull}) {
      const auto md = terms(MultinacciOrder(lambda), lo, hi, m).terms;
      for (std::size_t i = 0; i < ex.size(); ++i) {
        REQUIRE(md[i] == oracle::canon(ex[i], static_cast<std::int64_t>(m)));
        REQUIRE(static_cast<std::int64_t>(term_mod(MultinacciOrder(lambda), lo + static_cast<std::int64_t>(i), m)) ==
                md[i]);
      }
    }
  }
}

TEST_CASE("large modular index stays cheap") {
  // Pisano period of 10 is 60, so F_(10^6 + 7) = F_47 = 2971215073 (mod 10).
  CHECK(term_mod(MultinacciOrder(2), 1'000'007, 10) == 3);
  CHECK(term_mod(MultinacciOrder(2), 60 * 1000 + 7, 10) == 13 % 10);
}
