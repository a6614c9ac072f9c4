#include "fibhill/multinacci.hpp"

#include <string>

#include "fibhill/error.hpp"

namespace fibhill {

namespace {

struct ExactArith {
  std::int64_t add(std::int64_t a, std::int64_t b) const {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) overflow();
    return r;
  }
  std::int64_t sub(std::int64_t a, std::int64_t b) const {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) overflow();
    return r;
  }
  [[noreturn]] static void overflow() {
    throw Error(Errc::overflow, "exact multinacci term exceeds signed 64-bit range; supply a modulus");
  }
};

struct ModArith {
  std::uint64_t m;
  std::int64_t add(std::int64_t a, std::int64_t b) const {
    return static_cast<std::int64_t>(add_mod(static_cast<Residue>(a), static_cast<Residue>(b), m));
  }
  std::int64_t sub(std::int64_t a, std::int64_t b) const {
    return static_cast<std::int64_t>(sub_mod(static_cast<Residue>(a), static_cast<Residue>(b), m));
  }
};

// Walks the recurrence outward from the seed block, writing indices that
// fall inside [lo, hi] into out (out[0] is f_lo).
template <typename Arith>
void fill_window(unsigned lambda, std::int64_t lo, std::int64_t hi, const Arith& arith,
                 std::vector<std::int64_t>& out) {
  const auto lam = static_cast<std::int64_t>(lambda);
  auto emit = [&](std::int64_t index, std::int64_t value) {
    if (index >= lo && index <= hi) out[static_cast<std::size_t>(index - lo)] = value;
  };
  auto seeds = [lambda] {
    std::vector<std::int64_t> s(lambda, 0);
    s.back() = 1;
    return s;
  };

  if (hi >= 0) {
    std::vector<std::int64_t> ring = seeds();
    for (std::int64_t i = 0; i < lam; ++i) emit(i, ring[static_cast<std::size_t>(i)]);
    std::int64_t sum = 1;  // f_{idx-lambda} + ... + f_{idx-1}
    std::size_t oldest = 0;
    for (std::int64_t idx = lam; idx <= hi; ++idx) {
      const std::int64_t next = sum;
      emit(idx, next);
      if (idx == hi) break;
      sum = arith.add(arith.sub(sum, ring[oldest]), next);
      ring[oldest] = next;
      oldest = (oldest + 1) % lambda;
    }
  }

  if (lo < 0) {
    std::vector<std::int64_t> ring = seeds();
    std::int64_t sum = 1;  // f_{n+1} + ... + f_{n+lambda}
    std::size_t top = lambda - 1;
    for (std::int64_t n = -1; n >= lo; --n) {
      const std::int64_t highest = ring[top];
      const std::int64_t value = arith.sub(arith.add(highest, highest), sum);
      emit(n, value);
      if (n == lo) break;
      sum = arith.add(arith.sub(sum, highest), value);
      ring[top] = value;
      top = (top + lambda - 1) % lambda;
    }
  }
}

}  // namespace

MultinacciOrder::MultinacciOrder(std::int64_t lambda) {
  if (lambda < 2 || lambda > static_cast<std::int64_t>(kMaxOrder)) {
    throw Error(lambda < 2 ? Errc::lambda_degenerate : Errc::lambda_too_large,
                "sequence order must lie in [2, " + std::to_string(kMaxOrder) + "], got " + std::to_string(lambda));
  }
  lambda_ = static_cast<unsigned>(lambda);
}

std::int64_t SequenceWindow::at(std::int64_t index) const {
  if (index < lo || index > hi()) {
    throw Error(Errc::invalid_range, "index " + std::to_string(index) + " outside window [" + std::to_string(lo) +
                                         ", " + std::to_string(hi()) + "]");
  }
  return terms[static_cast<std::size_t>(index - lo)];
}

SequenceWindow initial_values(MultinacciOrder order) {
  return terms(order, 0, static_cast<std::int64_t>(order.value()) - 1);
}

SequenceWindow terms(MultinacciOrder order, std::int64_t lo, std::int64_t hi, std::optional<std::uint64_t> modulus) {
  if (lo > hi) {
    throw Error(Errc::invalid_range, "empty range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  SequenceWindow window{order, lo, {}, modulus};
  window.terms.assign(static_cast<std::size_t>(hi - lo) + 1, 0);
  if (modulus) {
    if (*modulus < 2 || *modulus >= (std::uint64_t{1} << 62)) {
      throw Error(Errc::invalid_modulus, "modulus must lie in [2, 2^62), got " + std::to_string(*modulus));
    }
    const std::uint64_t m = *modulus;
    fill_window(order.value(), lo, hi, ModArith{m}, window.terms);
  } else {
    fill_window(order.value(), lo, hi, ExactArith{}, window.terms);
  }
  return window;
}

Residue term_mod(MultinacciOrder order, std::int64_t n, std::uint64_t m) {
  return static_cast<Residue>(terms(order, n, n, m).terms.front());
}

}  // namespace fibhill
