#include "fibhill/qmatrix.hpp"

#include <string>
#include <utility>

namespace fibhill {

namespace {

ModMatrix companion(unsigned lambda, std::uint64_t m) {
  const auto n = static_cast<Eigen::Index>(lambda);
  ModMatrix q(n, n, m);
  for (Eigen::Index j = 0; j < n; ++j) q.set(0, j, 1);
  for (Eigen::Index i = 1; i < n; ++i) q.set(i, i - 1, 1);
  return q;
}

// Q^-1: shifted identity above, [1, -1, ..., -1] as the last row.
ModMatrix companion_inverse(unsigned lambda, std::uint64_t m) {
  const auto n = static_cast<Eigen::Index>(lambda);
  ModMatrix q(n, n, m);
  for (Eigen::Index i = 0; i + 1 < n; ++i) q.set(i, i + 1, 1);
  q.set(n - 1, 0, 1);
  for (Eigen::Index j = 1; j < n; ++j) q.set(n - 1, j, -1);
  return q;
}

ModMatrix power_by_squaring(ModMatrix base, std::uint64_t exp) {
  ModMatrix result = ModMatrix::identity(base.rows(), base.modulus());
  while (exp > 0) {
    if (exp & 1) result = mat_mul(result, base);
    exp >>= 1;
    if (exp) base = mat_mul(base, base);
  }
  return result;
}

}  // namespace

QMatrix::QMatrix(MultinacciOrder order, std::int64_t power, ModMatrix matrix)
    : order_(order), power_(power), matrix_(std::move(matrix)) {
  if (matrix_.rows() != static_cast<Eigen::Index>(order.value()) || !matrix_.is_square()) {
    throw Error(Errc::dimension_mismatch, "key matrix shape does not match order " + std::to_string(order.value()));
  }
}

QMatrix q_matrix(MultinacciOrder order, std::uint64_t m) { return QMatrix(order, 1, companion(order.value(), m)); }

ModMatrix assemble_q_power(const SequenceWindow& window, std::int64_t k, std::uint64_t m) {
  const auto lam = static_cast<std::int64_t>(window.order.value());
  const auto n = static_cast<Eigen::Index>(lam);
  ModMatrix out(n, n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::int64_t c = k + lam - 1 - i;
    out.set(i, 0, window.at(c));
    // Column j sums lambda - j consecutive terms ending at f_{c-1}; build it
    // right to left, adding one older term per step.
    Residue acc = 0;
    for (std::int64_t j = lam - 1; j >= 1; --j) {
      acc = add_mod(acc, reduce(window.at(c - lam + j), m), m);
      out.set(i, static_cast<Eigen::Index>(j), static_cast<std::int64_t>(acc));
    }
  }
  return out;
}

QMatrix q_power(MultinacciOrder order, std::int64_t k, std::uint64_t m) {
  if (k > kMaxPower || k < -kMaxPower) {
    throw Error(Errc::out_of_range, "power " + std::to_string(k) + " exceeds |k| <= 2^31");
  }
  const auto lam = static_cast<std::int64_t>(order.value());
  if (k > kDirectWindowLimit) {
    return QMatrix(order, k, power_by_squaring(companion(order.value(), m), static_cast<std::uint64_t>(k)));
  }
  if (k < -kDirectWindowLimit) {
    return QMatrix(order, k, power_by_squaring(companion_inverse(order.value(), m), static_cast<std::uint64_t>(-k)));
  }
  const SequenceWindow window = terms(order, k - lam + 1, k + lam - 1, m);
  return QMatrix(order, k, assemble_q_power(window, k, m));
}

}  // namespace fibhill
