#pragma once

/**
 * @file qmatrix.hpp
 * @brief Powers of the multinacci companion matrix Q_lambda over Z/mZ.
 *
 * Q_lambda has a first row of ones, ones on the subdiagonal and zeros
 * elsewhere. Its k-th power (any signed k) has entries drawn from a single
 * window of sequence terms around index k:
 *
 *   entry(i, 0)      = f_{k+lambda-1-i}
 *   entry(i, j >= 1) = f_{k+lambda-2-i} + ... + f_{k+j-1-i}   (lambda - j terms)
 *
 * so Q^k and Q^-k are both built without any matrix multiplication or
 * generic inversion.
 */

#include <cstdint>

#include "fibhill/matrix.hpp"
#include "fibhill/multinacci.hpp"

namespace fibhill {

/// Beyond this |k| q_power switches from window assembly to repeated squaring.
inline constexpr std::int64_t kDirectWindowLimit = 1'000'000;

/// Largest |k| accepted by q_power.
inline constexpr std::int64_t kMaxPower = std::int64_t{1} << 31;

/// Q_lambda^k mod m. `power` is provenance for display only.
class QMatrix {
 public:
  QMatrix(MultinacciOrder order, std::int64_t power, ModMatrix matrix);

  MultinacciOrder order() const noexcept { return order_; }
  std::int64_t power() const noexcept { return power_; }
  std::uint64_t modulus() const noexcept { return matrix_.modulus(); }
  const ModMatrix& matrix() const noexcept { return matrix_; }

  Residue operator()(Eigen::Index i, Eigen::Index j) const { return matrix_(i, j); }

 private:
  MultinacciOrder order_;
  std::int64_t power_;
  ModMatrix matrix_;
};

/// Companion matrix Q_lambda mod m.
QMatrix q_matrix(MultinacciOrder order, std::uint64_t m);

/// Q_lambda^k mod m for signed k, |k| <= 2^31.
QMatrix q_power(MultinacciOrder order, std::int64_t k, std::uint64_t m);

/// Q_lambda^k from an already computed window containing f_{k-lambda+1}..f_{k+lambda-1}.
ModMatrix assemble_q_power(const SequenceWindow& window, std::int64_t k, std::uint64_t m);

}  // namespace fibhill
