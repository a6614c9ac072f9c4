#pragma once

/**
 * @file matrix.hpp
 * @brief Dense matrices over the ring Z/mZ, backed by Eigen storage.
 *
 * Eigen's own arithmetic would overflow on 64-bit residues, so products,
 * determinants and inverses are free functions that reduce after every
 * multiply-accumulate. Nothing here assumes m is prime: the determinant uses
 * division-free (Euclidean) row reduction and the inverse is adjugate / det.
 */

#include <Eigen/Core>
#include <climits>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "fibhill/error.hpp"
#include "fibhill/modmath.hpp"

namespace fibhill {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using ResidueMatrix = DenseMatrix<Residue>;
using ResidueRow = RowVector<Residue>;

/// A rows x cols matrix of canonical residues mod m, 2 <= m < 2^31.
class ModMatrix {
 public:
  ModMatrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t modulus);

  /// Reduces every entry of `values` into [0, m).
  template <typename Derived>
  static ModMatrix from(const Eigen::MatrixBase<Derived>& values, std::uint64_t modulus) {
    ModMatrix out(values.rows(), values.cols(), modulus);
    for (Eigen::Index i = 0; i < values.rows(); ++i)
      for (Eigen::Index j = 0; j < values.cols(); ++j) out.entries_(i, j) = reduce_scalar(values(i, j), modulus);
    return out;
  }

  static ModMatrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                             std::uint64_t modulus);
  static ModMatrix identity(Eigen::Index n, std::uint64_t modulus);

  Eigen::Index rows() const noexcept { return entries_.rows(); }
  Eigen::Index cols() const noexcept { return entries_.cols(); }
  bool is_square() const noexcept { return rows() == cols(); }
  std::uint64_t modulus() const noexcept { return modulus_; }

  Residue operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }
  const ResidueMatrix& entries() const noexcept { return entries_; }

  /// Stores value mod m.
  void set(Eigen::Index i, Eigen::Index j, std::int64_t value) { entries_(i, j) = reduce(value, modulus_); }

  bool is_identity() const;

  friend bool operator==(const ModMatrix& a, const ModMatrix& b) {
    return a.modulus_ == b.modulus_ && a.rows() == b.rows() && a.cols() == b.cols() && a.entries_ == b.entries_;
  }

 private:
  template <typename Scalar>
  static Residue reduce_scalar(Scalar v, std::uint64_t m) {
    if constexpr (std::is_signed_v<Scalar>) {
      return reduce(static_cast<std::int64_t>(v), m);
    } else {
      return static_cast<Residue>(v % m);
    }
  }

  ResidueMatrix entries_;
  std::uint64_t modulus_;
};

ModMatrix mat_mul(const ModMatrix& a, const ModMatrix& b);

inline ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) { return mat_mul(a, b); }

/// Row vector times matrix, reduced mod m. `row` entries must be canonical.
ResidueRow row_times(const ResidueRow& row, const ModMatrix& a);

/// det(a) mod m for any m >= 2.
Residue mat_det(const ModMatrix& a);

/// adj(a) * det(a)^-1. Throws not-invertible when gcd(det, m) != 1.
ModMatrix mat_inverse_generic(const ModMatrix& a);

/// Fixed bracketed layout, one row per line: "[7 6 4]".
std::string format_matrix(const ModMatrix& a);
std::ostream& operator<<(std::ostream& os, const ModMatrix& a);

/**
 * Exact determinant of an integer matrix by fraction-free (Bareiss)
 * elimination. Intermediates are the leading minors of `a`, held in 128-bit
 * integers; throws overflow if one escapes the 64-bit result range.
 */
template <typename Derived>
std::int64_t exact_determinant(const Eigen::MatrixBase<Derived>& a) {
  static_assert(std::is_integral_v<typename Derived::Scalar>, "exact_determinant needs an integer scalar");
  if (a.rows() != a.cols()) throw Error(Errc::dimension_mismatch, "determinant of a non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  std::vector<int128> w(static_cast<std::size_t>(n * n));
  auto at = [&](Eigen::Index i, Eigen::Index j) -> int128& { return w[static_cast<std::size_t>(i * n + j)]; };
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) at(i, j) = static_cast<int128>(a(i, j));
  int128 prev = 1;
  int sign = 1;
  auto check = [](int128 v) {
    constexpr int128 lim = static_cast<int128>(INT64_MAX);
    if (v > lim || v < -lim) throw Error(Errc::overflow, "exact determinant exceeds 64-bit range");
  };
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (Eigen::Index j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        check(at(i, j));
      }
    }
    prev = at(k, k);
  }
  const int128 det = sign * at(n - 1, n - 1);
  check(det);
  return static_cast<std::int64_t>(det);
}

}  // namespace fibhill
