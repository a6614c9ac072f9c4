#include "fibhill/matrix.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace fibhill {

namespace {

void require_square(const ModMatrix& a, const char* what) {
  if (!a.is_square()) {
    throw Error(Errc::dimension_mismatch, std::string(what) + " needs a square matrix, got " +
                                              std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

ModMatrix minor_of(const ModMatrix& a, Eigen::Index skip_row, Eigen::Index skip_col) {
  const Eigen::Index n = a.rows();
  ModMatrix out(n - 1, n - 1, a.modulus());
  for (Eigen::Index i = 0, oi = 0; i < n; ++i) {
    if (i == skip_row) continue;
    for (Eigen::Index j = 0, oj = 0; j < n; ++j) {
      if (j == skip_col) continue;
      out.set(oi, oj++, static_cast<std::int64_t>(a(i, j)));
    }
    ++oi;
  }
  return out;
}

}  // namespace

ModMatrix::ModMatrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t modulus)
    : entries_(ResidueMatrix::Zero(rows, cols)), modulus_(modulus) {
  if (modulus < 2 || modulus >= kMaxModulus) {
    throw Error(Errc::invalid_modulus, "matrix modulus must satisfy 2 <= m < 2^31, got " + std::to_string(modulus));
  }
}

ModMatrix ModMatrix::from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                               std::uint64_t modulus) {
  const auto n_rows = static_cast<Eigen::Index>(rows.size());
  const auto n_cols = n_rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.begin()->size());
  ModMatrix out(n_rows, n_cols, modulus);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n_cols) throw Error(Errc::dimension_mismatch, "ragged row list");
    Eigen::Index j = 0;
    for (auto v : row) out.set(i, j++, v);
    ++i;
  }
  return out;
}

ModMatrix ModMatrix::identity(Eigen::Index n, std::uint64_t modulus) {
  ModMatrix out(n, n, modulus);
  out.entries_.setIdentity();
  return out;
}

bool ModMatrix::is_identity() const { return is_square() && entries_ == ResidueMatrix::Identity(rows(), cols()); }

ModMatrix mat_mul(const ModMatrix& a, const ModMatrix& b) {
  if (a.modulus() != b.modulus()) {
    throw Error(Errc::modulus_mismatch,
                "product of matrices mod " + std::to_string(a.modulus()) + " and mod " + std::to_string(b.modulus()));
  }
  if (a.cols() != b.rows()) {
    throw Error(Errc::dimension_mismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                              std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                                              std::to_string(b.cols()));
  }
  const std::uint64_t m = a.modulus();
  ModMatrix out(a.rows(), b.cols(), m);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Residue acc = 0;
      for (Eigen::Index t = 0; t < a.cols(); ++t) acc = (acc + a(i, t) * b(t, j)) % m;
      out.set(i, j, static_cast<std::int64_t>(acc));
    }
  }
  return out;
}

ResidueRow row_times(const ResidueRow& row, const ModMatrix& a) {
  if (row.size() != a.rows()) {
    throw Error(Errc::dimension_mismatch, "row of length " + std::to_string(row.size()) + " times " +
                                              std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " matrix");
  }
  const std::uint64_t m = a.modulus();
  ResidueRow out(a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    Residue acc = 0;
    for (Eigen::Index t = 0; t < a.rows(); ++t) acc = (acc + row(t) * a(t, j)) % m;
    out(j) = acc;
  }
  return out;
}

Residue mat_det(const ModMatrix& a) {
  require_square(a, "determinant");
  const std::uint64_t m = a.modulus();
  const Eigen::Index n = a.rows();
  ResidueMatrix w = a.entries();
  bool negate = false;
  // Euclid on each pivot column: subtracting integer multiples of one row from
  // another keeps det unchanged and needs no inverses, so it works in any Z_m.
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index i = k + 1; i < n; ++i) {
      while (w(i, k) != 0) {
        const Residue q = w(k, k) / w(i, k);
        if (q != 0) {
          for (Eigen::Index j = k; j < n; ++j) w(k, j) = sub_mod(w(k, j), mul_mod(q, w(i, j), m), m);
        }
        w.row(k).swap(w.row(i));
        negate = !negate;
      }
    }
    if (w(k, k) == 0) return 0;
  }
  Residue det = 1;
  for (Eigen::Index k = 0; k < n; ++k) det = mul_mod(det, w(k, k), m);
  return negate ? sub_mod(0, det, m) : det;
}

ModMatrix mat_inverse_generic(const ModMatrix& a) {
  require_square(a, "inverse");
  const std::uint64_t m = a.modulus();
  const Eigen::Index n = a.rows();
  const Residue det = mat_det(a);
  std::uint64_t det_inv = 0;
  try {
    det_inv = mod_inv(det, m);
  } catch (const Error&) {
    throw Error(Errc::not_invertible,
                "determinant " + std::to_string(det) + " is not a unit mod " + std::to_string(m));
  }
  ModMatrix out(n, n, m);
  if (n == 1) {
    out.set(0, 0, static_cast<std::int64_t>(det_inv));
    return out;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Residue cofactor = mat_det(minor_of(a, j, i));
      if ((i + j) % 2 == 1) cofactor = sub_mod(0, cofactor, m);
      out.set(i, j, static_cast<std::int64_t>(mul_mod(cofactor, det_inv, m)));
    }
  }
  return out;
}

std::string format_matrix(const ModMatrix& a) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    os << '[';
    for (Eigen::Index j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j);
    os << "]\n";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ModMatrix& a) { return os << format_matrix(a); }

}  // namespace fibhill
