#pragma once

#include "fibhill/matrix.hpp"
#include "oracles.hpp"

namespace testing {

inline oracle::Mat to_mat(const fibhill::ModMatrix& a) {
  oracle::Mat out(static_cast<std::size_t>(a.rows()), std::vector<std::int64_t>(static_cast<std::size_t>(a.cols())));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<std::int64_t>(a(i, j));
  return out;
}

inline fibhill::ModMatrix from_mat(const oracle::Mat& a, std::uint64_t m) {
  fibhill::ModMatrix out(static_cast<Eigen::Index>(a.size()), static_cast<Eigen::Index>(a[0].size()), m);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      out.set(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j), a[i][j]);
  return out;
}

}  // namespace testing
