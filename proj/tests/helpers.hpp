#pragma once

#include "dehn/matrix.hpp"
#include "oracles.hpp"

inline oracle::Mat to_oracle(const dehn::IntMatrix& m) {
  oracle::Mat out(m.rows(), std::vector<oracle::Z>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline dehn::IntMatrix from_oracle(const oracle::Mat& m) {
  dehn::IntMatrix out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = m[i][j];
  return out;
}
