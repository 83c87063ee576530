#pragma once

// Bridges between library matrices and the dense oracle.

#include <cyclix/matrix.hpp>

#include "oracle.hpp"

namespace cyclix::testing {

inline oracle::Dense to_oracle(const Matrix& m) {
  oracle::Dense out = oracle::zeros(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (const auto& e : m.column(j)) out[e.index][j] = e.value.to_mpq();
  }
  return out;
}

inline Matrix from_oracle(ScalarDomain dom, const oracle::Dense& d, std::size_t cols) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : d) {
    std::vector<Rational> row;
    for (const auto& x : r) row.emplace_back(x);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return Matrix(dom, 0, cols);
  return Matrix::from_dense(dom, rows);
}

inline long prime_of(const ScalarDomain& dom) { return static_cast<long>(dom.characteristic()); }

}  // namespace cyclix::testing
