#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "cyclix/matrix.hpp"

namespace cyclix {

/// left * A * right = diag(d), d nonnegative with d[i] | d[i+1], left and
/// right unimodular. d has min(rows, cols) entries; trailing entries are zero.
struct SmithForm {
  std::vector<mpz_class> diagonal;
  std::size_t rank = 0;
  Matrix left;
  Matrix right;
};

/// Entries must be integers (any domain whose entries are integral is accepted).
SmithForm smith_normal_form(const Matrix& m);

/// Diagonal only; skips the transform bookkeeping.
std::vector<mpz_class> smith_invariants(const Matrix& m);

}  // namespace cyclix
