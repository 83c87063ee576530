#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cyclix/matrix.hpp"

namespace cyclix {

/// Bounded chain complex C_lo <- ... <- C_hi of free modules with d_n : C_n -> C_{n-1}.
/// C_{lo-1} is taken to be 0. When top_exact is false the complex was cut off
/// above hi, so H_hi is not determined.
/// Invariant: d_{n-1} d_n = 0, checked at construction.
class ChainComplex {
 public:
  /// ranks[k] = rank C_{lo+k}; boundaries[k] = d_{lo+1+k}. Throws
  /// DimensionMismatch on shape errors and BoundarySquareNonzero if d^2 != 0.
  ChainComplex(ScalarDomain dom, int lo, std::vector<std::size_t> ranks, std::vector<Matrix> boundaries,
               bool top_exact = false);

  const ScalarDomain& domain() const noexcept { return dom_; }
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  bool top_exact() const noexcept { return top_exact_; }
  bool in_range(int n) const noexcept { return n >= lo() && n <= hi(); }
  /// 0 outside [lo, hi].
  std::size_t rank(int n) const;
  /// d_n for n in [lo, hi + 1]; d_lo and d_{hi+1} are zero maps. Throws RangeExceedsComplex.
  const Matrix& boundary(int n) const;
  /// Same boundaries with entries reduced into dom.
  ChainComplex in_domain(ScalarDomain dom) const;

 private:
  ScalarDomain dom_;
  int lo_;
  std::vector<std::size_t> ranks_;
  std::vector<Matrix> boundaries_;  // d_lo .. d_{hi+1}
  bool top_exact_;
};

}  // namespace cyclix
