#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cyclix/chain_complex.hpp"

namespace cyclix {

/// Homological: vertical maps M(p,q) -> M(p,q-1), Tot_n = sum_{p+q=n}, d = dh + dv.
/// Mixed: vertical maps M(p,q) -> M(p,q+1), Tot_n = sum_{p-q=n}, d = dh - dv.
/// Horizontal maps always go M(p,q) -> M(p-1,q).
enum class Variance { Homological, Mixed };

using Cell = std::pair<int, int>;

/// Finite bigraded module with horizontal and vertical differentials.
/// Cells are added explicitly; maps into or out of absent cells are zero.
/// Invariant (checked by total_complex): dh dv + dv dh = 0.
class Bicomplex {
 public:
  Bicomplex(ScalarDomain dom, Variance variance) : dom_(dom), variance_(variance) {}

  void set_cell(int p, int q, std::size_t rank);
  /// Throws DimensionMismatch if the shape disagrees with the cells.
  void set_horizontal(int p, int q, Matrix m);
  void set_vertical(int p, int q, Matrix m);

  const ScalarDomain& domain() const noexcept { return dom_; }
  Variance variance() const noexcept { return variance_; }
  bool has_cell(int p, int q) const { return ranks_.count({p, q}) != 0; }
  std::size_t rank(int p, int q) const;
  /// Zero matrix when unset or when the target cell is absent.
  Matrix horizontal(int p, int q) const;
  Matrix vertical(int p, int q) const;
  int vertical_target(int q) const { return variance_ == Variance::Homological ? q - 1 : q + 1; }
  int total_degree(int p, int q) const { return variance_ == Variance::Homological ? p + q : p - q; }
  std::vector<Cell> cells() const;

  /// Copy with vertical maps out of column p multiplied by (-1)^p, turning
  /// commuting squares into anticommuting ones.
  Bicomplex with_column_signs() const;

 private:
  ScalarDomain dom_;
  Variance variance_;
  std::map<Cell, std::size_t> ranks_;
  std::map<Cell, Matrix> horizontal_;
  std::map<Cell, Matrix> vertical_;
};

struct Totalization {
  ChainComplex complex;
  /// Offset of each cell inside its total degree; cells are laid out by increasing p.
  std::map<Cell, std::size_t> offset;
};

/// Tot over total degrees [lo, hi]; cells outside that band are dropped.
/// Throws SignCheckFailed if some square fails to anticommute, and
/// BoundarySquareNonzero if a row or column is not a complex.
Totalization total_complex(const Bicomplex& b, int lo, int hi, bool top_exact = false);

}  // namespace cyclix
