#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cyclix/matrix.hpp"

namespace cyclix {

/// Incremental row echelon form over a field. Rows are kept with leading
/// coefficient 1; they are not fully reduced until reduced_rows() is called.
class EchelonBasis {
 public:
  EchelonBasis(ScalarDomain dom, std::size_t ambient);

  /// Returns true iff v enlarged the span.
  bool insert(SparseVec v);
  /// Remainder of v after elimination against the current pivots.
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t ambient() const noexcept { return pivot_row_.size(); }
  const ScalarDomain& domain() const noexcept { return dom_; }
  /// Canonical reduced row echelon form, sorted by pivot column.
  std::vector<SparseVec> reduced_rows() const;

 private:
  ScalarDomain dom_;
  std::vector<SparseVec> rows_;
  std::vector<long> pivot_row_;
};

/// A subspace of dom^ambient stored as its reduced row echelon basis, so that
/// equal subspaces have identical representations.
class SubspaceBasis {
 public:
  SubspaceBasis(ScalarDomain dom, std::size_t ambient, const std::vector<SparseVec>& spanning = {});

  static SubspaceBasis full(ScalarDomain dom, std::size_t ambient);

  const ScalarDomain& domain() const noexcept { return dom_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<SparseVec>& basis() const noexcept { return basis_; }
  bool contains(const SparseVec& v) const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.dom_ == b.dom_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  ScalarDomain dom_;
  std::size_t ambient_;
  std::vector<SparseVec> basis_;
};

/// Throws AmbientMismatch when the ambient spaces or domains differ.
bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b);

struct RankKernelImage {
  std::size_t rank;
  SubspaceBasis kernel;  // inside dom^cols
  SubspaceBasis image;   // inside dom^rows
};

/// Throws DomainNotField over the integers.
RankKernelImage rank_kernel_image(const Matrix& m);
std::size_t rank(const Matrix& m);
SubspaceBasis kernel(const Matrix& m);
/// Basis of ker m with one vector per non-pivot column; cheaper than kernel()
/// but not canonical.
std::vector<SparseVec> kernel_basis(const Matrix& m);
SubspaceBasis image(const Matrix& m);

/// Expresses vectors as combinations of a fixed list of generators.
class SpanSolver {
 public:
  SpanSolver(ScalarDomain dom, std::size_t ambient);

  /// Adds generator number generator_count(); returns false if it was dependent.
  bool add_generator(const SparseVec& v);
  std::size_t generator_count() const noexcept { return generators_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  /// Coefficients c with v = sum c_k g_k, or nullopt if v is outside the span.
  /// Dependent generators never receive weight.
  std::optional<SparseVec> express(SparseVec v) const;

 private:
  ScalarDomain dom_;
  std::size_t generators_ = 0;
  std::vector<SparseVec> rows_;
  std::vector<SparseVec> combos_;
  std::vector<long> pivot_row_;
};

}  // namespace cyclix
