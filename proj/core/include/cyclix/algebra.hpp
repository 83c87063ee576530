#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclix/group.hpp"
#include "cyclix/sparse.hpp"

namespace cyclix {

/// Unital associative algebra with basis e_0..e_{d-1} and products
/// e_i e_j = table[i][j]. Invariant: associativity and the unit laws hold
/// on basis elements (checked at construction).
class FiniteAlgebra {
 public:
  /// Throws NotAssociative, NoUnit, DimensionMismatch.
  FiniteAlgebra(ScalarDomain dom, std::vector<std::string> labels, SparseVec unit,
                std::vector<std::vector<SparseVec>> table, std::string name = "algebra");

  /// The ground ring itself.
  static FiniteAlgebra ground(ScalarDomain dom);
  /// Basis = group elements in index order.
  static FiniteAlgebra group_algebra(const FiniteGroup& group, ScalarDomain dom);
  /// K[x]/(x^k), basis 1, x, .., x^{k-1}.
  static FiniteAlgebra truncated_polynomial(int k, ScalarDomain dom);
  /// K^m, basis of orthogonal idempotents.
  static FiniteAlgebra product_field(int m, ScalarDomain dom);
  /// "unit", "truncpoly:k", "productfield:m", "group:<group preset>". Throws InvalidInput.
  static FiniteAlgebra from_preset(const std::string& text, ScalarDomain dom);

  const ScalarDomain& domain() const noexcept { return dom_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const SparseVec& unit() const noexcept { return unit_; }
  const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i][j]; }
  const std::vector<std::vector<SparseVec>>& table() const noexcept { return table_; }
  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
  bool is_commutative() const noexcept { return commutative_; }
  /// Same structure constants reduced into dom.
  FiniteAlgebra in_domain(ScalarDomain dom) const;

 private:
  ScalarDomain dom_;
  std::vector<std::string> labels_;
  SparseVec unit_;
  std::vector<std::vector<SparseVec>> table_;
  std::string name_;
  bool commutative_ = false;
};

}  // namespace cyclix
