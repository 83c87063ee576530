#pragma once

#include <string>
#include <vector>

namespace cyclix {

/// Finite group given by a full multiplication table on indices 0..order-1.
class FiniteGroup {
 public:
  /// Validates closure, associativity, identity and inverses; throws InvalidGroup.
  explicit FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels = {},
                       std::string name = "table");

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  /// Direct product of cyclic groups; element index is mixed-radix, first factor most significant.
  static FiniteGroup product(const std::vector<int>& orders);
  /// Symmetric group on k letters, elements in lexicographic order of permutations.
  static FiniteGroup symmetric(int k);
  /// "trivial", "cyclic:n", "product:a,b,..", "symmetric:k". Throws InvalidInput.
  static FiniteGroup from_preset(const std::string& text);

  int order() const noexcept { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int identity() const noexcept { return identity_; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<std::vector<int>>& table() const noexcept { return table_; }

  bool is_central(int z) const;
  bool is_abelian() const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<std::string> labels_;
  std::string name_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

}  // namespace cyclix
