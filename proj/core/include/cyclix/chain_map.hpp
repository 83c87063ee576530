#pragma once

#include <map>
#include <memory>
#include <string>

#include "cyclix/chain_complex.hpp"
#include "cyclix/homology.hpp"

namespace cyclix {

using ComplexPtr = std::shared_ptr<const ChainComplex>;

/// Graded map f_n : C_n -> D_{n+shift} with d f = (-1)^shift f d.
/// Components are stored for every n with n and n+shift in range; absent
/// components are zero.
class ChainMap {
 public:
  /// Throws DimensionMismatch on shape errors and NotAChainMap if the
  /// commutation rule fails.
  ChainMap(ComplexPtr source, ComplexPtr target, int shift, std::map<int, Matrix> components, std::string name = "");

  const ComplexPtr& source() const noexcept { return source_; }
  const ComplexPtr& target() const noexcept { return target_; }
  int shift() const noexcept { return shift_; }
  const std::string& name() const noexcept { return name_; }
  bool has_component(int n) const { return components_.count(n) != 0; }
  /// Throws RangeExceedsComplex if n or n+shift is out of range.
  const Matrix& at(int n) const;

  static ChainMap identity(const ComplexPtr& c);
  static ChainMap zero(const ComplexPtr& source, const ComplexPtr& target, int shift = 0);

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  int shift_;
  std::map<int, Matrix> components_;
  std::string name_;
};

/// g o f. Throws BasisMismatch unless f.target() and g.source() are the same complex.
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// Matrix of H_n(f) : H_n(C) -> H_{n+shift}(D) in the representative bases.
/// Both results need representatives. Throws NotAChainMap if a
/// representative is not sent to a cycle.
Matrix induced_map(const ChainMap& f, const HomologyResult& h_source, const HomologyResult& h_target, int degree);

struct ExactnessVerdict {
  std::size_t image_dim = 0;
  std::size_t kernel_dim = 0;
  bool exact = false;
};

/// im f = ker g for U --f--> V --g--> W. Throws BasisMismatch if the middle
/// spaces differ in size or the domains differ.
ExactnessVerdict exactness(const Matrix& f, const Matrix& g);
bool exactness_at(const Matrix& f, const Matrix& g);

}  // namespace cyclix
