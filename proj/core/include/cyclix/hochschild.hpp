#pragma once

#include "cyclix/algebra.hpp"
#include "cyclix/homology.hpp"
#include "cyclix/simplicial_module.hpp"

namespace cyclix {

/// Default ceiling on d^{N+1} basis tensors.
inline constexpr std::size_t default_tensor_budget = std::size_t{1} << 20;

/// [n] -> A^{(x) n+1}; basis tensors are ordered lexicographically with slot 0
/// most significant. d_i multiplies slots i, i+1 (d_n wraps a_n a_0), s_j
/// inserts the unit after slot j, t rotates the last slot to the front and
/// carries (-1)^n when signed.
class HochschildModule final : public SimplicialModule {
 public:
  /// Throws BudgetExceeded if d^{N+1} > budget.
  HochschildModule(FiniteAlgebra algebra, int truncation, bool signed_cyclic = true,
                   std::size_t budget = default_tensor_budget);

  std::string name() const override { return "C(" + algebra_.name() + ")"; }
  const ScalarDomain& domain() const override { return algebra_.domain(); }
  int truncation() const override { return truncation_; }
  std::size_t rank(int n) const override { return power(n + 1); }
  Matrix face(int n, int i) const override;
  Matrix degeneracy(int n, int j) const override;
  bool has_cyclic() const override { return true; }
  bool cyclic_signed() const override { return signed_; }
  Matrix cyclic(int n) const override;
  Matrix boundary(int n) const override;
  Matrix bprime(int n) const override;
  /// (a_0..a_n) -> (1, a_0..a_n).
  Matrix extra_degeneracy(int n) const override;

  const FiniteAlgebra& algebra() const noexcept { return algebra_; }
  /// Slots of basis tensor x in degree n.
  std::vector<std::size_t> digits(int n, std::size_t x) const;
  std::size_t encode(const std::vector<std::size_t>& digits) const;

 private:
  std::size_t power(int k) const { return powers_[static_cast<std::size_t>(k)]; }
  void add_face(int n, int i, std::size_t x, const Rational& sign, std::vector<Entry>& raw) const;
  Matrix faces(int n, int count) const;

  FiniteAlgebra algebra_;
  int truncation_;
  bool signed_;
  std::vector<std::size_t> powers_;
};

struct HochschildOptions {
  Normalization mode = Normalization::Normalized;
  std::size_t budget = default_tensor_budget;
  bool representatives = false;
};

/// HH_n(A) for n in [from, to], over the algebra's domain.
HomologyResult hh(const FiniteAlgebra& algebra, int from, int to, HochschildOptions options = {});

/// b' h + h b' = id on C_n for n in [0, max_degree]; the module needs
/// truncation > max_degree. Throws NoUnitStructure.
IdentityReport bprime_homotopy_check(const SimplicialModule& m, int max_degree);

struct PipelineComparison {
  int max_degree = 0;
  std::size_t entries_compared = 0;
  std::vector<std::size_t> betti_hochschild;
  std::vector<std::size_t> betti_cyclic_bar;
};

/// Compares the unnormalized boundaries of the Hochschild complex of K[G]
/// with those of the linearized cyclic bar construction, d_1..d_max, and
/// their Betti numbers in degrees 0..max-1. Throws MatrixMismatch.
PipelineComparison hh_vs_cyclic_bar(const FiniteGroup& group, int max_degree, ScalarDomain dom);

}  // namespace cyclix
