#pragma once

#include <cstddef>
#include <vector>

#include "cyclix/algebra.hpp"
#include "cyclix/chain_complex.hpp"
#include "cyclix/homology.hpp"
#include "cyclix/linalg.hpp"

namespace cyclix {

/// Quotient of dom^ambient by a relation subspace. The quotient basis is the
/// set of non-pivot coordinates of the reduced echelon form of the relations,
/// in increasing order. Invariant: projection * section = id.
class PresentedModule {
 public:
  /// Throws DomainNotField.
  PresentedModule(ScalarDomain dom, std::size_t ambient, const std::vector<SparseVec>& relations);

  const ScalarDomain& domain() const noexcept { return relations_.domain(); }
  std::size_t ambient() const noexcept { return relations_.ambient(); }
  std::size_t dim() const noexcept { return generators_.size(); }
  const SubspaceBasis& relations() const noexcept { return relations_; }
  /// Ambient coordinate of each quotient basis vector.
  const std::vector<std::size_t>& generators() const noexcept { return generators_; }
  /// dim x ambient.
  const Matrix& projection() const noexcept { return projection_; }
  /// ambient x dim; sends quotient basis vector k to the unit vector at generators()[k].
  const Matrix& section() const noexcept { return section_; }
  SparseVec project(const SparseVec& v) const { return projection_.apply(v); }

 private:
  SubspaceBasis relations_;
  std::vector<std::size_t> generators_;
  Matrix projection_;
  Matrix section_;
};

/// Omega^n_A presented on A^{(x) n+1}, the tensor (a_0, .., a_n) standing for
/// a_0 da_1 .. da_n, with the Hochschild basis order. Relations: the Leibniz
/// rule in each slot k >= 1 and the alternating rule on adjacent slots
/// (x, x) and (x, y) + (y, x). Omega^0 = A. Throws NotCommutative,
/// BudgetExceeded (d^{n+1} > budget).
PresentedModule omega_power(const FiniteAlgebra& algebra, int n, std::size_t budget = std::size_t{1} << 20);
PresentedModule kaehler_one(const FiniteAlgebra& algebra);

/// Omega^0 .. Omega^top of a commutative algebra with the de Rham
/// differential, the module action and the wedge product on quotient coordinates.
class DifferentialForms {
 public:
  /// Throws NotCommutative, BudgetExceeded, and RelationFailure if d does not
  /// send relations to relations.
  DifferentialForms(FiniteAlgebra algebra, int top, std::size_t budget = std::size_t{1} << 20);

  const FiniteAlgebra& algebra() const noexcept { return algebra_; }
  int top() const noexcept { return static_cast<int>(forms_.size()) - 1; }
  /// Throws RangeExceedsComplex.
  const PresentedModule& omega(int n) const;
  /// d : Omega^n -> Omega^{n+1}, n < top.
  const Matrix& d(int n) const;
  /// Multiplication by basis element i of A on Omega^n.
  Matrix action(int n, std::size_t i) const;
  /// omega in Omega^p, eta in Omega^q, p + q <= top.
  SparseVec wedge(int p, const SparseVec& omega, int q, const SparseVec& eta) const;

 private:
  FiniteAlgebra algebra_;
  std::vector<PresentedModule> forms_;
  std::vector<Matrix> d_;
};

struct DeRhamResult {
  /// Cochain complex Omega^0 -> .. -> Omega^{top+1} as a chain complex in
  /// degrees -(top+1)..0, so H^n = H_{-n}.
  ChainComplex complex;
  /// Degrees 0..top, relabelled to cohomological degree.
  HomologyResult cohomology;
};

/// H^n for n in [0, top]. Throws NotCommutative.
DeRhamResult derham(const FiniteAlgebra& algebra, int top, std::size_t budget = std::size_t{1} << 20);

/// pi_n : A^{(x) n+1} -> Omega^n, (a_0, .., a_n) -> a_0 da_1 .. da_n.
/// Throws NotCommutative.
Matrix hkr_pi(const FiniteAlgebra& algebra, int n, const PresentedModule& omega_n);

/// epsilon_n : Omega^n -> A^{(x) n+1}, the antisymmetrization
/// (1/n!) sum sgn(s) (a_0, a_s(1), .., a_s(n)) on quotient basis vectors.
/// Throws PositiveCharacteristic, DomainNotField, NotCommutative.
Matrix hkr_epsilon(const FiniteAlgebra& algebra, int n, const PresentedModule& omega_n);

struct HkrDegree {
  int degree = 0;
  std::size_t omega_dim = 0;
  std::size_t hh_betti = 0;
  /// pi eps = id as matrices.
  bool pi_eps_identity = false;
  /// b eps = 0.
  bool eps_cycles = false;
  /// pi b = 0.
  bool pi_kills_boundaries = false;
  /// eps pi induces the identity on HH_n.
  bool eps_pi_identity = false;
  bool isomorphism() const { return pi_eps_identity && eps_pi_identity && omega_dim == hh_betti; }
};

struct HkrReport {
  std::vector<HkrDegree> degrees;
  /// pi eps = id, eps lands in cycles and pi kills boundaries in every degree.
  bool passed() const;
};

/// Degrees 0..max_degree over the unnormalized Hochschild complex.
/// Throws PositiveCharacteristic, DomainNotField, NotCommutative.
HkrReport hkr_check(const FiniteAlgebra& algebra, int max_degree, std::size_t budget = std::size_t{1} << 20);

}  // namespace cyclix
