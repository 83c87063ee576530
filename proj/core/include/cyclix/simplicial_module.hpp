#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cyclix/chain_complex.hpp"
#include "cyclix/simplicial_set.hpp"

namespace cyclix {

/// Truncated simplicial module with based free modules C_0..C_N. Operator
/// matrices are produced on demand. The cyclic operator, when present, is
/// either the plain t (cyclic_signed() false) or t~ = (-1)^n t.
class SimplicialModule {
 public:
  virtual ~SimplicialModule() = default;

  virtual std::string name() const = 0;
  virtual const ScalarDomain& domain() const = 0;
  virtual int truncation() const = 0;
  virtual std::size_t rank(int n) const = 0;
  /// d_i : C_n -> C_{n-1}, 1 <= n <= N.
  virtual Matrix face(int n, int i) const = 0;
  /// s_j : C_n -> C_{n+1}, 0 <= n < N.
  virtual Matrix degeneracy(int n, int j) const = 0;
  virtual bool has_cyclic() const { return false; }
  virtual bool cyclic_signed() const { return false; }
  /// Throws NotCyclic by default.
  virtual Matrix cyclic(int n) const;
  /// sum (-1)^i d_i.
  virtual Matrix boundary(int n) const;
  /// sum_{i<n} (-1)^i d_i.
  virtual Matrix bprime(int n) const;
  /// Extra degeneracy C_n -> C_{n+1} with b' h + h b' = id; t_{n+1} s_n
  /// (unsigned t) by default. Throws NoUnitStructure without a cyclic operator.
  virtual Matrix extra_degeneracy(int n) const;
  /// t~_n = (-1)^n t_n, whatever the stored convention.
  Matrix signed_cyclic(int n) const;
};

using ModulePtr = std::shared_ptr<const SimplicialModule>;

/// Free module on a simplicial set; the basis in degree n is the enumeration order.
class LinearizedModule final : public SimplicialModule {
 public:
  LinearizedModule(SpecPtr spec, ScalarDomain dom, bool signed_cyclic = false);

  std::string name() const override { return spec_->name; }
  const ScalarDomain& domain() const override { return dom_; }
  int truncation() const override { return spec_->truncation; }
  std::size_t rank(int n) const override { return basis(n).size(); }
  Matrix face(int n, int i) const override;
  Matrix degeneracy(int n, int j) const override;
  bool has_cyclic() const override { return spec_->is_cyclic(); }
  bool cyclic_signed() const override { return signed_; }
  Matrix cyclic(int n) const override;

  const SimplexIndex& basis(int n) const;
  const SpecPtr& spec() const noexcept { return spec_; }

 private:
  template <class Op>
  Matrix operator_matrix(int from, int to, Op op, const Rational& sign) const;

  SpecPtr spec_;
  ScalarDomain dom_;
  bool signed_;
  std::vector<SimplexIndex> bases_;
};

/// Quotient by the degenerate submodule D_n = sum_j im s_j.
/// projection : C_n -> C_n / D_n and section : C_n / D_n -> C_n with
/// projection * section = id. The quotient basis is the set of non-pivot
/// coordinates of the reduced echelon form of D_n.
struct Normalizer {
  Matrix projection;
  Matrix section;
};

/// Over the integers the degenerate submodule must be spanned by basis
/// vectors up to units; otherwise throws DomainNotField.
Normalizer normalizer(const SimplicialModule& m, int n);

enum class Normalization { Unnormalized, Normalized };

/// Chain complex in degrees 0..N (top not exact), boundary sum (-1)^i d_i,
/// restricted to the normalized quotient when requested.
ChainComplex chain_complex(const SimplicialModule& m, Normalization mode);

/// Matrix versions of the simplicial relations, and of the cyclic relations
/// in the module's convention. Throws CyclicModeOnNonCyclic.
IdentityReport check_module_identities(const SimplicialModule& m, IdentityMode mode);

/// Degreewise tensor product C_n (x) D_n, basis index i * rank D_n + j.
class TensorModule final : public SimplicialModule {
 public:
  /// Throws TruncationMismatch or DimensionMismatch (domains).
  TensorModule(ModulePtr left, ModulePtr right);

  std::string name() const override { return left_->name() + " (x) " + right_->name(); }
  const ScalarDomain& domain() const override { return left_->domain(); }
  int truncation() const override { return left_->truncation(); }
  std::size_t rank(int n) const override { return left_->rank(n) * right_->rank(n); }
  Matrix face(int n, int i) const override { return Matrix::kron(left_->face(n, i), right_->face(n, i)); }
  Matrix degeneracy(int n, int j) const override {
    return Matrix::kron(left_->degeneracy(n, j), right_->degeneracy(n, j));
  }

 private:
  ModulePtr left_;
  ModulePtr right_;
};

}  // namespace cyclix
