#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "cyclix/scalar_domain.hpp"
#include "cyclix/sparse.hpp"

namespace cyclix {

/// Matrix over a ScalarDomain with sparse column storage. Semantics are those
/// of a dense rows x cols matrix; entries are always reduced into the domain.
class Matrix {
 public:
  Matrix(ScalarDomain dom, std::size_t rows, std::size_t cols);

  static Matrix identity(ScalarDomain dom, std::size_t n);
  static Matrix from_dense(ScalarDomain dom, const std::vector<std::vector<Rational>>& rows);
  /// Convenience for literals in tests and presets.
  static Matrix from_rows(ScalarDomain dom, const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix from_columns(ScalarDomain dom, std::size_t rows, std::vector<SparseVec> columns);
  /// Kronecker product; the basis of the result is (i, j) -> i * b.rows() + j.
  static Matrix kron(const Matrix& a, const Matrix& b);

  const ScalarDomain& domain() const noexcept { return dom_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }

  const SparseVec& column(std::size_t j) const { return columns_[j]; }
  void set_column(std::size_t j, SparseVec column);
  Rational at(std::size_t i, std::size_t j) const;

  std::size_t nonzeros() const;
  bool is_zero() const;
  Matrix transpose() const;
  /// Row vectors as sparse vectors over column indices.
  std::vector<SparseVec> row_vectors() const;
  SparseVec apply(const SparseVec& v) const;
  Matrix scaled(const Rational& a) const;
  /// Same entries reduced into another domain (e.g. integer matrices viewed over Q or F_p).
  Matrix in_domain(ScalarDomain dom) const;
  std::vector<std::vector<Rational>> to_dense() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  ScalarDomain dom_;
  std::size_t rows_;
  std::vector<SparseVec> columns_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Collects (row, col, value) contributions; duplicates are summed on build().
class MatrixBuilder {
 public:
  MatrixBuilder(ScalarDomain dom, std::size_t rows, std::size_t cols);

  void add(std::size_t row, std::size_t col, const Rational& value);
  void add_column(std::size_t col, const SparseVec& v, std::size_t row_offset = 0, const Rational& scale = 1);
  void add_block(std::size_t row_offset, std::size_t col_offset, const Matrix& block, const Rational& scale = 1);
  Matrix build() &&;

 private:
  ScalarDomain dom_;
  std::size_t rows_;
  std::vector<std::vector<Entry>> columns_;
};

}  // namespace cyclix
