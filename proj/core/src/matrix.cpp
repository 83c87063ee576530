#include "cyclix/matrix.hpp"

#include <ostream>

#include "cyclix/error.hpp"

namespace cyclix {
namespace {

void require_same_domain(const Matrix& a, const Matrix& b, const char* op) {
  if (a.domain() != b.domain()) {
    throw Error(Errc::DimensionMismatch, std::string(op) + ": domains " + a.domain().name() + " and " +
                                             b.domain().name() + " differ");
  }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  require_same_domain(a, b, op);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::DimensionMismatch, std::string(op) + ": shapes " + std::to_string(a.rows()) + "x" +
                                             std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                                             std::to_string(b.cols()));
  }
}

}  // namespace

Matrix::Matrix(ScalarDomain dom, std::size_t rows, std::size_t cols) : dom_(dom), rows_(rows), columns_(cols) {}

Matrix Matrix::identity(ScalarDomain dom, std::size_t n) {
  Matrix m(dom, n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i] = unit_vector(i);
  return m;
}

Matrix Matrix::from_dense(ScalarDomain dom, const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(dom, r, c);
  for (std::size_t j = 0; j < c; ++j) {
    std::vector<Entry> col;
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw Error(Errc::DimensionMismatch, "ragged dense matrix");
      if (!rows[i][j].is_zero()) col.push_back({i, rows[i][j]});
    }
    m.columns_[j] = canonicalize(std::move(col), dom);
  }
  return m;
}

Matrix Matrix::from_rows(ScalarDomain dom, const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<std::vector<Rational>> dense;
  dense.reserve(rows.size());
  for (const auto& row : rows) dense.emplace_back(row.begin(), row.end());
  return from_dense(dom, dense);
}

Matrix Matrix::from_columns(ScalarDomain dom, std::size_t rows, std::vector<SparseVec> columns) {
  Matrix m(dom, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, std::move(columns[j]));
  return m;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  require_same_domain(a, b, "kron");
  Matrix m(a.dom_, a.rows_ * b.rows_, a.cols() * b.cols());
  for (std::size_t ja = 0; ja < a.cols(); ++ja) {
    for (std::size_t jb = 0; jb < b.cols(); ++jb) {
      SparseVec col;
      col.reserve(a.columns_[ja].size() * b.columns_[jb].size());
      for (const auto& ea : a.columns_[ja]) {
        for (const auto& eb : b.columns_[jb]) {
          col.push_back({ea.index * b.rows_ + eb.index, a.dom_.mul(ea.value, eb.value)});
        }
      }
      m.columns_[ja * b.cols() + jb] = std::move(col);
    }
  }
  return m;
}

void Matrix::set_column(std::size_t j, SparseVec column) {
  for (const auto& e : column) {
    if (e.index >= rows_) throw Error(Errc::DimensionMismatch, "column entry outside matrix");
  }
  columns_[j] = canonicalize(std::move(column), dom_);
}

Rational Matrix::at(std::size_t i, std::size_t j) const { return get(columns_[j], i); }

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

bool Matrix::is_zero() const {
  for (const auto& c : columns_) {
    if (!c.empty()) return false;
  }
  return true;
}

std::vector<SparseVec> Matrix::row_vectors() const {
  std::vector<SparseVec> rows(rows_);
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const auto& e : columns_[j]) rows[e.index].push_back({j, e.value});
  }
  return rows;
}

Matrix Matrix::transpose() const {
  Matrix t(dom_, cols(), rows_);
  t.columns_ = row_vectors();
  return t;
}

SparseVec Matrix::apply(const SparseVec& v) const {
  Accumulator acc(rows_);
  for (const auto& e : v) {
    if (e.index >= cols()) throw Error(Errc::DimensionMismatch, "vector longer than matrix width");
    acc.add_scaled(columns_[e.index], e.value);
  }
  return acc.take(dom_);
}

Matrix Matrix::scaled(const Rational& a) const {
  Matrix m(dom_, rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j) m.columns_[j] = cyclix::scaled(columns_[j], a, dom_);
  return m;
}

Matrix Matrix::in_domain(ScalarDomain dom) const {
  Matrix m(dom, rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j) m.columns_[j] = canonicalize(columns_[j], dom);
  return m;
}

std::vector<std::vector<Rational>> Matrix::to_dense() const {
  std::vector<std::vector<Rational>> d(rows_, std::vector<Rational>(cols()));
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& e : columns_[j]) d[e.index][j] = e.value;
  }
  return d;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_domain(a, b, "multiply");
  if (a.cols() != b.rows()) {
    throw Error(Errc::DimensionMismatch, "multiply: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                             " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix m(a.dom_, a.rows(), b.cols());
  Accumulator acc(a.rows());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (const auto& e : b.columns_[j]) acc.add_scaled(a.columns_[e.index], e.value);
    m.columns_[j] = acc.take(a.dom_);
  }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "add");
  Matrix m = a;
  for (std::size_t j = 0; j < a.cols(); ++j) axpy(m.columns_[j], Rational(1), b.columns_[j], a.dom_);
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "subtract");
  Matrix m = a;
  for (std::size_t j = 0; j < a.cols(); ++j) axpy(m.columns_[j], Rational(-1), b.columns_[j], a.dom_);
  return m;
}

Matrix operator-(const Matrix& a) { return a.scaled(Rational(-1)); }

bool operator==(const Matrix& a, const Matrix& b) {
  return a.dom_ == b.dom_ && a.rows_ == b.rows_ && a.columns_ == b.columns_;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  const auto d = m.to_dense();
  os << "[";
  for (std::size_t i = 0; i < d.size(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < d[i].size(); ++j) os << (j ? " " : "") << d[i][j];
  }
  return os << "] (" << m.rows() << "x" << m.cols() << " over " << m.domain().name() << ")";
}

MatrixBuilder::MatrixBuilder(ScalarDomain dom, std::size_t rows, std::size_t cols)
    : dom_(dom), rows_(rows), columns_(cols) {}

void MatrixBuilder::add(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_ || col >= columns_.size()) throw Error(Errc::DimensionMismatch, "builder entry out of range");
  if (!value.is_zero()) columns_[col].push_back({row, value});
}

void MatrixBuilder::add_column(std::size_t col, const SparseVec& v, std::size_t row_offset, const Rational& scale) {
  for (const auto& e : v) add(e.index + row_offset, col, scale * e.value);
}

void MatrixBuilder::add_block(std::size_t row_offset, std::size_t col_offset, const Matrix& block,
                              const Rational& scale) {
  for (std::size_t j = 0; j < block.cols(); ++j) add_column(col_offset + j, block.column(j), row_offset, scale);
}

Matrix MatrixBuilder::build() && {
  std::vector<SparseVec> cols;
  cols.reserve(columns_.size());
  for (auto& c : columns_) cols.push_back(canonicalize(std::move(c), dom_));
  Matrix m(dom_, rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, std::move(cols[j]));
  return m;
}

}  // namespace cyclix
