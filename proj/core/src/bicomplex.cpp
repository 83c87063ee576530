#include "cyclix/bicomplex.hpp"

#include "cyclix/error.hpp"

namespace cyclix {

void Bicomplex::set_cell(int p, int q, std::size_t rank) { ranks_[{p, q}] = rank; }

std::size_t Bicomplex::rank(int p, int q) const {
  const auto it = ranks_.find({p, q});
  return it == ranks_.end() ? 0 : it->second;
}

void Bicomplex::set_horizontal(int p, int q, Matrix m) {
  if (m.rows() != rank(p - 1, q) || m.cols() != rank(p, q) || m.domain() != dom_) {
    throw Error(Errc::DimensionMismatch, "horizontal map at (" + std::to_string(p) + "," + std::to_string(q) + ")");
  }
  horizontal_.insert_or_assign({p, q}, std::move(m));
}

void Bicomplex::set_vertical(int p, int q, Matrix m) {
  if (m.rows() != rank(p, vertical_target(q)) || m.cols() != rank(p, q) || m.domain() != dom_) {
    throw Error(Errc::DimensionMismatch, "vertical map at (" + std::to_string(p) + "," + std::to_string(q) + ")");
  }
  vertical_.insert_or_assign({p, q}, std::move(m));
}

Matrix Bicomplex::horizontal(int p, int q) const {
  const auto it = horizontal_.find({p, q});
  if (it != horizontal_.end()) return it->second;
  return Matrix(dom_, rank(p - 1, q), rank(p, q));
}

Matrix Bicomplex::vertical(int p, int q) const {
  const auto it = vertical_.find({p, q});
  if (it != vertical_.end()) return it->second;
  return Matrix(dom_, rank(p, vertical_target(q)), rank(p, q));
}

std::vector<Cell> Bicomplex::cells() const {
  std::vector<Cell> out;
  for (const auto& [c, r] : ranks_) out.push_back(c);
  return out;
}

Bicomplex Bicomplex::with_column_signs() const {
  Bicomplex b = *this;
  for (auto& [cell, m] : b.vertical_) {
    if (cell.first % 2 != 0) m = -m;
  }
  return b;
}

Totalization total_complex(const Bicomplex& b, int lo, int hi, bool top_exact) {
  if (hi < lo) throw Error(Errc::DimensionMismatch, "empty total degree range");
  for (const Cell& c : b.cells()) {
    const auto [p, q] = c;
    const int q2 = b.vertical_target(q);
    if (!b.has_cell(p - 1, q2)) continue;
    const Matrix anti = b.vertical(p - 1, q) * b.horizontal(p, q) + b.horizontal(p, q2) * b.vertical(p, q);
    if (!anti.is_zero()) {
      throw Error(Errc::SignCheckFailed, "square at (" + std::to_string(p) + "," + std::to_string(q) + ") does not anticommute");
    }
  }
  const int degrees = hi - lo + 1;
  std::vector<std::vector<Cell>> layout(static_cast<std::size_t>(degrees));
  Totalization out{ChainComplex(b.domain(), 0, {0}, {}), {}};
  std::vector<std::size_t> ranks(static_cast<std::size_t>(degrees), 0);
  for (const Cell& c : b.cells()) {
    const int n = b.total_degree(c.first, c.second);
    if (n < lo || n > hi) continue;
    auto& r = ranks[static_cast<std::size_t>(n - lo)];
    out.offset[c] = r;
    r += b.rank(c.first, c.second);
    layout[static_cast<std::size_t>(n - lo)].push_back(c);
  }
  const Rational vsign = b.variance() == Variance::Homological ? Rational(1) : Rational(-1);
  std::vector<Matrix> ds;
  for (int n = lo + 1; n <= hi; ++n) {
    MatrixBuilder d(b.domain(), ranks[static_cast<std::size_t>(n - 1 - lo)], ranks[static_cast<std::size_t>(n - lo)]);
    for (const Cell& c : layout[static_cast<std::size_t>(n - lo)]) {
      const auto [p, q] = c;
      const std::size_t col = out.offset.at(c);
      if (b.has_cell(p - 1, q)) d.add_block(out.offset.at({p - 1, q}), col, b.horizontal(p, q));
      const Cell v{p, b.vertical_target(q)};
      if (b.has_cell(v.first, v.second)) d.add_block(out.offset.at(v), col, b.vertical(p, q), vsign);
    }
    ds.push_back(std::move(d).build());
  }
  out.complex = ChainComplex(b.domain(), lo, std::move(ranks), std::move(ds), top_exact);
  return out;
}

}  // namespace cyclix
