#include "cyclix/smith.hpp"

#include <utility>

#include "cyclix/error.hpp"

namespace cyclix {
namespace {

using Dense = std::vector<std::vector<mpz_class>>;

Dense to_dense_integers(const Matrix& m) {
  Dense a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (const auto& e : m.column(j)) {
      if (!e.value.is_integer()) throw Error(Errc::DomainNotField, "Smith normal form needs integer entries");
      a[e.index][j] = e.value.numerator();
    }
  }
  return a;
}

Dense identity(std::size_t n) {
  Dense d(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

class SmithReducer {
 public:
  SmithReducer(Dense a, std::size_t cols, bool track) : a_(std::move(a)), rows_(a_.size()), cols_(cols), track_(track) {
    if (track_) {
      left_ = identity(rows_);
      right_ = identity(cols_);
    }
  }

  void run() {
    const std::size_t steps = std::min(rows_, cols_);
    for (std::size_t t = 0; t < steps; ++t) {
      if (!move_min_to(t)) break;
      for (;;) {
        if (!clear_column(t)) continue;
        if (!clear_row(t)) continue;
        if (fix_divisibility(t)) break;
      }
      if (a_[t][t] < 0) {
        negate_row(t);
      }
    }
  }

  std::vector<mpz_class> diagonal() const {
    std::vector<mpz_class> d(std::min(rows_, cols_));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = a_[i][i];
    return d;
  }

  Dense& left() { return left_; }
  Dense& right() { return right_; }

 private:
  bool move_min_to(std::size_t t) {
    std::size_t bi = rows_, bj = cols_;
    mpz_class best;
    for (std::size_t i = t; i < rows_; ++i) {
      for (std::size_t j = t; j < cols_; ++j) {
        if (a_[i][j] == 0) continue;
        mpz_class mag = abs(a_[i][j]);
        if (bi == rows_ || mag < best) {
          best = mag;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == rows_) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Returns true once everything below the pivot is zero.
  bool clear_column(std::size_t t) {
    for (std::size_t i = t + 1; i < rows_; ++i) {
      if (a_[i][t] == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a_[i][t].get_mpz_t(), a_[t][t].get_mpz_t());
      add_row_multiple(i, t, -q);
      if (a_[i][t] != 0) {
        swap_rows(t, i);
        return false;
      }
    }
    return true;
  }

  bool clear_row(std::size_t t) {
    for (std::size_t j = t + 1; j < cols_; ++j) {
      if (a_[t][j] == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a_[t][j].get_mpz_t(), a_[t][t].get_mpz_t());
      add_col_multiple(j, t, -q);
      if (a_[t][j] != 0) {
        swap_cols(t, j);
        return false;
      }
    }
    return true;
  }

  // Pivot must divide the remaining block; otherwise fold the offending row in.
  bool fix_divisibility(std::size_t t) {
    for (std::size_t i = t + 1; i < rows_; ++i) {
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (mpz_divisible_p(a_[i][j].get_mpz_t(), a_[t][t].get_mpz_t()) == 0) {
          add_row_multiple(t, i, 1);
          return false;
        }
      }
    }
    return true;
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    std::swap(a_[i], a_[k]);
    if (track_) std::swap(left_[i], left_[k]);
  }

  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (auto& row : a_) std::swap(row[j], row[k]);
    if (track_) {
      for (auto& row : right_) std::swap(row[j], row[k]);
    }
  }

  // row_i += c * row_k
  void add_row_multiple(std::size_t i, std::size_t k, const mpz_class& c) {
    for (std::size_t j = 0; j < cols_; ++j) a_[i][j] += c * a_[k][j];
    if (track_) {
      for (std::size_t j = 0; j < rows_; ++j) left_[i][j] += c * left_[k][j];
    }
  }

  // col_j += c * col_k
  void add_col_multiple(std::size_t j, std::size_t k, const mpz_class& c) {
    for (std::size_t i = 0; i < rows_; ++i) a_[i][j] += c * a_[i][k];
    if (track_) {
      for (std::size_t i = 0; i < cols_; ++i) right_[i][j] += c * right_[i][k];
    }
  }

  void negate_row(std::size_t t) {
    for (auto& x : a_[t]) x = -x;
    if (track_) {
      for (auto& x : left_[t]) x = -x;
    }
  }

  Dense a_;
  std::size_t rows_;
  std::size_t cols_;
  bool track_;
  Dense left_;
  Dense right_;
};

Matrix to_matrix(const Dense& d, std::size_t rows, std::size_t cols) {
  std::vector<std::vector<Rational>> r(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) r[i][j] = Rational(d[i][j]);
  }
  if (rows == 0 || cols == 0) return Matrix(ScalarDomain::integers(), rows, cols);
  return Matrix::from_dense(ScalarDomain::integers(), r);
}

}  // namespace

SmithForm smith_normal_form(const Matrix& m) {
  SmithReducer reducer(to_dense_integers(m), m.cols(), true);
  reducer.run();
  SmithForm out{reducer.diagonal(), 0, to_matrix(reducer.left(), m.rows(), m.rows()),
                to_matrix(reducer.right(), m.cols(), m.cols())};
  for (const auto& d : out.diagonal) out.rank += d != 0 ? 1 : 0;
  return out;
}

std::vector<mpz_class> smith_invariants(const Matrix& m) {
  SmithReducer reducer(to_dense_integers(m), m.cols(), false);
  reducer.run();
  return reducer.diagonal();
}

}  // namespace cyclix
