#include "cyclix/simplicial_module.hpp"

#include "cyclix/error.hpp"
#include "cyclix/linalg.hpp"

namespace cyclix {

Matrix SimplicialModule::cyclic(int) const { throw Error(Errc::NotCyclic, name() + " has no cyclic operator"); }

Matrix SimplicialModule::boundary(int n) const {
  MatrixBuilder b(domain(), n == 0 ? 0 : rank(n - 1), rank(n));
  for (int i = 0; n > 0 && i <= n; ++i) b.add_block(0, 0, face(n, i), i % 2 == 0 ? 1 : -1);
  return std::move(b).build();
}

Matrix SimplicialModule::bprime(int n) const {
  MatrixBuilder b(domain(), n == 0 ? 0 : rank(n - 1), rank(n));
  for (int i = 0; n > 0 && i < n; ++i) b.add_block(0, 0, face(n, i), i % 2 == 0 ? 1 : -1);
  return std::move(b).build();
}

Matrix SimplicialModule::extra_degeneracy(int n) const {
  if (!has_cyclic()) throw Error(Errc::NoUnitStructure, name() + " has neither a unit nor a cyclic operator");
  Matrix t = cyclic(n + 1);
  if (cyclic_signed() && (n + 1) % 2 == 1) t = -t;
  return t * degeneracy(n, n);
}

Matrix SimplicialModule::signed_cyclic(int n) const {
  Matrix t = cyclic(n);
  if (!cyclic_signed() && n % 2 == 1) return -t;
  return t;
}

LinearizedModule::LinearizedModule(SpecPtr spec, ScalarDomain dom, bool signed_cyclic)
    : spec_(std::move(spec)), dom_(dom), signed_(signed_cyclic) {
  for (int n = 0; n <= spec_->truncation; ++n) bases_.emplace_back(spec_->elements(n));
}

const SimplexIndex& LinearizedModule::basis(int n) const {
  if (n < 0 || n > spec_->truncation) throw Error(Errc::RangeExceedsComplex, "degree " + std::to_string(n) + " beyond truncation");
  return bases_[static_cast<std::size_t>(n)];
}

template <class Op>
Matrix LinearizedModule::operator_matrix(int from, int to, Op op, const Rational& sign) const {
  const SimplexIndex& src = basis(from);
  const SimplexIndex& tgt = basis(to);
  Matrix m(dom_, tgt.size(), src.size());
  const Rational s = dom_.reduce(sign);
  for (std::size_t k = 0; k < src.size(); ++k) m.set_column(k, SparseVec{{tgt.position(op(src.at(k))), s}});
  return m;
}

Matrix LinearizedModule::face(int n, int i) const {
  return operator_matrix(n, n - 1, [&](const Simplex& x) { return spec_->face(n, i, x); }, 1);
}

Matrix LinearizedModule::degeneracy(int n, int j) const {
  return operator_matrix(n, n + 1, [&](const Simplex& x) { return spec_->degeneracy(n, j, x); }, 1);
}

Matrix LinearizedModule::cyclic(int n) const {
  if (!spec_->is_cyclic()) throw Error(Errc::NotCyclic, spec_->name + " has no cyclic operator");
  return operator_matrix(n, n, [&](const Simplex& x) { return spec_->cyclic(n, x); },
                         signed_ && n % 2 == 1 ? -1 : 1);
}

Normalizer normalizer(const SimplicialModule& m, int n) {
  const ScalarDomain& dom = m.domain();
  const ScalarDomain work = dom.is_field() ? dom : ScalarDomain::rationals();
  const std::size_t dim = m.rank(n);
  EchelonBasis degenerate(work, dim);
  for (int j = 0; n > 0 && j < n; ++j) {
    const Matrix s = m.degeneracy(n - 1, j).in_domain(work);
    for (std::size_t c = 0; c < s.cols(); ++c) degenerate.insert(s.column(c));
  }
  const std::vector<SparseVec> rows = degenerate.reduced_rows();
  std::vector<char> pivot(dim, 0);
  for (const auto& r : rows) pivot[r.front().index] = 1;
  std::vector<std::size_t> quotient_index(dim, 0);
  std::size_t q = 0;
  for (std::size_t k = 0; k < dim; ++k) {
    if (!pivot[k]) quotient_index[k] = q++;
  }
  // e_pivot = -(rest of its row) modulo D; free coordinates map to themselves.
  std::vector<SparseVec> proj_cols(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    if (!pivot[k]) proj_cols[k] = SparseVec{{quotient_index[k], 1}};
  }
  for (const auto& r : rows) {
    std::vector<Entry> col;
    for (std::size_t e = 1; e < r.size(); ++e) col.push_back({quotient_index[r[e].index], -r[e].value});
    proj_cols[r.front().index] = canonicalize(std::move(col), work);
  }
  std::vector<SparseVec> sec_cols;
  for (std::size_t k = 0; k < dim; ++k) {
    if (!pivot[k]) sec_cols.push_back(SparseVec{{k, 1}});
  }
  Matrix projection = Matrix::from_columns(work, q, std::move(proj_cols));
  Matrix section = Matrix::from_columns(work, dim, std::move(sec_cols));
  if (!dom.is_field()) {
    for (std::size_t c = 0; c < projection.cols(); ++c) {
      for (const auto& e : projection.column(c)) {
        if (!e.value.is_integer()) {
          throw Error(Errc::DomainNotField, "degenerate submodule is not a coordinate summand over the integers");
        }
      }
    }
  }
  return {projection.in_domain(dom), section.in_domain(dom)};
}

ChainComplex chain_complex(const SimplicialModule& m, Normalization mode) {
  const int N = m.truncation();
  std::vector<std::size_t> ranks;
  std::vector<Matrix> ds;
  if (mode == Normalization::Unnormalized) {
    for (int n = 0; n <= N; ++n) ranks.push_back(m.rank(n));
    for (int n = 1; n <= N; ++n) ds.push_back(m.boundary(n));
  } else {
    std::vector<Normalizer> norms;
    for (int n = 0; n <= N; ++n) {
      norms.push_back(normalizer(m, n));
      ranks.push_back(norms.back().projection.rows());
    }
    for (int n = 1; n <= N; ++n) {
      ds.push_back(norms[static_cast<std::size_t>(n - 1)].projection * m.boundary(n) *
                   norms[static_cast<std::size_t>(n)].section);
    }
  }
  return ChainComplex(m.domain(), 0, std::move(ranks), std::move(ds), false);
}

namespace {

void record_matrix(IdentityReport& report, const std::string& relation, int degree, const Matrix& lhs,
                   const Matrix& rhs, const std::string& instance) {
  report.record(relation, lhs == rhs, degree, [&] {
    const Matrix diff = lhs - rhs;
    return instance + ": " + std::to_string(diff.nonzeros()) + " entries differ";
  });
}

std::string op(const char* name, int index) { return std::string(name) + "_" + std::to_string(index); }

}  // namespace

IdentityReport check_module_identities(const SimplicialModule& m, IdentityMode mode) {
  const bool cyclic = mode == IdentityMode::Cyclic;
  if (cyclic && !m.has_cyclic()) throw Error(Errc::CyclicModeOnNonCyclic, m.name() + " has no cyclic operator");
  const bool sgn = m.cyclic_signed();
  const int N = m.truncation();
  IdentityReport report;
  report.subject = m.name();
  const auto at = [](const std::vector<Matrix>& v, int k) -> const Matrix& { return v[static_cast<std::size_t>(k)]; };
  for (int n = 0; n <= N; ++n) {
    std::vector<Matrix> d, s;
    for (int i = 0; n >= 1 && i <= n; ++i) d.push_back(m.face(n, i));
    for (int j = 0; n + 1 <= N && j <= n; ++j) s.push_back(m.degeneracy(n, j));
    std::vector<Matrix> d_below, s_above;
    for (int i = 0; n >= 2 && i <= n - 1; ++i) d_below.push_back(m.face(n - 1, i));
    for (int j = 0; n + 2 <= N && j <= n + 1; ++j) s_above.push_back(m.degeneracy(n + 1, j));
    for (int j = 1; n >= 2 && j <= n; ++j) {
      for (int i = 0; i < j; ++i) {
        record_matrix(report, "d_i d_j = d_{j-1} d_i", n, at(d_below, i) * at(d, j), at(d_below, j - 1) * at(d, i),
                      op("d", i) + op("d", j) + " on degree " + std::to_string(n));
      }
    }
    for (int j = 0; n + 2 <= N && j <= n; ++j) {
      for (int i = 0; i <= j; ++i) {
        record_matrix(report, "s_i s_j = s_{j+1} s_i", n, at(s_above, i) * at(s, j), at(s_above, j + 1) * at(s, i),
                      op("s", i) + op("s", j) + " on degree " + std::to_string(n));
      }
    }
    if (n + 1 <= N) {
      std::vector<Matrix> d_up;
      for (int i = 0; i <= n + 1; ++i) d_up.push_back(m.face(n + 1, i));
      std::vector<Matrix> s_below;
      for (int j = 0; n >= 1 && j <= n - 1; ++j) s_below.push_back(m.degeneracy(n - 1, j));
      for (int j = 0; j <= n; ++j) {
        for (int i = 0; i <= n + 1; ++i) {
          const Matrix lhs = at(d_up, i) * at(s, j);
          const std::string inst = op("d", i) + op("s", j) + " on degree " + std::to_string(n);
          if (i < j) {
            record_matrix(report, "d_i s_j = s_{j-1} d_i", n + 1, lhs, at(s_below, j - 1) * at(d, i), inst);
          } else if (i == j || i == j + 1) {
            record_matrix(report, "d_i s_j = id", n + 1, lhs, Matrix::identity(m.domain(), m.rank(n)), inst);
          } else {
            record_matrix(report, "d_i s_j = s_j d_{i-1}", n + 1, lhs, at(s_below, j) * at(d, i - 1), inst);
          }
        }
      }
    }
    if (!cyclic) continue;
    const Matrix t = m.cyclic(n);
    const Rational minus = sgn ? Rational(-1) : Rational(1);
    const Rational parity = sgn && n % 2 == 1 ? Rational(-1) : Rational(1);
    if (n >= 1) {
      const Matrix t_below = m.cyclic(n - 1);
      for (int i = 1; i <= n; ++i) {
        record_matrix(report, "d_i t = t d_{i-1}", n, at(d, i) * t, (t_below * at(d, i - 1)).scaled(minus),
                      op("d", i) + "t on degree " + std::to_string(n));
      }
      record_matrix(report, "d_0 t = d_n", n, at(d, 0) * t, at(d, n).scaled(parity), "d_0t on degree " + std::to_string(n));
    }
    if (n + 1 <= N) {
      const Matrix t_above = m.cyclic(n + 1);
      for (int i = 1; i <= n; ++i) {
        record_matrix(report, "s_i t = t s_{i-1}", n, at(s, i) * t, (t_above * at(s, i - 1)).scaled(minus),
                      op("s", i) + "t on degree " + std::to_string(n));
      }
      record_matrix(report, "s_0 t = t^2 s_n", n, at(s, 0) * t, (t_above * t_above * at(s, n)).scaled(parity),
                    "s_0t on degree " + std::to_string(n));
    }
    Matrix power = t;
    for (int k = 1; k <= n; ++k) power = t * power;
    record_matrix(report, "t^{n+1} = id", n, power, Matrix::identity(m.domain(), m.rank(n)),
                  "t^{n+1} on degree " + std::to_string(n));
  }
  return report;
}

TensorModule::TensorModule(ModulePtr left, ModulePtr right) : left_(std::move(left)), right_(std::move(right)) {
  if (left_->truncation() != right_->truncation()) {
    throw Error(Errc::TruncationMismatch, "tensor factors truncated at " + std::to_string(left_->truncation()) + " and " +
                                              std::to_string(right_->truncation()));
  }
  if (left_->domain() != right_->domain()) throw Error(Errc::DimensionMismatch, "tensor factors over different domains");
}

}  // namespace cyclix
