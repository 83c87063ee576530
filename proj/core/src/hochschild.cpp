#include "cyclix/hochschild.hpp"

#include <limits>

#include "cyclix/error.hpp"
#include "cyclix/simplicial_presets.hpp"

namespace cyclix {

HochschildModule::HochschildModule(FiniteAlgebra algebra, int truncation, bool signed_cyclic, std::size_t budget)
    : algebra_(std::move(algebra)), truncation_(truncation), signed_(signed_cyclic) {
  if (truncation < 0) throw Error(Errc::TruncationTooSmall, "negative truncation");
  const std::size_t d = algebra_.dim();
  powers_.push_back(1);
  for (int k = 1; k <= truncation + 2; ++k) {
    if (powers_.back() > std::numeric_limits<std::size_t>::max() / d) {
      throw Error(Errc::BudgetExceeded, "tensor power overflows");
    }
    powers_.push_back(powers_.back() * d);
  }
  if (power(truncation + 1) > budget) {
    throw Error(Errc::BudgetExceeded, std::to_string(d) + "^" + std::to_string(truncation + 1) + " basis tensors exceed budget " +
                                          std::to_string(budget));
  }
}

std::vector<std::size_t> HochschildModule::digits(int n, std::size_t x) const {
  std::vector<std::size_t> out(static_cast<std::size_t>(n) + 1);
  const std::size_t d = algebra_.dim();
  for (std::size_t k = out.size(); k-- > 0;) {
    out[k] = x % d;
    x /= d;
  }
  return out;
}

std::size_t HochschildModule::encode(const std::vector<std::size_t>& digits) const {
  std::size_t x = 0;
  for (std::size_t a : digits) x = x * algebra_.dim() + a;
  return x;
}

void HochschildModule::add_face(int n, int i, std::size_t x, const Rational& sign, std::vector<Entry>& raw) const {
  const std::size_t d = algebra_.dim();
  if (i < n) {
    const std::size_t tail = power(n - 1 - i);
    const std::size_t prefix = x / power(n + 1 - i);
    const std::size_t pair = (x / tail) % (d * d);
    const std::size_t suffix = x % tail;
    for (const auto& e : algebra_.product(pair / d, pair % d)) {
      raw.push_back({(prefix * d + e.index) * tail + suffix, sign * e.value});
    }
    return;
  }
  const std::size_t first = x / power(n);
  const std::size_t last = x % d;
  const std::size_t middle = (x / d) % power(n - 1);
  for (const auto& e : algebra_.product(last, first)) raw.push_back({e.index * power(n - 1) + middle, sign * e.value});
}

// sum_{i < count} (-1)^i d_i on C_n
Matrix HochschildModule::faces(int n, int count) const {
  Matrix m(domain(), rank(n - 1), rank(n));
  std::vector<Entry> raw;
  for (std::size_t x = 0; x < rank(n); ++x) {
    raw.clear();
    for (int i = 0; i < count; ++i) add_face(n, i, x, i % 2 == 0 ? 1 : -1, raw);
    m.set_column(x, canonicalize(raw, domain()));
  }
  return m;
}

Matrix HochschildModule::face(int n, int i) const {
  if (n < 1 || n > truncation_ || i < 0 || i > n) throw Error(Errc::RangeExceedsComplex, "face out of range");
  Matrix m(domain(), rank(n - 1), rank(n));
  std::vector<Entry> raw;
  for (std::size_t x = 0; x < rank(n); ++x) {
    raw.clear();
    add_face(n, i, x, 1, raw);
    m.set_column(x, canonicalize(raw, domain()));
  }
  return m;
}

Matrix HochschildModule::degeneracy(int n, int j) const {
  if (n < 0 || n >= truncation_ || j < 0 || j > n) throw Error(Errc::RangeExceedsComplex, "degeneracy out of range");
  const ScalarDomain& dom = domain();
  const std::size_t d = algebra_.dim();
  Matrix m(dom, rank(n + 1), rank(n));
  const std::size_t tail = power(n - j);
  for (std::size_t x = 0; x < rank(n); ++x) {
    SparseVec col;
    for (const auto& e : algebra_.unit()) col.push_back({((x / tail) * d + e.index) * tail + x % tail, e.value});
    m.set_column(x, canonicalize(std::move(col), dom));
  }
  return m;
}

Matrix HochschildModule::cyclic(int n) const {
  if (n < 0 || n > truncation_) throw Error(Errc::RangeExceedsComplex, "cyclic operator out of range");
  const ScalarDomain& dom = domain();
  const std::size_t d = algebra_.dim();
  const Rational sign = dom.reduce(signed_ && n % 2 == 1 ? -1 : 1);
  Matrix m(dom, rank(n), rank(n));
  for (std::size_t x = 0; x < rank(n); ++x) m.set_column(x, SparseVec{{(x % d) * power(n) + x / d, sign}});
  return m;
}

Matrix HochschildModule::boundary(int n) const {
  if (n == 0) return Matrix(domain(), 0, rank(0));
  return faces(n, n + 1);
}

Matrix HochschildModule::bprime(int n) const {
  if (n == 0) return Matrix(domain(), 0, rank(0));
  return faces(n, n);
}

Matrix HochschildModule::extra_degeneracy(int n) const {
  if (n < 0 || n >= truncation_) throw Error(Errc::RangeExceedsComplex, "extra degeneracy out of range");
  const ScalarDomain& dom = domain();
  Matrix m(dom, rank(n + 1), rank(n));
  for (std::size_t x = 0; x < rank(n); ++x) {
    SparseVec col;
    for (const auto& e : algebra_.unit()) col.push_back({e.index * power(n + 1) + x, e.value});
    m.set_column(x, std::move(col));
  }
  return m;
}

HomologyResult hh(const FiniteAlgebra& algebra, int from, int to, HochschildOptions options) {
  const HochschildModule m(algebra, to + 1, true, options.budget);
  return homology(chain_complex(m, options.mode), from, to, {options.representatives});
}

IdentityReport bprime_homotopy_check(const SimplicialModule& m, int max_degree) {
  if (max_degree >= m.truncation()) {
    throw Error(Errc::TruncationTooSmall, "homotopy check in degree " + std::to_string(max_degree) + " needs truncation " +
                                              std::to_string(max_degree + 1));
  }
  IdentityReport report;
  report.subject = m.name();
  for (int n = 0; n <= max_degree; ++n) {
    Matrix lhs = m.bprime(n + 1) * m.extra_degeneracy(n);
    if (n >= 1) lhs = lhs + m.extra_degeneracy(n - 1) * m.bprime(n);
    const Matrix id = Matrix::identity(m.domain(), m.rank(n));
    report.record("b'h + hb' = id", lhs == id, n, [&] {
      return "degree " + std::to_string(n) + ": " + std::to_string((lhs - id).nonzeros()) + " entries differ";
    });
  }
  return report;
}

PipelineComparison hh_vs_cyclic_bar(const FiniteGroup& group, int max_degree, ScalarDomain dom) {
  if (max_degree < 1) throw Error(Errc::InvalidInput, "max degree must be at least 1");
  const int N = max_degree;
  const HochschildModule hoch(FiniteAlgebra::group_algebra(group, dom), N, false);
  const LinearizedModule bar(cyclic_bar(group, N), dom);
  PipelineComparison out;
  out.max_degree = max_degree;
  for (int n = 0; n <= N; ++n) {
    if (hoch.rank(n) != bar.rank(n)) throw Error(Errc::MatrixMismatch, "ranks differ in degree " + std::to_string(n));
  }
  for (int n = 1; n <= N; ++n) {
    const Matrix a = hoch.boundary(n);
    const Matrix b = bar.boundary(n);
    if (a != b) {
      throw Error(Errc::MatrixMismatch, "boundary d_" + std::to_string(n) + " differs in " +
                                            std::to_string((a - b).nonzeros()) + " entries");
    }
    out.entries_compared += a.rows() * a.cols();
  }
  const ChainComplex ch = chain_complex(hoch, Normalization::Unnormalized);
  const ChainComplex cb = chain_complex(bar, Normalization::Unnormalized);
  out.betti_hochschild = homology(ch, 0, max_degree - 1).betti();
  out.betti_cyclic_bar = homology(cb, 0, max_degree - 1).betti();
  if (out.betti_hochschild != out.betti_cyclic_bar) throw Error(Errc::MatrixMismatch, "Betti numbers differ");
  return out;
}

}  // namespace cyclix
