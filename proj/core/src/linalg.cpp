#include "cyclix/linalg.hpp"

#include <algorithm>
#include <cstdint>

#include "cyclix/error.hpp"

namespace cyclix {
namespace {

void require_field(const ScalarDomain& dom, const char* what) {
  if (!dom.is_field()) throw Error(Errc::DomainNotField, std::string(what) + " needs a field, got " + dom.name());
}

}  // namespace

EchelonBasis::EchelonBasis(ScalarDomain dom, std::size_t ambient) : dom_(dom), pivot_row_(ambient, -1) {
  require_field(dom_, "echelon form");
}

SparseVec EchelonBasis::reduce(SparseVec v) const {
  std::size_t idx = 0;
  while (idx < v.size()) {
    const long p = pivot_row_[v[idx].index];
    if (p < 0) {
      ++idx;
      continue;
    }
    const Rational factor = dom_.neg(v[idx].value);
    axpy(v, factor, rows_[static_cast<std::size_t>(p)], dom_);
  }
  return v;
}

bool EchelonBasis::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const Rational inv = dom_.inverse(v.front().value);
  v = scaled(v, inv, dom_);
  pivot_row_[v.front().index] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

std::vector<SparseVec> EchelonBasis::reduced_rows() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].front().index < rows_[b].front().index; });

  // Back substitution from the last pivot upwards; rows already processed are
  // fully reduced, so eliminating against them only creates entries to the right.
  std::vector<SparseVec> reduced(rows_.size());
  std::vector<long> slot_of_pivot(pivot_row_.size(), -1);
  for (std::size_t k = order.size(); k-- > 0;) {
    SparseVec row = rows_[order[k]];
    std::size_t idx = 1;
    while (idx < row.size()) {
      const long s = slot_of_pivot[row[idx].index];
      if (s < 0) {
        ++idx;
        continue;
      }
      const Rational factor = dom_.neg(row[idx].value);
      axpy(row, factor, reduced[static_cast<std::size_t>(s)], dom_);
    }
    slot_of_pivot[row.front().index] = static_cast<long>(k);
    reduced[k] = std::move(row);
  }
  return reduced;
}

SubspaceBasis::SubspaceBasis(ScalarDomain dom, std::size_t ambient, const std::vector<SparseVec>& spanning)
    : dom_(dom), ambient_(ambient) {
  EchelonBasis ech(dom, ambient);
  for (const auto& v : spanning) {
    if (!v.empty() && v.back().index >= ambient) throw Error(Errc::AmbientMismatch, "spanning vector outside ambient");
    ech.insert(v);
  }
  basis_ = ech.reduced_rows();
}

SubspaceBasis SubspaceBasis::full(ScalarDomain dom, std::size_t ambient) {
  std::vector<SparseVec> units;
  units.reserve(ambient);
  for (std::size_t i = 0; i < ambient; ++i) units.push_back(unit_vector(i));
  return SubspaceBasis(dom, ambient, units);
}

bool SubspaceBasis::contains(const SparseVec& v) const {
  // Basis is in reduced echelon form: eliminate each pivot once, left to right.
  SparseVec rest = v;
  for (const auto& row : basis_) {
    const Rational c = get(rest, row.front().index);
    if (!c.is_zero()) axpy(rest, dom_.neg(c), row, dom_);
  }
  return rest.empty();
}

bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient() != b.ambient() || a.domain() != b.domain()) {
    throw Error(Errc::AmbientMismatch, "subspaces of " + a.domain().name() + "^" + std::to_string(a.ambient()) +
                                           " and " + b.domain().name() + "^" + std::to_string(b.ambient()));
  }
  return a == b;
}

namespace {

using ModVec = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// y += a * x over F_p; both sorted by index.
void mod_axpy(ModVec& y, std::uint64_t a, const ModVec& x, std::uint64_t p, ModVec& scratch) {
  scratch.clear();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      scratch.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      scratch.emplace_back(x[j].first, static_cast<std::uint32_t>(a * x[j].second % p));
      ++j;
    } else {
      const auto v = static_cast<std::uint32_t>((y[i].second + a * x[j].second) % p);
      if (v != 0) scratch.emplace_back(y[i].first, v);
      ++i;
      ++j;
    }
  }
  y.swap(scratch);
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::size_t modular_rank(const std::vector<SparseVec>& vectors, std::size_t ambient, const ScalarDomain& dom) {
  const auto p = static_cast<std::uint64_t>(dom.characteristic());
  std::vector<long> pivot(ambient, -1);
  std::vector<ModVec> rows;
  ModVec v, scratch;
  for (const auto& src : vectors) {
    v.clear();
    for (const auto& e : src) v.emplace_back(static_cast<std::uint32_t>(e.index), static_cast<std::uint32_t>(*e.value.to_int64()));
    std::size_t idx = 0;
    while (idx < v.size()) {
      const long r = pivot[v[idx].first];
      if (r < 0) {
        ++idx;
        continue;
      }
      mod_axpy(v, p - v[idx].second, rows[static_cast<std::size_t>(r)], p, scratch);
    }
    if (v.empty()) continue;
    const std::uint64_t inv = mod_pow(v.front().second, p - 2, p);
    for (auto& e : v) e.second = static_cast<std::uint32_t>(e.second * inv % p);
    pivot[v.front().first] = static_cast<long>(rows.size());
    rows.push_back(v);
    if (rows.size() == ambient) break;
  }
  return rows.size();
}

// Rank of the span of vectors. Coordinates are relabelled by increasing
// weight and vectors inserted sparsest first; both limit fill-in.
std::size_t span_rank(std::vector<SparseVec> vectors, std::size_t ambient, const ScalarDomain& dom) {
  std::vector<std::size_t> weight(ambient, 0);
  for (const auto& v : vectors) {
    for (const auto& e : v) ++weight[e.index];
  }
  std::vector<std::size_t> order(ambient);
  for (std::size_t k = 0; k < ambient; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weight[a] < weight[b]; });
  std::vector<std::size_t> relabel(ambient);
  for (std::size_t k = 0; k < ambient; ++k) relabel[order[k]] = k;
  for (auto& v : vectors) {
    for (auto& e : v) e.index = relabel[e.index];
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  }
  std::stable_sort(vectors.begin(), vectors.end(),
                   [](const SparseVec& a, const SparseVec& b) { return a.size() < b.size(); });
  if (dom.kind() == ScalarDomain::Kind::PrimeField) return modular_rank(vectors, ambient, dom);
  EchelonBasis ech(dom, ambient);
  for (auto& v : vectors) {
    if (ech.rank() == ambient) break;
    ech.insert(std::move(v));
  }
  return ech.rank();
}

}  // namespace

std::size_t rank(const Matrix& m) {
  require_field(m.domain(), "rank");
  if (m.rows() <= m.cols()) {
    std::vector<SparseVec> cols;
    cols.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m.column(j).empty()) cols.push_back(m.column(j));
    }
    return span_rank(std::move(cols), m.rows(), m.domain());
  }
  return span_rank(m.row_vectors(), m.cols(), m.domain());
}

SubspaceBasis image(const Matrix& m) {
  require_field(m.domain(), "image");
  std::vector<SparseVec> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return SubspaceBasis(m.domain(), m.rows(), cols);
}

std::vector<SparseVec> kernel_basis(const Matrix& m) {
  require_field(m.domain(), "kernel");
  const auto& dom = m.domain();
  EchelonBasis ech(dom, m.cols());
  for (auto& row : m.row_vectors()) ech.insert(std::move(row));
  const auto rref = ech.reduced_rows();

  std::vector<char> is_pivot(m.cols(), 0);
  for (const auto& row : rref) is_pivot[row.front().index] = 1;
  // Free column f contributes e_f - sum_r rref[r][f] e_{pivot(r)}.
  std::vector<std::vector<Entry>> raw(m.cols());
  for (const auto& row : rref) {
    const std::size_t p = row.front().index;
    for (std::size_t k = 1; k < row.size(); ++k) raw[row[k].index].push_back({p, dom.neg(row[k].value)});
  }
  std::vector<SparseVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    raw[f].push_back({f, Rational(1)});
    basis.push_back(canonicalize(std::move(raw[f]), dom));
  }
  return basis;
}

SubspaceBasis kernel(const Matrix& m) { return SubspaceBasis(m.domain(), m.cols(), kernel_basis(m)); }

RankKernelImage rank_kernel_image(const Matrix& m) {
  require_field(m.domain(), "rank_kernel_image");
  SubspaceBasis img = image(m);
  const std::size_t r = img.dim();
  return RankKernelImage{r, kernel(m), std::move(img)};
}

SpanSolver::SpanSolver(ScalarDomain dom, std::size_t ambient) : dom_(dom), pivot_row_(ambient, -1) {
  require_field(dom_, "span solver");
}

bool SpanSolver::add_generator(const SparseVec& v) {
  SparseVec rest = v;
  SparseVec combo = unit_vector(generators_);
  ++generators_;
  std::size_t idx = 0;
  while (idx < rest.size()) {
    const long p = pivot_row_[rest[idx].index];
    if (p < 0) {
      ++idx;
      continue;
    }
    const Rational factor = dom_.neg(rest[idx].value);
    axpy(rest, factor, rows_[static_cast<std::size_t>(p)], dom_);
    axpy(combo, factor, combos_[static_cast<std::size_t>(p)], dom_);
  }
  if (rest.empty()) return false;
  const Rational inv = dom_.inverse(rest.front().value);
  pivot_row_[rest.front().index] = static_cast<long>(rows_.size());
  rows_.push_back(scaled(rest, inv, dom_));
  combos_.push_back(scaled(combo, inv, dom_));
  return true;
}

std::optional<SparseVec> SpanSolver::express(SparseVec v) const {
  SparseVec coeffs;
  std::size_t idx = 0;
  while (idx < v.size()) {
    if (v[idx].index >= pivot_row_.size()) return std::nullopt;
    const long p = pivot_row_[v[idx].index];
    if (p < 0) return std::nullopt;  // leading entry can never be cancelled
    const Rational c = v[idx].value;
    axpy(v, dom_.neg(c), rows_[static_cast<std::size_t>(p)], dom_);
    axpy(coeffs, c, combos_[static_cast<std::size_t>(p)], dom_);
  }
  return coeffs;
}

}  // namespace cyclix
