#include "cyclix/homology.hpp"

#include <algorithm>

#include "cyclix/error.hpp"
#include "cyclix/smith.hpp"

namespace cyclix {

const HomologyGroup& HomologyResult::at(int degree) const {
  for (const auto& g : groups) {
    if (g.degree == degree) return g;
  }
  throw Error(Errc::RangeExceedsComplex, "homology not computed in degree " + std::to_string(degree));
}

std::vector<std::size_t> HomologyResult::betti() const {
  std::vector<std::size_t> out;
  for (const auto& g : groups) out.push_back(g.betti);
  return out;
}

namespace {

HomologyGroup field_group(const ChainComplex& c, int n, bool with_reps) {
  HomologyGroup g;
  g.degree = n;
  g.ambient = c.rank(n);
  const Matrix& out = c.boundary(n);
  const Matrix& in = c.boundary(n + 1);
  if (!with_reps) {
    g.betti = c.rank(n) - rank(out) - rank(in);
    return g;
  }
  EchelonBasis span(c.domain(), g.ambient);
  for (std::size_t j = 0; j < in.cols(); ++j) {
    if (span.insert(in.column(j))) g.boundaries.push_back(in.column(j));
  }
  for (auto& v : kernel_basis(out)) {
    if (span.insert(v)) g.representatives.push_back(std::move(v));
  }
  g.betti = g.representatives.size();
  return g;
}

HomologyGroup integer_group(const ChainComplex& c, int n) {
  HomologyGroup g;
  g.degree = n;
  g.ambient = c.rank(n);
  const ScalarDomain q = ScalarDomain::rationals();
  const std::size_t rank_out = rank(c.boundary(n).in_domain(q));
  const std::vector<mpz_class> d = smith_invariants(c.boundary(n + 1));
  std::size_t rank_in = 0;
  for (const auto& v : d) {
    if (v != 0) {
      ++rank_in;
      if (v != 1) g.torsion.push_back(v);
    }
  }
  g.betti = c.rank(n) - rank_out - rank_in;
  return g;
}

}  // namespace

HomologyResult homology(const ChainComplex& c, int from, int to, HomologyOptions options) {
  const int top = c.top_exact() ? c.hi() : c.hi() - 1;
  if (from < c.lo() || to > top) {
    throw Error(Errc::RangeExceedsComplex, "requested degrees " + std::to_string(from) + ".." + std::to_string(to) +
                                               " but the complex determines " + std::to_string(c.lo()) + ".." +
                                               std::to_string(top));
  }
  HomologyResult result;
  result.domain = c.domain();
  for (int n = from; n <= to; ++n) {
    result.groups.push_back(c.domain().is_field() ? field_group(c, n, options.representatives) : integer_group(c, n));
  }
  return result;
}

std::vector<SparseVec> class_coordinates(const HomologyGroup& g, const ScalarDomain& dom,
                                         const std::vector<SparseVec>& cycles) {
  if (g.betti != g.representatives.size()) {
    throw Error(Errc::BasisMismatch, "homology in degree " + std::to_string(g.degree) + " has no representatives");
  }
  SpanSolver solver(dom, g.ambient);
  for (const auto& b : g.boundaries) solver.add_generator(b);
  const std::size_t offset = solver.generator_count();
  for (const auto& r : g.representatives) solver.add_generator(r);
  std::vector<SparseVec> out;
  out.reserve(cycles.size());
  for (const auto& z : cycles) {
    const auto coeffs = solver.express(z);
    if (!coeffs) throw Error(Errc::NotAChainMap, "vector is not a cycle in degree " + std::to_string(g.degree));
    SparseVec coords;
    for (const auto& e : *coeffs) {
      if (e.index >= offset) coords.push_back({e.index - offset, e.value});
    }
    out.push_back(std::move(coords));
  }
  return out;
}

}  // namespace cyclix
