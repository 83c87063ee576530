#include "cyclix/cyclic_homology.hpp"

#include <algorithm>
#include <memory>

#include "cyclix/error.hpp"
#include "cyclix/hochschild.hpp"
#include "cyclix/linalg.hpp"

namespace cyclix {

namespace {

bool odd(int p) { return (p % 2 + 2) % 2 == 1; }

// Signed operators of a cyclic module in degrees 0..top.
struct CyclicOperators {
  std::vector<Matrix> t;      // t~_q
  std::vector<Matrix> norm;   // N_q
  std::vector<Matrix> b;      // b_q, b_0 = 0
  std::vector<Matrix> bprime; // b'_q, b'_0 = 0

  CyclicOperators(const SimplicialModule& m, int top) {
    if (!m.has_cyclic()) throw Error(Errc::NotCyclic, m.name() + " has no cyclic operator");
    if (top > m.truncation()) {
      throw Error(Errc::TruncationTooSmall, "cyclic bicomplex needs rows up to " + std::to_string(top) + ", module " +
                                                m.name() + " stops at " + std::to_string(m.truncation()));
    }
    for (int q = 0; q <= top; ++q) {
      t.push_back(m.signed_cyclic(q));
      norm.push_back(norm_map(m, q));
      b.push_back(m.boundary(q));
      bprime.push_back(m.bprime(q));
    }
  }

  Matrix one_minus_t(int q) const {
    const Matrix& tq = t[static_cast<std::size_t>(q)];
    return Matrix::identity(tq.domain(), tq.rows()) - tq;
  }
};

Matrix embed_block(const ScalarDomain& dom, std::size_t rows, std::size_t row_offset, std::size_t cols,
                   std::size_t col_offset, std::size_t size) {
  MatrixBuilder m(dom, rows, cols);
  for (std::size_t k = 0; k < size; ++k) m.add(row_offset + k, col_offset + k, 1);
  return std::move(m).build();
}

}  // namespace

Matrix norm_map(const SimplicialModule& m, int n) {
  const Matrix t = m.signed_cyclic(n);
  Matrix power = Matrix::identity(m.domain(), m.rank(n));
  Matrix sum = power;
  for (int k = 1; k <= n; ++k) {
    power = t * power;
    sum = sum + power;
  }
  return sum;
}

Matrix connes_b(const SimplicialModule& m, int n) {
  const Matrix t = m.signed_cyclic(n + 1);
  return (Matrix::identity(m.domain(), m.rank(n + 1)) - t) * m.extra_degeneracy(n) * norm_map(m, n);
}

Bicomplex cyclic_bicomplex(const SimplicialModule& m, int column_lo, int column_hi, int max_total) {
  const int rows = max_total - column_lo;
  const CyclicOperators ops(m, std::max(rows, 0));
  for (int q = 1; q <= rows; ++q) {
    const auto k = static_cast<std::size_t>(q);
    if (ops.b[k] * ops.one_minus_t(q) != ops.one_minus_t(q - 1) * ops.bprime[k]) {
      throw Error(Errc::RelationFailure, "b(1 - t) != (1 - t)b' in degree " + std::to_string(q));
    }
    if (ops.bprime[k] * ops.norm[k] != ops.norm[k - 1] * ops.b[k]) {
      throw Error(Errc::RelationFailure, "b'N != Nb in degree " + std::to_string(q));
    }
  }
  Bicomplex bc(m.domain(), Variance::Homological);
  for (int p = column_lo; p <= column_hi; ++p) {
    for (int q = 0; p + q <= max_total; ++q) bc.set_cell(p, q, m.rank(q));
  }
  for (int p = column_lo; p <= column_hi; ++p) {
    for (int q = 0; p + q <= max_total; ++q) {
      const auto k = static_cast<std::size_t>(q);
      if (q >= 1) bc.set_vertical(p, q, odd(p) ? -ops.bprime[k] : ops.b[k]);
      if (p > column_lo) bc.set_horizontal(p, q, odd(p) ? ops.one_minus_t(q) : ops.norm[k]);
    }
  }
  return bc;
}

HomologyResult hc(const SimplicialModule& m, int from, int to, HcOptions options) {
  if (from < 0 || to < from) throw Error(Errc::RangeExceedsComplex, "bad degree range");
  const int columns = options.columns < 0 ? to + 1 : options.columns;
  if (columns < to + 1) {
    throw Error(Errc::WindowTooSmall, "HC_" + std::to_string(to) + " needs columns 0.." + std::to_string(to + 1) + ", got 0.." +
                                          std::to_string(columns));
  }
  const Bicomplex bc = cyclic_bicomplex(m, 0, columns, to + 1);
  const Totalization tot = total_complex(bc, 0, to + 1);
  return homology(tot.complex, from, to, {options.representatives});
}

HomologyResult hc(const FiniteAlgebra& algebra, int from, int to, HcOptions options) {
  const HochschildModule m(algebra, to + 1, true, options.budget);
  return hc(m, from, to, options);
}

bool SbiReport::passed() const {
  return b_squared_zero && b_anticommutes &&
         std::all_of(nodes.begin(), nodes.end(), [](const SbiNode& n) { return n.exact; });
}

SbiReport connes_maps(const SimplicialModule& m, int max_degree) {
  if (max_degree < 0) throw Error(Errc::RangeExceedsComplex, "negative degree");
  const int top = max_degree + 1;
  if (m.truncation() < top) {
    throw Error(Errc::TruncationTooSmall, "SBI up to degree " + std::to_string(max_degree) + " needs truncation " +
                                              std::to_string(top));
  }
  const ScalarDomain& dom = m.domain();
  SbiReport report;
  report.max_degree = max_degree;

  std::vector<std::size_t> ranks;
  std::vector<Matrix> bs;
  for (int n = 0; n <= top; ++n) ranks.push_back(m.rank(n));
  for (int n = 1; n <= top; ++n) bs.push_back(m.boundary(n));
  const auto ch = std::make_shared<const ChainComplex>(dom, 0, ranks, bs);
  const Totalization tot = total_complex(cyclic_bicomplex(m, 0, top, top), 0, top);
  const auto cc = std::make_shared<const ChainComplex>(tot.complex);

  std::vector<Matrix> connes;
  for (int n = 0; n < top; ++n) connes.push_back(connes_b(m, n));
  report.b_squared_zero = true;
  report.b_anticommutes = true;
  for (int n = 0; n <= max_degree; ++n) {
    const auto k = static_cast<std::size_t>(n);
    if (n + 1 < top) report.b_squared_zero &= (connes[k + 1] * connes[k]).is_zero();
    Matrix anti = ch->boundary(n + 1) * connes[k];
    if (n >= 1) anti = anti + connes[k - 1] * ch->boundary(n);
    report.b_anticommutes &= anti.is_zero();
  }

  std::map<int, Matrix> i_comp;
  std::map<int, Matrix> s_comp;
  std::map<int, Matrix> b_comp;
  for (int n = 0; n <= top; ++n) {
    i_comp.emplace(n, embed_block(dom, cc->rank(n), tot.offset.at({0, n}), ch->rank(n), 0, ch->rank(n)));
    if (n >= 2) {
      MatrixBuilder s(dom, cc->rank(n - 2), cc->rank(n));
      for (int p = 2; p <= n; ++p) {
        const std::size_t size = m.rank(n - p);
        const std::size_t from = tot.offset.at({p, n - p});
        const std::size_t to = tot.offset.at({p - 2, n - p});
        for (std::size_t k = 0; k < size; ++k) s.add(to + k, from + k, 1);
      }
      s_comp.emplace(n, std::move(s).build());
    }
    if (n < top) {
      const Matrix pick = embed_block(dom, ch->rank(n), 0, cc->rank(n), tot.offset.at({0, n}), ch->rank(n));
      b_comp.emplace(n, connes[static_cast<std::size_t>(n)] * pick);
    }
  }
  const ChainMap i_map(ch, cc, 0, std::move(i_comp), "I");
  const ChainMap s_map(cc, cc, -2, std::move(s_comp), "S");
  const ChainMap b_map(cc, ch, 1, std::move(b_comp), "B");

  const HomologyResult hh_res = homology(*ch, 0, max_degree, {true});
  const HomologyResult hc_res = homology(*cc, 0, max_degree, {true});
  report.hh_betti = hh_res.betti();
  report.hc_betti = hc_res.betti();
  auto hh_dim = [&](int n) { return n < 0 ? std::size_t{0} : hh_res.at(n).betti; };
  auto hc_dim = [&](int n) { return n < 0 ? std::size_t{0} : hc_res.at(n).betti; };
  for (int n = 0; n <= max_degree; ++n) {
    report.i_maps.emplace(n, induced_map(i_map, hh_res, hc_res, n));
    report.s_maps.emplace(n, n >= 2 ? induced_map(s_map, hc_res, hc_res, n) : Matrix(dom, 0, hc_dim(n)));
    if (n + 1 <= max_degree) report.b_maps.emplace(n, induced_map(b_map, hc_res, hh_res, n));
  }
  auto b_into = [&](int target) {
    return target >= 1 ? report.b_maps.at(target - 1) : Matrix(dom, hh_dim(target), 0);
  };
  auto add_node = [&](std::string node, int segment, std::string maps, const Matrix& in, const Matrix& out) {
    const ExactnessVerdict v = exactness(in, out);
    report.nodes.push_back({std::move(node), segment, std::move(maps), v.image_dim, v.kernel_dim, v.exact});
  };
  for (int n = 0; n <= max_degree; ++n) {
    const std::string d = std::to_string(n);
    add_node("HH_" + d, n, "B,I", b_into(n), report.i_maps.at(n));
    add_node("HC_" + d, n, "I,S", report.i_maps.at(n), report.s_maps.at(n));
    if (n >= 2) add_node("HC_" + std::to_string(n - 2), n, "S,B", report.s_maps.at(n), report.b_maps.at(n - 2));
  }
  return report;
}

SbiReport connes_maps(const FiniteAlgebra& algebra, int max_degree, std::size_t budget) {
  const HochschildModule m(algebra, max_degree + 1, true, budget);
  return connes_maps(m, max_degree);
}

std::string variant_name(CyclicVariant v) {
  switch (v) {
    case CyclicVariant::Cyclic:
      return "cyclic";
    case CyclicVariant::Negative:
      return "negative";
    case CyclicVariant::Periodic:
      return "periodic";
  }
  return "cyclic";
}

WindowResult hc_window(const SimplicialModule& m, CyclicVariant variant, int max_degree, int window) {
  if (max_degree < 0) throw Error(Errc::RangeExceedsComplex, "negative degree");
  if (window < 0 || (window < 1 && variant != CyclicVariant::Cyclic)) {
    throw Error(Errc::WindowTooSmall, "window must be at least 1");
  }
  const ScalarDomain& dom = m.domain();
  const int depth = max_degree + window;
  WindowResult out;
  out.variant = variant;
  out.window = window;

  const Totalization tot = total_complex(cyclic_bicomplex(m, 0, depth + 1, depth + 1), 0, depth + 1);
  const auto cc = std::make_shared<const ChainComplex>(tot.complex);
  const HomologyResult hc_res = homology(*cc, 0, depth, {true});
  std::map<int, Matrix> s_comp;
  for (int n = 2; n <= depth + 1; ++n) {
    MatrixBuilder s(dom, cc->rank(n - 2), cc->rank(n));
    for (int p = 2; p <= n; ++p) {
      const std::size_t from = tot.offset.at({p, n - p});
      const std::size_t to = tot.offset.at({p - 2, n - p});
      for (std::size_t k = 0; k < m.rank(n - p); ++k) s.add(to + k, from + k, 1);
    }
    s_comp.emplace(n, std::move(s).build());
  }
  const ChainMap s_map(cc, cc, -2, std::move(s_comp), "S");
  std::map<int, std::size_t> s_rank;
  for (int n = 2; n <= depth; ++n) s_rank[n] = rank(induced_map(s_map, hc_res, hc_res, n));

  TowerReport& tower = out.tower;
  tower.depth = depth;
  for (int n = 0; n <= max_degree; ++n) {
    TowerDegree deg;
    deg.degree = n;
    for (int j = n; j <= depth; j += 2) deg.betti.push_back(hc_res.at(j).betti);
    for (int j = n; j + 2 <= depth; j += 2) deg.s_ranks.push_back(s_rank.at(j + 2));
    for (std::size_t k = deg.s_ranks.size(); k-- > 0;) {
      const bool iso = deg.s_ranks[k] == deg.betti[k] && deg.betti[k] == deg.betti[k + 1];
      if (!iso) break;
      deg.stable_from = static_cast<int>(k);
    }
    tower.degrees.push_back(std::move(deg));
  }
  const ChainComplex normalized = chain_complex(m, Normalization::Normalized);
  const HomologyResult hh_res = homology(normalized, 0, depth);
  for (int j = depth; j >= 0 && hh_res.at(j).betti == 0; --j) tower.hh_vanishing_from = j;
  for (int j = depth; j >= 0 && normalized.rank(j) == 0; --j) tower.normalized_vanishing_from = j;
  const int top_half = depth - depth / 2;
  tower.stable = tower.hh_vanishing_from && *tower.hh_vanishing_from <= top_half;

  switch (variant) {
    case CyclicVariant::Cyclic: {
      out.homology.domain = dom;
      for (int n = 0; n <= max_degree; ++n) {
        HomologyGroup g = hc_res.at(n);
        g.representatives.clear();
        g.boundaries.clear();
        out.homology.groups.push_back(std::move(g));
      }
      break;
    }
    case CyclicVariant::Negative:
    case CyclicVariant::Periodic: {
      const int hi = variant == CyclicVariant::Negative ? 0 : max_degree + 1;
      const Totalization w = total_complex(cyclic_bicomplex(m, -window, hi, max_degree + 1), -1, max_degree + 1);
      out.homology = homology(w.complex, 0, max_degree);
      break;
    }
  }
  return out;
}

WindowResult hc_window(const FiniteAlgebra& algebra, CyclicVariant variant, int max_degree, int window,
                       std::size_t budget) {
  if (window < 0) throw Error(Errc::WindowTooSmall, "window must be at least 1");
  const HochschildModule m(algebra, max_degree + window + 1, true, budget);
  return hc_window(m, variant, max_degree, window);
}

}  // namespace cyclix
