#include "cyclix/tensor_maps.hpp"

#include "cyclix/error.hpp"
#include "cyclix/homology.hpp"

namespace cyclix {
namespace {

// Caches degeneracy and face matrices of one factor together with its
// normalizers; all indices are degrees up to the truncation.
class Factor {
 public:
  Factor(const SimplicialModule& m, Normalization mode) : m_(m), normalized_(mode == Normalization::Normalized) {
    for (int n = 0; n <= m.truncation(); ++n) {
      if (normalized_) {
        norms_.push_back(normalizer(m, n));
      } else {
        const Matrix id = Matrix::identity(m.domain(), m.rank(n));
        norms_.push_back({id, id});
      }
    }
  }

  const Matrix& projection(int n) const { return norms_[static_cast<std::size_t>(n)].projection; }
  const Matrix& section(int n) const { return norms_[static_cast<std::size_t>(n)].section; }
  std::size_t rank(int n) const { return projection(n).rows(); }

  // d_{p+1} ... d_n : C_n -> C_p
  Matrix front(int n, int p) const {
    Matrix f = Matrix::identity(m_.domain(), m_.rank(n));
    for (int k = n; k > p; --k) f = m_.face(k, k) * f;
    return f;
  }
  // d_0^{n-q} : C_n -> C_q
  Matrix back(int n, int q) const {
    Matrix f = Matrix::identity(m_.domain(), m_.rank(n));
    for (int k = n; k > q; --k) f = m_.face(k, 0) * f;
    return f;
  }
  // s_{idx.back()} ... s_{idx.front()} starting in degree from
  Matrix degeneracies(int from, const std::vector<int>& idx) const {
    Matrix f = Matrix::identity(m_.domain(), m_.rank(from));
    int deg = from;
    for (int j : idx) {
      f = m_.degeneracy(deg, j) * f;
      ++deg;
    }
    return f;
  }

 private:
  const SimplicialModule& m_;
  bool normalized_;
  std::vector<Normalizer> norms_;
};

}  // namespace

std::vector<Shuffle> shuffles(int p, int q) {
  std::vector<Shuffle> out;
  const int n = p + q;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != p) continue;
    Shuffle s;
    int inversions = 0;
    for (int k = 0; k < n; ++k) {
      if (mask & (1u << k)) {
        inversions += k - static_cast<int>(s.mu.size());
        s.mu.push_back(k);
      } else {
        s.nu.push_back(k);
      }
    }
    s.sign = inversions % 2 == 0 ? 1 : -1;
    out.push_back(std::move(s));
  }
  return out;
}

ComparisonMaps comparison_maps(const ModulePtr& c, const ModulePtr& d, Normalization mode) {
  const auto tensor = std::make_shared<TensorModule>(c, d);
  const int N = c->truncation();
  const ScalarDomain& dom = c->domain();
  const Factor fc(*c, mode);
  const Factor fd(*d, mode);
  const Factor ft(*tensor, mode);
  const ComplexPtr cc = std::make_shared<ChainComplex>(chain_complex(*c, mode));
  const ComplexPtr dc = std::make_shared<ChainComplex>(chain_complex(*d, mode));
  const ComplexPtr diagonal = std::make_shared<ChainComplex>(chain_complex(*tensor, mode));

  Bicomplex b(dom, Variance::Homological);
  for (int p = 0; p <= N; ++p) {
    for (int q = 0; p + q <= N; ++q) b.set_cell(p, q, cc->rank(p) * dc->rank(q));
  }
  for (int p = 0; p <= N; ++p) {
    for (int q = 0; p + q <= N; ++q) {
      if (p >= 1) b.set_horizontal(p, q, Matrix::kron(cc->boundary(p), Matrix::identity(dom, dc->rank(q))));
      if (q >= 1) {
        const Matrix v = Matrix::kron(Matrix::identity(dom, cc->rank(p)), dc->boundary(q));
        b.set_vertical(p, q, p % 2 == 0 ? v : -v);
      }
    }
  }
  Totalization tot = total_complex(b, 0, N, false);
  const ComplexPtr product = std::make_shared<ChainComplex>(std::move(tot.complex));

  std::map<int, Matrix> aw, ez;
  for (int n = 0; n <= N; ++n) {
    MatrixBuilder a(dom, product->rank(n), diagonal->rank(n));
    MatrixBuilder e(dom, diagonal->rank(n), product->rank(n));
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      const std::size_t off = tot.offset.at({p, q});
      const Matrix block = Matrix::kron(fc.projection(p) * fc.front(n, p), fd.projection(q) * fd.back(n, q)) * ft.section(n);
      a.add_block(off, 0, block);
      MatrixBuilder sum(dom, tensor->rank(n), c->rank(p) * d->rank(q));
      for (const Shuffle& s : shuffles(p, q)) {
        sum.add_block(0, 0, Matrix::kron(fc.degeneracies(p, s.nu), fd.degeneracies(q, s.mu)), s.sign);
      }
      const Matrix shuffle_block =
          ft.projection(n) * std::move(sum).build() * Matrix::kron(fc.section(p), fd.section(q));
      e.add_block(0, off, shuffle_block);
    }
    aw.emplace(n, std::move(a).build());
    ez.emplace(n, std::move(e).build());
  }
  ChainMap aw_map(diagonal, product, 0, std::move(aw), "AW");
  ChainMap ez_map(product, diagonal, 0, std::move(ez), "EZ");
  return {diagonal, product, std::move(tot.offset), std::move(aw_map), std::move(ez_map)};
}

ChainMap aw_map(const ModulePtr& c, const ModulePtr& d, Normalization mode) {
  return comparison_maps(c, d, mode).aw;
}

ChainMap ez_map(const ModulePtr& c, const ModulePtr& d, Normalization mode) {
  return comparison_maps(c, d, mode).ez;
}

IdentityReport check_aw_ez(const ModulePtr& c, const ModulePtr& d, int max_degree) {
  if (max_degree >= c->truncation() || max_degree >= d->truncation()) {
    throw Error(Errc::TruncationTooSmall, "AW/EZ check in degree " + std::to_string(max_degree) + " needs truncation " +
                                              std::to_string(max_degree + 1));
  }
  IdentityReport report;
  report.subject = c->name() + " (x) " + d->name();
  const ScalarDomain& dom = c->domain();
  for (const auto mode : {Normalization::Normalized, Normalization::Unnormalized}) {
    const std::string tag = mode == Normalization::Normalized ? "normalized" : "unnormalized";
    const ComparisonMaps maps = comparison_maps(c, d, mode);
    if (mode == Normalization::Normalized) {
      const ChainMap aw_ez = compose(maps.aw, maps.ez);
      for (int n = 0; n <= max_degree; ++n) {
        const Matrix id = Matrix::identity(dom, maps.product->rank(n));
        const Matrix& m = aw_ez.at(n);
        report.record("AW o EZ = id (normalized)", m == id, n, [&] {
          return "degree " + std::to_string(n) + ": " + std::to_string((m - id).nonzeros()) + " entries differ";
        });
      }
    }
    const ChainMap ez_aw = compose(maps.ez, maps.aw);
    const HomologyResult h = homology(*maps.diagonal, 0, max_degree, {true});
    for (int n = 0; n <= max_degree; ++n) {
      const Matrix induced = induced_map(ez_aw, h, h, n);
      report.record("EZ o AW = id on H (" + tag + ")", induced == Matrix::identity(dom, h.at(n).betti), n,
                    [&] { return "degree " + std::to_string(n) + ": induced map is not the identity"; });
    }
  }
  return report;
}

}  // namespace cyclix
