#include "cyclix/chain_map.hpp"

#include "cyclix/error.hpp"
#include "cyclix/linalg.hpp"

namespace cyclix {

ChainMap::ChainMap(ComplexPtr source, ComplexPtr target, int shift, std::map<int, Matrix> components, std::string name)
    : source_(std::move(source)), target_(std::move(target)), shift_(shift), name_(std::move(name)) {
  const ChainComplex& c = *source_;
  const ChainComplex& d = *target_;
  if (c.domain() != d.domain()) throw Error(Errc::DimensionMismatch, name_ + ": complexes over different domains");
  for (int n = c.lo(); n <= c.hi(); ++n) {
    if (!d.in_range(n + shift_)) continue;
    auto it = components.find(n);
    if (it == components.end()) {
      components_.emplace(n, Matrix(c.domain(), d.rank(n + shift_), c.rank(n)));
      continue;
    }
    if (it->second.rows() != d.rank(n + shift_) || it->second.cols() != c.rank(n) || it->second.domain() != c.domain()) {
      throw Error(Errc::DimensionMismatch, name_ + ": component in degree " + std::to_string(n) + " has wrong shape");
    }
    components_.emplace(n, std::move(it->second));
  }
  const Rational sign = shift_ % 2 == 0 ? Rational(1) : Rational(-1);
  for (const auto& [n, f] : components_) {
    const Matrix lhs = d.boundary(n + shift_) * f;
    Matrix rhs(c.domain(), lhs.rows(), lhs.cols());
    if (components_.count(n - 1)) rhs = components_.at(n - 1) * c.boundary(n);
    if (lhs != rhs.scaled(sign)) {
      throw Error(Errc::NotAChainMap, name_ + ": d f != " + (shift_ % 2 == 0 ? "" : "-") + "f d in degree " +
                                          std::to_string(n));
    }
  }
}

const Matrix& ChainMap::at(int n) const {
  const auto it = components_.find(n);
  if (it == components_.end()) throw Error(Errc::RangeExceedsComplex, name_ + ": no component in degree " + std::to_string(n));
  return it->second;
}

ChainMap ChainMap::identity(const ComplexPtr& c) {
  std::map<int, Matrix> comps;
  for (int n = c->lo(); n <= c->hi(); ++n) comps.emplace(n, Matrix::identity(c->domain(), c->rank(n)));
  return ChainMap(c, c, 0, std::move(comps), "id");
}

ChainMap ChainMap::zero(const ComplexPtr& source, const ComplexPtr& target, int shift) {
  return ChainMap(source, target, shift, {}, "0");
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (f.target() != g.source()) throw Error(Errc::BasisMismatch, "cannot compose " + g.name() + " after " + f.name());
  std::map<int, Matrix> comps;
  const ChainComplex& c = *f.source();
  for (int n = c.lo(); n <= c.hi(); ++n) {
    if (f.has_component(n) && g.has_component(n + f.shift())) comps.emplace(n, g.at(n + f.shift()) * f.at(n));
  }
  return ChainMap(f.source(), g.target(), f.shift() + g.shift(), std::move(comps), g.name() + " o " + f.name());
}

Matrix induced_map(const ChainMap& f, const HomologyResult& h_source, const HomologyResult& h_target, int degree) {
  const HomologyGroup& src = h_source.at(degree);
  const HomologyGroup& tgt = h_target.at(degree + f.shift());
  const Matrix& fn = f.at(degree);
  const Matrix& d = f.target()->boundary(degree + f.shift());
  std::vector<SparseVec> images;
  for (const auto& z : src.representatives) {
    SparseVec w = fn.apply(z);
    if (!d.apply(w).empty()) throw Error(Errc::NotAChainMap, f.name() + ": representative not sent to a cycle");
    images.push_back(std::move(w));
  }
  const auto coords = class_coordinates(tgt, f.source()->domain(), images);
  return Matrix::from_columns(f.source()->domain(), tgt.betti, coords);
}

ExactnessVerdict exactness(const Matrix& f, const Matrix& g) {
  if (f.rows() != g.cols() || f.domain() != g.domain()) {
    throw Error(Errc::BasisMismatch, "middle spaces differ: " + std::to_string(f.rows()) + " vs " + std::to_string(g.cols()));
  }
  ExactnessVerdict v;
  const SubspaceBasis im = image(f);
  const SubspaceBasis ker = kernel(g);
  v.image_dim = im.dim();
  v.kernel_dim = ker.dim();
  v.exact = subspace_equal(im, ker);
  return v;
}

bool exactness_at(const Matrix& f, const Matrix& g) { return exactness(f, g).exact; }

}  // namespace cyclix
