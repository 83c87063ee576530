#include "cyclix/chain_complex.hpp"

#include "cyclix/error.hpp"

namespace cyclix {

ChainComplex::ChainComplex(ScalarDomain dom, int lo, std::vector<std::size_t> ranks, std::vector<Matrix> boundaries,
                           bool top_exact)
    : dom_(dom), lo_(lo), ranks_(std::move(ranks)), top_exact_(top_exact) {
  if (ranks_.empty()) throw Error(Errc::DimensionMismatch, "chain complex needs at least one degree");
  if (boundaries.size() + 1 != ranks_.size()) {
    throw Error(Errc::DimensionMismatch, "expected " + std::to_string(ranks_.size() - 1) + " boundary matrices");
  }
  boundaries_.reserve(ranks_.size() + 1);
  boundaries_.emplace_back(dom_, 0, ranks_.front());
  for (std::size_t k = 0; k < boundaries.size(); ++k) {
    Matrix& d = boundaries[k];
    if (d.rows() != ranks_[k] || d.cols() != ranks_[k + 1]) {
      throw Error(Errc::DimensionMismatch, "d_" + std::to_string(lo + static_cast<int>(k) + 1) + " has shape " +
                                               std::to_string(d.rows()) + "x" + std::to_string(d.cols()));
    }
    if (d.domain() != dom_) throw Error(Errc::DimensionMismatch, "boundary over a different domain");
    boundaries_.push_back(std::move(d));
  }
  boundaries_.emplace_back(dom_, ranks_.back(), 0);
  for (std::size_t k = 1; k + 1 < boundaries_.size(); ++k) {
    if (!(boundaries_[k - 1] * boundaries_[k]).is_zero()) {
      throw Error(Errc::BoundarySquareNonzero, "d_" + std::to_string(lo + static_cast<int>(k) - 1) + " d_" +
                                                   std::to_string(lo + static_cast<int>(k)) + " != 0");
    }
  }
}

std::size_t ChainComplex::rank(int n) const {
  if (!in_range(n)) return 0;
  return ranks_[static_cast<std::size_t>(n - lo_)];
}

const Matrix& ChainComplex::boundary(int n) const {
  if (n < lo_ || n > hi() + 1) throw Error(Errc::RangeExceedsComplex, "no boundary d_" + std::to_string(n));
  return boundaries_[static_cast<std::size_t>(n - lo_)];
}

ChainComplex ChainComplex::in_domain(ScalarDomain dom) const {
  std::vector<Matrix> ds;
  for (std::size_t k = 1; k + 1 < boundaries_.size(); ++k) ds.push_back(boundaries_[k].in_domain(dom));
  return ChainComplex(dom, lo_, ranks_, std::move(ds), top_exact_);
}

}  // namespace cyclix
