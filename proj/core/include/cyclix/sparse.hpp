#pragma once

#include <cstddef>
#include <vector>

#include "cyclix/rational.hpp"
#include "cyclix/scalar_domain.hpp"

namespace cyclix {

struct Entry {
  std::size_t index;
  Rational value;

  friend bool operator==(const Entry& a, const Entry& b) { return a.index == b.index && a.value == b.value; }
};

/// Sparse vector: entries strictly increasing in index, no explicit zeros.
using SparseVec = std::vector<Entry>;

Rational get(const SparseVec& v, std::size_t index);

/// y += a * x, with arithmetic in dom.
void axpy(SparseVec& y, const Rational& a, const SparseVec& x, const ScalarDomain& dom);

SparseVec scaled(const SparseVec& v, const Rational& a, const ScalarDomain& dom);

/// Sorts, merges duplicate indices, reduces into dom and drops zeros.
SparseVec canonicalize(std::vector<Entry> raw, const ScalarDomain& dom);

SparseVec unit_vector(std::size_t index);

/// Dense scratch buffer for summing many sparse contributions into one vector.
class Accumulator {
 public:
  explicit Accumulator(std::size_t size) : values_(size), touched_flag_(size, 0) {}

  void add(std::size_t index, const Rational& value);
  void add_scaled(const SparseVec& v, const Rational& a);
  /// Returns the accumulated vector reduced into dom and resets the buffer.
  SparseVec take(const ScalarDomain& dom);

 private:
  std::vector<Rational> values_;
  std::vector<char> touched_flag_;
  std::vector<std::size_t> touched_;
};

}  // namespace cyclix
