#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "cyclix/chain_complex.hpp"
#include "cyclix/linalg.hpp"

namespace cyclix {

struct HomologyGroup {
  int degree = 0;
  std::size_t betti = 0;
  /// Invariant factors > 1 in divisibility order; integers only.
  std::vector<mpz_class> torsion;
  std::size_t ambient = 0;
  /// Cycles whose classes form a basis of H_n; fields only, when requested.
  std::vector<SparseVec> representatives;
  /// Independent columns of d_{n+1} spanning its image; fields only, when requested.
  std::vector<SparseVec> boundaries;
};

struct HomologyResult {
  ScalarDomain domain = ScalarDomain::rationals();
  std::vector<HomologyGroup> groups;

  /// Throws RangeExceedsComplex.
  const HomologyGroup& at(int degree) const;
  std::vector<std::size_t> betti() const;
};

struct HomologyOptions {
  bool representatives = false;
};

/// H_n for n in [from, to]. Over a field via ranks; over the integers via the
/// Smith form of d_{n+1}. Throws RangeExceedsComplex outside the determined
/// range (H_hi needs top_exact).
HomologyResult homology(const ChainComplex& c, int from, int to, HomologyOptions options = {});

/// Coordinates of cycles in the representative basis of g. Throws
/// NotAChainMap if some vector is not congruent to a cycle combination.
std::vector<SparseVec> class_coordinates(const HomologyGroup& g, const ScalarDomain& dom,
                                         const std::vector<SparseVec>& cycles);

}  // namespace cyclix
