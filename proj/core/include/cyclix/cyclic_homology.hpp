#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclix/algebra.hpp"
#include "cyclix/bicomplex.hpp"
#include "cyclix/chain_map.hpp"
#include "cyclix/homology.hpp"
#include "cyclix/simplicial_module.hpp"

namespace cyclix {

/// CC(M) restricted to columns [column_lo, column_hi] and total degrees
/// p + q <= max_total. Column p holds C_q in row q; the vertical map is b on
/// even columns and -b' on odd ones, the horizontal map out of column p is
/// 1 - t~ for odd p and N = sum t~^k for even p, with t~ = (-1)^n t.
/// Throws NotCyclic, TruncationTooSmall (rows beyond the module), and
/// RelationFailure if b(1 - t~) = (1 - t~)b' or b'N = Nb fails.
Bicomplex cyclic_bicomplex(const SimplicialModule& m, int column_lo, int column_hi, int max_total);

/// N_n = sum_{k=0}^{n} t~^k on C_n.
Matrix norm_map(const SimplicialModule& m, int n);

/// Connes' operator B_n = (1 - t~) h N : C_n -> C_{n+1}, h the extra degeneracy.
Matrix connes_b(const SimplicialModule& m, int n);

struct HcOptions {
  /// Last column of the window; -1 picks to + 1.
  int columns = -1;
  bool representatives = false;
  std::size_t budget = std::size_t{1} << 20;
};

/// HC_n for n in [from, to] from Tot CC. Throws WindowTooSmall if
/// columns < to + 1, TruncationTooSmall if the module ends below degree to + 1.
HomologyResult hc(const SimplicialModule& m, int from, int to, HcOptions options = {});
/// Builds the signed Hochschild module with truncation to + 1.
HomologyResult hc(const FiniteAlgebra& algebra, int from, int to, HcOptions options = {});

struct SbiNode {
  /// "HH_n", "HC_n" or "HC_{n-2}" spelled with the actual degree.
  std::string node;
  /// Position n of the segment HH_n -> HC_n -> HC_{n-2} -> HH_{n-1}.
  int segment = 0;
  /// Maps meeting at the node, incoming then outgoing.
  std::string maps;
  std::size_t image_dim = 0;
  std::size_t kernel_dim = 0;
  bool exact = false;
};

struct SbiReport {
  int max_degree = 0;
  std::vector<std::size_t> hh_betti;
  std::vector<std::size_t> hc_betti;
  /// Chain-level identities on the Hochschild complex, degrees <= max_degree.
  bool b_squared_zero = false;
  bool b_anticommutes = false;
  /// Induced maps on representative bases: I_n : HH_n -> HC_n,
  /// S_n : HC_n -> HC_{n-2}, B_n : HC_n -> HH_{n+1}.
  std::map<int, Matrix> i_maps;
  std::map<int, Matrix> s_maps;
  std::map<int, Matrix> b_maps;
  std::vector<SbiNode> nodes;
  bool passed() const;
};

/// Connes' sequence HH_n -I-> HC_n -S-> HC_{n-2} -B-> HH_{n-1} for
/// segments n = 0..max_degree; needs truncation > max_degree. Throws
/// NotCyclic, NoUnitStructure, TruncationTooSmall, DomainNotField.
SbiReport connes_maps(const SimplicialModule& m, int max_degree);
SbiReport connes_maps(const FiniteAlgebra& algebra, int max_degree, std::size_t budget = std::size_t{1} << 20);

enum class CyclicVariant { Cyclic, Negative, Periodic };
std::string variant_name(CyclicVariant v);

struct TowerDegree {
  int degree = 0;
  /// Betti numbers of HC_n, HC_{n+2}, .. up to the window depth.
  std::vector<std::size_t> betti;
  /// rank of S : HC_{n+2k+2} -> HC_{n+2k}, one per consecutive pair.
  std::vector<std::size_t> s_ranks;
  /// Least k from which every S in the tower is an isomorphism; -1 if none.
  /// Once stable, the tower stays stable.
  int stable_from = -1;
  bool stabilized() const { return stable_from >= 0 && stable_from < static_cast<int>(s_ranks.size()); }
};

struct TowerReport {
  /// HC and HH are computed in degrees 0..depth.
  int depth = 0;
  std::vector<TowerDegree> degrees;
  /// Least k with HH_j = 0 for every j in [k, depth], if any.
  std::optional<int> hh_vanishing_from;
  /// Least k with normalized C_j = 0 for every j in [k, depth], if any.
  std::optional<int> normalized_vanishing_from;
  /// Set iff HH (or the normalized complex) vanishes on the top half of [0, depth].
  bool stable = false;
};

struct WindowResult {
  CyclicVariant variant = CyclicVariant::Cyclic;
  int window = 0;
  /// Degrees 0..max_degree of the windowed complex: columns [-W, 0] for the
  /// negative variant, [-W, max_degree + 1] for the periodic one, [0, max_degree + 1]
  /// for the cyclic one.
  HomologyResult homology;
  TowerReport tower;
};

/// Windowed variant plus the S-tower in degrees 0..max_degree with depth
/// max_degree + W. The module needs truncation >= max_degree + W + 1.
/// Throws WindowTooSmall (W < 1 for the negative and periodic variants).
WindowResult hc_window(const SimplicialModule& m, CyclicVariant variant, int max_degree, int window);
WindowResult hc_window(const FiniteAlgebra& algebra, CyclicVariant variant, int max_degree, int window,
                       std::size_t budget = std::size_t{1} << 20);

}  // namespace cyclix
