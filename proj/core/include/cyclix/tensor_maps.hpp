#pragma once

#include "cyclix/bicomplex.hpp"
#include "cyclix/chain_map.hpp"
#include "cyclix/simplicial_module.hpp"

namespace cyclix {

/// diagonal: chains of the degreewise tensor module C_n (x) D_n.
/// product: Tot of C_p (x) D_q with d = d_C (x) 1 + (-1)^p 1 (x) d_D, degrees 0..N.
/// aw : diagonal -> product, x (x) y -> sum_p d_{p+1}..d_n x (x) d_0^p y.
/// ez : product -> diagonal, the signed shuffle sum.
struct ComparisonMaps {
  ComplexPtr diagonal;
  ComplexPtr product;
  std::map<Cell, std::size_t> product_offset;
  ChainMap aw;
  ChainMap ez;
};

/// Throws TruncationMismatch unless both factors share truncation and domain.
ComparisonMaps comparison_maps(const ModulePtr& c, const ModulePtr& d, Normalization mode);

ChainMap aw_map(const ModulePtr& c, const ModulePtr& d, Normalization mode);
ChainMap ez_map(const ModulePtr& c, const ModulePtr& d, Normalization mode);

/// (p,q)-shuffles as (mu, nu, sign): mu has p entries, nu has q, both increasing.
struct Shuffle {
  std::vector<int> mu;
  std::vector<int> nu;
  int sign;
};
std::vector<Shuffle> shuffles(int p, int q);

/// AW o EZ = id on the normalized product in degrees 0..max_degree, and
/// EZ o AW = id on H_n of the diagonal, n <= max_degree, in both modes.
/// Needs truncation > max_degree; throws TruncationTooSmall.
IdentityReport check_aw_ez(const ModulePtr& c, const ModulePtr& d, int max_degree);

}  // namespace cyclix
