#pragma once

#include "cyclix/simplicial_set.hpp"

namespace cyclix {

/// Left adjoint of the forgetful functor from cyclic to simplicial sets.
/// Degree n is Aut([n]) x Y_n, coded (r, y...) with r the rotation tau_n^r.
/// A morphism theta acts by (g, y) -> (g', phi'^* y) where g o theta = phi' o g'
/// is the cyclic normal form; t acts by g -> g o tau.
SpecPtr free_cyclic(const SpecPtr& y);

/// ev : F(X) -> X, (tau^r, x) -> t^r x. Throws NotCyclic.
SimplicialMapSpec evaluation_map(const SpecPtr& x);

/// eta : Y -> F(Y), y -> (id, y); a simplicial (not cyclic) map.
SimplicialMapSpec unit_map(const SpecPtr& y);

/// Naturality of eta and ev plus both triangle identities:
/// ev_{F(Y)} o F(eta_Y) = id and ev_X o eta_X = id.
IdentityReport check_adjunction(const SpecPtr& y, const SpecPtr& x);

}  // namespace cyclix
