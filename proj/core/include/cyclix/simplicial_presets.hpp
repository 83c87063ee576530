#pragma once

#include <optional>

#include "cyclix/group.hpp"
#include "cyclix/simplicial_set.hpp"

namespace cyclix {

/// The simplicial circle, cyclic. Degree n has codes {0..n}: code 0 is the
/// totally degenerate point and code i >= 1 is s_{n-1}..^s_{i-1}..s_0(tau).
/// All operators are derived from composition in the cyclic category.
SpecPtr circle(int truncation);

/// Rotation r with code i = tau_n^r viewed in Hom([n],[0]); exposed for tests.
int circle_rotation_of_code(int n, int code);

/// B.G with degree n = G^n. When z is given (and central) the spec is cyclic
/// with t_n(g_1..g_n) = (z (g_1..g_n)^{-1}, g_1..g_{n-1}). Throws NotCentral.
SpecPtr classifying_space(const FiniteGroup& group, int truncation, std::optional<int> central = std::nullopt);

/// Cyclic bar construction: degree n = G^{n+1}.
SpecPtr cyclic_bar(const FiniteGroup& group, int truncation);

/// B.Z with z = 1, materialized as the closure of the given seeds under all
/// operators. Throws BudgetExceeded past max_elements simplices.
SpecPtr integers_classifying_space(int truncation, const std::vector<std::vector<Simplex>>& seeds,
                                   std::size_t max_elements = 1u << 20);

/// S^1 -> B.Z sending tau to (1), extended along degeneracies.
SimplicialMapSpec circle_to_bz(int truncation);

}  // namespace cyclix
