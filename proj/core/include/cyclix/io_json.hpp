#pragma once

#include <string>

#include "cyclix/algebra.hpp"
#include "cyclix/cyclic_homology.hpp"
#include "cyclix/group.hpp"
#include "cyclix/homology.hpp"
#include "cyclix/kaehler.hpp"
#include "cyclix/simplicial_set.hpp"

namespace cyclix {

/// {"table": [[..]], "labels"?: [..], "name"?: ".."} or {"preset": "cyclic:3"}.
/// Throws InvalidInput on malformed text, InvalidGroup on a bad table.
FiniteGroup parse_group(const std::string& text);

/// {"dim", "labels"?, "unit": [c..], "table": [[[c..]]], "name"?} with
/// coefficients as integers or "p/q" strings, or
/// {"preset": "group" | "truncpoly" | "productfield" | "unit", "params": {..}}
/// with params {"group": <group json or preset>}, {"k": n} or {"m": n}.
/// Throws InvalidInput, NotAssociative, NoUnit.
FiniteAlgebra parse_algebra(const std::string& text, ScalarDomain dom);

/// Finite simplicial set by operator tables: {"name"?, "degrees": [{"size",
/// "faces": [[..] per i], "degeneracies": [[..] per j], "cyclic"?: [..]}]}.
/// Elements of degree n are coded {k} for k < size; table entries index the
/// target degree. Truncation is the last listed degree. The cyclic table
/// must be given in every degree or none. Throws InvalidInput.
SpecPtr parse_simplicial_set(const std::string& text);

/// Deterministic serializations; each has a parser returning the same data.
/// Homology: {"domain", "groups": [{"degree", "betti", "torsion": ["2", ..]}]}.
std::string homology_to_json(const HomologyResult& h);
HomologyResult homology_from_json(const std::string& text);

/// {"max_degree", "hh_betti", "hc_betti", "b_squared_zero", "b_anticommutes",
///  "nodes": [{"node", "segment", "maps", "im_dim", "ker_dim", "exact"}], "passed"}.
std::string sbi_to_json(const SbiReport& r);
SbiReport sbi_from_json(const std::string& text);

/// {"variant", "window", "homology": <homology>, "tower": {"depth", "stable",
///  "hh_vanishing_from", "normalized_vanishing_from",
///  "degrees": [{"degree", "betti", "s_ranks", "stable_from", "stabilized"}]}}.
std::string window_to_json(const WindowResult& w);
WindowResult window_from_json(const std::string& text);

/// {"subject", "passed", "relations": [{"relation", "checked", "failed"}],
///  "violations": [{"relation", "degree", "detail"}]}.
std::string identity_report_to_json(const IdentityReport& r);
IdentityReport identity_report_from_json(const std::string& text);

/// {"degrees": [{"degree", "omega_dim", "hh_betti", "pi_eps_identity",
///  "eps_cycles", "pi_kills_boundaries", "eps_pi_identity", "isomorphism"}], "passed"}.
std::string hkr_to_json(const HkrReport& r);
HkrReport hkr_from_json(const std::string& text);

}  // namespace cyclix
