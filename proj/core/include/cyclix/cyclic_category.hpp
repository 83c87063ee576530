#pragma once

#include <string>
#include <vector>

#include "cyclix/monotone.hpp"

namespace cyclix {

/// Generators of the cyclic category, tagged by their target object [n]:
/// delta_i : [n-1] -> [n], sigma_j : [n+1] -> [n], tau_n : [n] -> [n].
struct Generator {
  enum class Kind { Face, Degeneracy, Cyclic };
  Kind kind;
  int index;  // ignored for Cyclic
  int object;

  static Generator face(int n, int i) { return {Kind::Face, i, n}; }
  static Generator degeneracy(int n, int j) { return {Kind::Degeneracy, j, n}; }
  static Generator cyclic(int n) { return {Kind::Cyclic, 0, n}; }

  int source() const;
  int target() const { return object; }
  std::string str() const;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Morphism [m] -> [n] of the cyclic category in the form mono o tau_m^rot.
/// Invariant: 0 <= rot <= m; the pair is unique for the morphism it denotes.
struct CyclicMorphism {
  MonotoneMap mono;
  int rot;

  int source() const { return mono.source(); }
  int target() const { return mono.target(); }
  std::string str() const;

  static CyclicMorphism identity(int n) { return {MonotoneMap::identity(n), 0}; }
  static CyclicMorphism from_delta(MonotoneMap f) { return {std::move(f), 0}; }
  /// tau_n^r with r taken modulo n+1.
  static CyclicMorphism rotation(int n, int r);

  friend bool operator==(const CyclicMorphism&, const CyclicMorphism&) = default;
};

/// f o g. Throws ObjectMismatch unless g.target() == f.source().
CyclicMorphism compose(const CyclicMorphism& f, const CyclicMorphism& g);

/// Normal form of g_1 o g_2 o ... o g_k (word listed outermost first).
/// Throws NonComposableWord on an empty or ill-typed word.
CyclicMorphism cyclic_normal_form(const std::vector<Generator>& word);

/// A generator word (outermost first) whose normal form is f: faces, then
/// degeneracies, then rot copies of tau_m.
std::vector<Generator> to_word(const CyclicMorphism& f);

/// Every morphism [m] -> [n], ordered by (mono, rot).
std::vector<CyclicMorphism> all_cyclic_morphisms(int m, int n);

}  // namespace cyclix
