#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "cyclix/cyclic_category.hpp"

namespace cyclix {

/// Element code of a simplex: a canonical integer tuple.
using Simplex = std::vector<std::int64_t>;

std::string simplex_str(const Simplex& x);

struct SimplexHash {
  std::size_t operator()(const Simplex& x) const noexcept;
};

/// Truncated simplicial set given by formulas. Operators are only ever
/// evaluated on enumerated elements: faces in degrees 1..N, degeneracies in
/// degrees 0..N-1, the cyclic operator in degrees 0..N.
struct SimplicialSetSpec {
  std::string name;
  int truncation = 0;
  std::function<std::vector<Simplex>(int n)> elements;
  std::function<Simplex(int n, int i, const Simplex& x)> face;        // X_n -> X_{n-1}
  std::function<Simplex(int n, int j, const Simplex& x)> degeneracy;  // X_n -> X_{n+1}
  std::function<Simplex(int n, const Simplex& x)> cyclic;             // X_n -> X_n; empty if absent

  bool is_cyclic() const { return static_cast<bool>(cyclic); }
};

using SpecPtr = std::shared_ptr<const SimplicialSetSpec>;

/// Degreewise simplex -> position lookup in enumeration order.
class SimplexIndex {
 public:
  explicit SimplexIndex(std::vector<Simplex> elements);
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Simplex>& elements() const noexcept { return elements_; }
  const Simplex& at(std::size_t k) const { return elements_[k]; }
  /// Throws RelationFailure if x is not enumerated.
  std::size_t position(const Simplex& x) const;
  bool contains(const Simplex& x) const { return index_.count(x) != 0; }

 private:
  std::vector<Simplex> elements_;
  std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
};

/// phi^* y for phi : [m] -> [n] in the simplex category and y in X_n.
Simplex pullback(const SimplicialSetSpec& spec, const MonotoneMap& phi, const Simplex& y);
/// f^* y for a cyclic-category morphism; needs a cyclic spec unless f.rot = 0.
Simplex pullback(const SimplicialSetSpec& spec, const CyclicMorphism& f, const Simplex& y);

struct SimplicialMapSpec {
  std::string name;
  SpecPtr source;
  SpecPtr target;
  std::function<Simplex(int n, const Simplex& x)> map;
  bool cyclic = false;
};

enum class IdentityMode { Simplicial, Cyclic };

struct RelationCount {
  std::string relation;
  std::size_t checked = 0;
  std::size_t failed = 0;
};

struct RelationViolation {
  std::string relation;
  int degree;
  std::string detail;
};

/// Outcome of an exhaustive relation check. At most max_recorded violations
/// are kept verbatim; counts are always complete.
struct IdentityReport {
  static constexpr std::size_t max_recorded = 32;

  std::string subject;
  std::vector<RelationCount> relations;
  std::vector<RelationViolation> violations;

  bool passed() const;
  std::size_t checked() const;
  std::size_t failed() const;
  void record(const std::string& relation, bool ok, int degree, const std::function<std::string()>& detail);
  void merge(const IdentityReport& other);
};

/// Throws CyclicModeOnNonCyclic when mode is Cyclic and the spec has no t.
IdentityReport check_identities(const SimplicialSetSpec& spec, IdentityMode mode);

/// Naturality against faces and degeneracies (and t when map.cyclic), up to
/// the smaller truncation. Throws CyclicModeOnNonCyclic for a cyclic map
/// between non-cyclic specs.
IdentityReport check_map(const SimplicialMapSpec& map);

}  // namespace cyclix
