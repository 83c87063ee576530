#pragma once

#include <string>
#include <vector>

namespace cyclix {

/// Morphism [source] -> [target] of the simplex category: a nondecreasing map
/// {0..source} -> {0..target}.
class MonotoneMap {
 public:
  /// Throws ObjectMismatch unless images has source+1 nondecreasing values in [0, target].
  MonotoneMap(int source, int target, std::vector<int> images);

  static MonotoneMap identity(int n);
  /// delta_i : [n-1] -> [n], skips i.
  static MonotoneMap face(int n, int i);
  /// sigma_j : [n+1] -> [n], hits j twice.
  static MonotoneMap degeneracy(int n, int j);

  int source() const noexcept { return source_; }
  int target() const noexcept { return target_; }
  const std::vector<int>& images() const noexcept { return images_; }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }

  std::string str() const;

  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;

 private:
  int source_;
  int target_;
  std::vector<int> images_;
};

/// f o g; throws ObjectMismatch unless g.target() == f.source().
MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g);

/// Canonical factorization f = (faces) o (degeneracies). Both words are listed
/// in application order: degeneracies strictly decreasing (the merged values
/// j with f(j) = f(j+1)), then faces strictly increasing (the omitted values).
struct EpiMonoFactorization {
  std::vector<int> degeneracies;
  std::vector<int> faces;
};

EpiMonoFactorization factorize_epi_mono(const MonotoneMap& f);

/// Applies the words (application order) starting from [source].
MonotoneMap from_words(int source, const std::vector<int>& degeneracies, const std::vector<int>& faces);

/// Every monotone map [m] -> [n], in lexicographic order of image tuples.
std::vector<MonotoneMap> all_monotone_maps(int m, int n);

}  // namespace cyclix
