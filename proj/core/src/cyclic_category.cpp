#include "cyclix/cyclic_category.hpp"

#include <sstream>

#include "cyclix/error.hpp"

namespace cyclix {
namespace {

// Morphisms [m] -> [n] are realized as nondecreasing f : Z -> Z with
// f(x + m + 1) = f(x) + n + 1, modulo translation by multiples of n + 1.
// Only the values on 0..m are stored.
struct Periodic {
  int m;
  int n;
  std::vector<long> values;

  long operator()(long x) const {
    const long period = m + 1;
    long q = x / period;
    long r = x % period;
    if (r < 0) {
      r += period;
      --q;
    }
    return values[static_cast<std::size_t>(r)] + q * (n + 1);
  }
};

Periodic lift(const CyclicMorphism& f) {
  Periodic p{f.source(), f.target(), {}};
  const Periodic mono{f.source(), f.target(), {f.mono.images().begin(), f.mono.images().end()}};
  for (int x = 0; x <= f.source(); ++x) p.values.push_back(mono(x - f.rot));
  return p;
}

Periodic compose(const Periodic& f, const Periodic& g) {
  Periodic out{g.m, f.n, {}};
  for (int x = 0; x <= g.m; ++x) out.values.push_back(f(g.values[static_cast<std::size_t>(x)]));
  return out;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

CyclicMorphism normalize(const Periodic& f) {
  const long period = f.n + 1;
  int found = -1;
  std::vector<int> images;
  for (int r = 0; r <= f.m; ++r) {
    const long base = floor_div(f(r), period) * period;
    if (f(r + f.m) - base > f.n) continue;
    if (found >= 0) throw Error(Errc::Internal, "cyclic normal form is not unique");
    found = r;
    images.clear();
    for (int y = 0; y <= f.m; ++y) images.push_back(static_cast<int>(f(y + r) - base));
  }
  if (found < 0) throw Error(Errc::Internal, "no cyclic normal form found");
  return {MonotoneMap(f.m, f.n, std::move(images)), found};
}

Periodic generator_map(const Generator& g) {
  const int n = g.object;
  switch (g.kind) {
    case Generator::Kind::Face:
      return lift(CyclicMorphism::from_delta(MonotoneMap::face(n, g.index)));
    case Generator::Kind::Degeneracy:
      return lift(CyclicMorphism::from_delta(MonotoneMap::degeneracy(n, g.index)));
    case Generator::Kind::Cyclic: {
      Periodic p{n, n, {}};
      for (int x = 0; x <= n; ++x) p.values.push_back(x - 1);
      return p;
    }
  }
  throw Error(Errc::Internal, "unknown generator kind");
}

bool generator_valid(const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::Face:
      return g.object >= 1 && g.index >= 0 && g.index <= g.object;
    case Generator::Kind::Degeneracy:
      return g.object >= 0 && g.index >= 0 && g.index <= g.object;
    case Generator::Kind::Cyclic:
      return g.object >= 0;
  }
  return false;
}

}  // namespace

int Generator::source() const {
  switch (kind) {
    case Kind::Face:
      return object - 1;
    case Kind::Degeneracy:
      return object + 1;
    case Kind::Cyclic:
      return object;
  }
  return object;
}

std::string Generator::str() const {
  switch (kind) {
    case Kind::Face:
      return "delta_" + std::to_string(index) + "^" + std::to_string(object);
    case Kind::Degeneracy:
      return "sigma_" + std::to_string(index) + "^" + std::to_string(object);
    case Kind::Cyclic:
      return "tau_" + std::to_string(object);
  }
  return "?";
}

std::string CyclicMorphism::str() const { return mono.str() + " o tau^" + std::to_string(rot); }

CyclicMorphism CyclicMorphism::rotation(int n, int r) {
  const int period = n + 1;
  const int k = ((r % period) + period) % period;
  Periodic p{n, n, {}};
  for (int x = 0; x <= n; ++x) p.values.push_back(x - k);
  return normalize(p);
}

CyclicMorphism compose(const CyclicMorphism& f, const CyclicMorphism& g) {
  if (g.target() != f.source()) {
    throw Error(Errc::ObjectMismatch, "cannot compose " + f.str() + " after " + g.str());
  }
  return normalize(compose(lift(f), lift(g)));
}

CyclicMorphism cyclic_normal_form(const std::vector<Generator>& word) {
  if (word.empty()) throw Error(Errc::NonComposableWord, "empty word");
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (!generator_valid(word[k])) throw Error(Errc::NonComposableWord, "invalid generator " + word[k].str());
    if (k > 0 && word[k].target() != word[k - 1].source()) {
      throw Error(Errc::NonComposableWord, word[k - 1].str() + " after " + word[k].str());
    }
  }
  Periodic acc = generator_map(word.back());
  for (std::size_t k = word.size() - 1; k-- > 0;) acc = compose(generator_map(word[k]), acc);
  return normalize(acc);
}

std::vector<Generator> to_word(const CyclicMorphism& f) {
  const EpiMonoFactorization fac = factorize_epi_mono(f.mono);
  std::vector<Generator> word;
  int object = f.target();
  for (auto it = fac.faces.rbegin(); it != fac.faces.rend(); ++it) {
    word.push_back(Generator::face(object, *it));
    --object;
  }
  for (auto it = fac.degeneracies.rbegin(); it != fac.degeneracies.rend(); ++it) {
    word.push_back(Generator::degeneracy(object, *it));
    ++object;
  }
  for (int k = 0; k < f.rot; ++k) word.push_back(Generator::cyclic(f.source()));
  if (f.rot == 0 && fac.faces.empty() && fac.degeneracies.empty()) {
    // tau^(m+1) = id
    word.assign(static_cast<std::size_t>(f.source()) + 1, Generator::cyclic(f.source()));
  }
  return word;
}

std::vector<CyclicMorphism> all_cyclic_morphisms(int m, int n) {
  std::vector<CyclicMorphism> out;
  for (MonotoneMap& phi : all_monotone_maps(m, n)) {
    for (int r = 0; r <= m; ++r) out.push_back({phi, r});
  }
  return out;
}

}  // namespace cyclix
