#include "cyclix/simplicial_set.hpp"

#include <algorithm>
#include <sstream>

#include "cyclix/error.hpp"

namespace cyclix {

std::string simplex_str(const Simplex& x) {
  std::string s = "(";
  for (std::size_t k = 0; k < x.size(); ++k) s += (k ? "," : "") + std::to_string(x[k]);
  return s + ")";
}

std::size_t SimplexHash::operator()(const Simplex& x) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ x.size();
  for (std::int64_t v : x) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

SimplexIndex::SimplexIndex(std::vector<Simplex> elements) : elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (!index_.emplace(elements_[k], k).second) {
      throw Error(Errc::RelationFailure, "duplicate simplex " + simplex_str(elements_[k]));
    }
  }
}

std::size_t SimplexIndex::position(const Simplex& x) const {
  const auto it = index_.find(x);
  if (it == index_.end()) throw Error(Errc::RelationFailure, "simplex " + simplex_str(x) + " is not enumerated");
  return it->second;
}

Simplex pullback(const SimplicialSetSpec& spec, const MonotoneMap& phi, const Simplex& y) {
  const EpiMonoFactorization fac = factorize_epi_mono(phi);
  Simplex x = y;
  int degree = phi.target();
  for (auto it = fac.faces.rbegin(); it != fac.faces.rend(); ++it) {
    x = spec.face(degree, *it, x);
    --degree;
  }
  for (auto it = fac.degeneracies.rbegin(); it != fac.degeneracies.rend(); ++it) {
    x = spec.degeneracy(degree, *it, x);
    ++degree;
  }
  return x;
}

Simplex pullback(const SimplicialSetSpec& spec, const CyclicMorphism& f, const Simplex& y) {
  Simplex x = pullback(spec, f.mono, y);
  if (f.rot == 0) return x;
  if (!spec.is_cyclic()) throw Error(Errc::NotCyclic, spec.name + " has no cyclic operator");
  for (int k = 0; k < f.rot; ++k) x = spec.cyclic(f.source(), x);
  return x;
}

bool IdentityReport::passed() const {
  return failed() == 0;
}

std::size_t IdentityReport::checked() const {
  std::size_t total = 0;
  for (const auto& r : relations) total += r.checked;
  return total;
}

std::size_t IdentityReport::failed() const {
  std::size_t total = 0;
  for (const auto& r : relations) total += r.failed;
  return total;
}

void IdentityReport::record(const std::string& relation, bool ok, int degree,
                            const std::function<std::string()>& detail) {
  auto it = std::find_if(relations.begin(), relations.end(), [&](const RelationCount& r) { return r.relation == relation; });
  if (it == relations.end()) {
    relations.push_back({relation, 0, 0});
    it = relations.end() - 1;
  }
  ++it->checked;
  if (ok) return;
  ++it->failed;
  if (violations.size() < max_recorded) violations.push_back({relation, degree, detail()});
}

void IdentityReport::merge(const IdentityReport& other) {
  for (const auto& r : other.relations) {
    auto it = std::find_if(relations.begin(), relations.end(), [&](const RelationCount& q) { return q.relation == r.relation; });
    if (it == relations.end()) {
      relations.push_back(r);
    } else {
      it->checked += r.checked;
      it->failed += r.failed;
    }
  }
  for (const auto& v : other.violations) {
    if (violations.size() < max_recorded) violations.push_back(v);
  }
}

namespace {

std::string op(const char* name, int index) { return std::string(name) + "_" + std::to_string(index); }

std::string mismatch(const std::string& lhs, const Simplex& a, const std::string& rhs, const Simplex& b,
                     const Simplex& x) {
  return lhs + " x = " + simplex_str(a) + " but " + rhs + " x = " + simplex_str(b) + " at x = " + simplex_str(x);
}

std::vector<SimplexIndex> enumerate(const SimplicialSetSpec& spec, int top) {
  std::vector<SimplexIndex> out;
  for (int n = 0; n <= top; ++n) out.emplace_back(spec.elements(n));
  return out;
}

}  // namespace

IdentityReport check_identities(const SimplicialSetSpec& spec, IdentityMode mode) {
  const bool cyclic = mode == IdentityMode::Cyclic;
  if (cyclic && !spec.is_cyclic()) throw Error(Errc::CyclicModeOnNonCyclic, spec.name + " has no cyclic operator");
  const int N = spec.truncation;
  const auto sets = enumerate(spec, N);
  IdentityReport report;
  report.subject = spec.name;

  auto member = [&](int n, const Simplex& y, const std::string& what, const Simplex& x) {
    report.record("closure", sets[static_cast<std::size_t>(n)].contains(y), n,
                  [&] { return what + " x = " + simplex_str(y) + " is not an element of degree " + std::to_string(n) +
                               " (x = " + simplex_str(x) + ")"; });
  };

  for (int n = 0; n <= N; ++n) {
    for (const Simplex& x : sets[static_cast<std::size_t>(n)].elements()) {
      std::vector<Simplex> d(static_cast<std::size_t>(n) + 1), s(static_cast<std::size_t>(n) + 1);
      if (n >= 1) {
        for (int i = 0; i <= n; ++i) {
          d[static_cast<std::size_t>(i)] = spec.face(n, i, x);
          member(n - 1, d[static_cast<std::size_t>(i)], op("d", i), x);
        }
      }
      if (n + 1 <= N) {
        for (int j = 0; j <= n; ++j) {
          s[static_cast<std::size_t>(j)] = spec.degeneracy(n, j, x);
          member(n + 1, s[static_cast<std::size_t>(j)], op("s", j), x);
        }
      }
      // d_i d_j = d_{j-1} d_i for i < j
      if (n >= 2) {
        for (int j = 1; j <= n; ++j) {
          for (int i = 0; i < j; ++i) {
            const Simplex lhs = spec.face(n - 1, i, d[static_cast<std::size_t>(j)]);
            const Simplex rhs = spec.face(n - 1, j - 1, d[static_cast<std::size_t>(i)]);
            report.record("d_i d_j = d_{j-1} d_i", lhs == rhs, n, [&] {
              return mismatch(op("d", i) + op("d", j), lhs, op("d", j - 1) + op("d", i), rhs, x);
            });
          }
        }
      }
      // s_i s_j = s_{j+1} s_i for i <= j
      if (n + 2 <= N) {
        for (int j = 0; j <= n; ++j) {
          for (int i = 0; i <= j; ++i) {
            const Simplex lhs = spec.degeneracy(n + 1, i, s[static_cast<std::size_t>(j)]);
            const Simplex rhs = spec.degeneracy(n + 1, j + 1, s[static_cast<std::size_t>(i)]);
            report.record("s_i s_j = s_{j+1} s_i", lhs == rhs, n, [&] {
              return mismatch(op("s", i) + op("s", j), lhs, op("s", j + 1) + op("s", i), rhs, x);
            });
          }
        }
      }
      // d_i s_j
      if (n + 1 <= N) {
        for (int j = 0; j <= n; ++j) {
          for (int i = 0; i <= n + 1; ++i) {
            const Simplex lhs = spec.face(n + 1, i, s[static_cast<std::size_t>(j)]);
            Simplex rhs;
            std::string relation;
            std::string rhs_name;
            if (i < j) {
              rhs = spec.degeneracy(n - 1, j - 1, d[static_cast<std::size_t>(i)]);
              relation = "d_i s_j = s_{j-1} d_i";
              rhs_name = op("s", j - 1) + op("d", i);
            } else if (i == j || i == j + 1) {
              rhs = x;
              relation = "d_i s_j = id";
              rhs_name = "id";
            } else {
              rhs = spec.degeneracy(n - 1, j, d[static_cast<std::size_t>(i - 1)]);
              relation = "d_i s_j = s_j d_{i-1}";
              rhs_name = op("s", j) + op("d", i - 1);
            }
            report.record(relation, lhs == rhs, n + 1,
                          [&] { return mismatch(op("d", i) + op("s", j), lhs, rhs_name, rhs, x); });
          }
        }
      }
      if (!cyclic) continue;
      const Simplex t = spec.cyclic(n, x);
      member(n, t, "t", x);
      if (n >= 1) {
        for (int i = 1; i <= n; ++i) {
          const Simplex lhs = spec.face(n, i, t);
          const Simplex rhs = spec.cyclic(n - 1, d[static_cast<std::size_t>(i - 1)]);
          report.record("d_i t = t d_{i-1}", lhs == rhs, n,
                        [&] { return mismatch(op("d", i) + "t", lhs, "t" + op("d", i - 1), rhs, x); });
        }
        const Simplex lhs = spec.face(n, 0, t);
        report.record("d_0 t = d_n", lhs == d[static_cast<std::size_t>(n)], n,
                      [&] { return mismatch("d_0t", lhs, op("d", n), d[static_cast<std::size_t>(n)], x); });
      }
      if (n + 1 <= N) {
        for (int i = 1; i <= n; ++i) {
          const Simplex lhs = spec.degeneracy(n, i, t);
          const Simplex rhs = spec.cyclic(n + 1, s[static_cast<std::size_t>(i - 1)]);
          report.record("s_i t = t s_{i-1}", lhs == rhs, n,
                        [&] { return mismatch(op("s", i) + "t", lhs, "t" + op("s", i - 1), rhs, x); });
        }
        const Simplex lhs = spec.degeneracy(n, 0, t);
        const Simplex rhs = spec.cyclic(n + 1, spec.cyclic(n + 1, s[static_cast<std::size_t>(n)]));
        report.record("s_0 t = t^2 s_n", lhs == rhs, n,
                      [&] { return mismatch("s_0t", lhs, "t^2" + op("s", n), rhs, x); });
      }
      Simplex power = t;
      for (int k = 1; k <= n; ++k) power = spec.cyclic(n, power);
      report.record("t^{n+1} = id", power == x, n, [&] { return mismatch("t^{n+1}", power, "id", x, x); });
    }
  }
  return report;
}

IdentityReport check_map(const SimplicialMapSpec& f) {
  const SimplicialSetSpec& src = *f.source;
  const SimplicialSetSpec& tgt = *f.target;
  if (f.cyclic && (!src.is_cyclic() || !tgt.is_cyclic())) {
    throw Error(Errc::CyclicModeOnNonCyclic, f.name + " is declared cyclic between non-cyclic specs");
  }
  const int N = std::min(src.truncation, tgt.truncation);
  const auto src_sets = enumerate(src, N);
  const auto tgt_sets = enumerate(tgt, N);
  IdentityReport report;
  report.subject = f.name;
  for (int n = 0; n <= N; ++n) {
    for (const Simplex& x : src_sets[static_cast<std::size_t>(n)].elements()) {
      const Simplex fx = f.map(n, x);
      report.record("closure", tgt_sets[static_cast<std::size_t>(n)].contains(fx), n, [&] {
        return "f x = " + simplex_str(fx) + " is not an element of the target (x = " + simplex_str(x) + ")";
      });
      if (n >= 1) {
        for (int i = 0; i <= n; ++i) {
          const Simplex lhs = f.map(n - 1, src.face(n, i, x));
          const Simplex rhs = tgt.face(n, i, fx);
          report.record("f d_i = d_i f", lhs == rhs, n,
                        [&] { return mismatch("f" + op("d", i), lhs, op("d", i) + "f", rhs, x); });
        }
      }
      if (n + 1 <= N) {
        for (int j = 0; j <= n; ++j) {
          const Simplex lhs = f.map(n + 1, src.degeneracy(n, j, x));
          const Simplex rhs = tgt.degeneracy(n, j, fx);
          report.record("f s_j = s_j f", lhs == rhs, n,
                        [&] { return mismatch("f" + op("s", j), lhs, op("s", j) + "f", rhs, x); });
        }
      }
      if (f.cyclic) {
        const Simplex lhs = f.map(n, src.cyclic(n, x));
        const Simplex rhs = tgt.cyclic(n, fx);
        report.record("f t = t f", lhs == rhs, n, [&] { return mismatch("ft", lhs, "tf", rhs, x); });
      }
    }
  }
  return report;
}

}  // namespace cyclix
