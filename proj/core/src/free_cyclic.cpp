#include "cyclix/free_cyclic.hpp"

#include "cyclix/error.hpp"

namespace cyclix {
namespace {

Simplex tail(const Simplex& x) { return Simplex(x.begin() + 1, x.end()); }

Simplex with_rotation(std::int64_t r, const Simplex& y) {
  Simplex out{r};
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

}  // namespace

SpecPtr free_cyclic(const SpecPtr& y) {
  auto spec = std::make_shared<SimplicialSetSpec>();
  spec->name = "F(" + y->name + ")";
  spec->truncation = y->truncation;
  spec->elements = [y](int n) {
    const std::vector<Simplex> base = y->elements(n);
    std::vector<Simplex> out;
    out.reserve(base.size() * (static_cast<std::size_t>(n) + 1));
    for (int r = 0; r <= n; ++r) {
      for (const Simplex& b : base) out.push_back(with_rotation(r, b));
    }
    return out;
  };
  auto act = [y](int n, const Simplex& x, const CyclicMorphism& theta) {
    const CyclicMorphism g = CyclicMorphism::rotation(n, static_cast<int>(x.at(0)));
    const CyclicMorphism nf = compose(g, theta);
    return with_rotation(nf.rot, pullback(*y, nf.mono, tail(x)));
  };
  spec->face = [act](int n, int i, const Simplex& x) {
    return act(n, x, CyclicMorphism::from_delta(MonotoneMap::face(n, i)));
  };
  spec->degeneracy = [act](int n, int j, const Simplex& x) {
    return act(n, x, CyclicMorphism::from_delta(MonotoneMap::degeneracy(n, j)));
  };
  spec->cyclic = [](int n, const Simplex& x) { return with_rotation((x.at(0) + 1) % (n + 1), tail(x)); };
  return spec;
}

SimplicialMapSpec evaluation_map(const SpecPtr& x) {
  if (!x->is_cyclic()) throw Error(Errc::NotCyclic, x->name + " has no cyclic operator");
  SimplicialMapSpec f;
  f.name = "ev_" + x->name;
  f.source = free_cyclic(x);
  f.target = x;
  f.map = [x](int n, const Simplex& e) {
    Simplex out = tail(e);
    for (std::int64_t k = 0; k < e.at(0); ++k) out = x->cyclic(n, out);
    return out;
  };
  f.cyclic = true;
  return f;
}

SimplicialMapSpec unit_map(const SpecPtr& y) {
  SimplicialMapSpec f;
  f.name = "eta_" + y->name;
  f.source = y;
  f.target = free_cyclic(y);
  f.map = [](int, const Simplex& e) { return with_rotation(0, e); };
  f.cyclic = false;
  return f;
}

IdentityReport check_adjunction(const SpecPtr& y, const SpecPtr& x) {
  IdentityReport report;
  report.subject = "adjunction(" + y->name + ", " + x->name + ")";
  report.merge(check_map(unit_map(y)));
  report.merge(check_map(evaluation_map(x)));

  const SpecPtr fy = free_cyclic(y);
  const SimplicialMapSpec ev_fy = evaluation_map(fy);
  for (int n = 0; n <= fy->truncation; ++n) {
    for (const Simplex& e : fy->elements(n)) {
      // F(eta)(g, y) = (g, (id, y))
      const Simplex lifted = with_rotation(e.at(0), with_rotation(0, tail(e)));
      const Simplex back = ev_fy.map(n, lifted);
      report.record("ev o F(eta) = id", back == e, n,
                    [&] { return "ev F(eta) x = " + simplex_str(back) + " at x = " + simplex_str(e); });
    }
  }
  const SimplicialMapSpec ev_x = evaluation_map(x);
  for (int n = 0; n <= x->truncation; ++n) {
    for (const Simplex& e : x->elements(n)) {
      const Simplex back = ev_x.map(n, with_rotation(0, e));
      report.record("ev o eta = id", back == e, n,
                    [&] { return "ev eta x = " + simplex_str(back) + " at x = " + simplex_str(e); });
    }
  }
  return report;
}

}  // namespace cyclix
