#include "cyclix/simplicial_presets.hpp"

#include <set>

#include "cyclix/error.hpp"

namespace cyclix {
namespace {

using Table = std::vector<std::vector<int>>;

CyclicMorphism circle_element(int n, int rot) {
  return {MonotoneMap(n, 0, std::vector<int>(static_cast<std::size_t>(n) + 1, 0)), rot};
}

// rot_of_code[n][code], for degrees 0..top.
Table circle_codes(int top) {
  Table rot_of_code;
  for (int n = 0; n <= top; ++n) {
    std::vector<int> row{0};
    for (int code = 1; code <= n; ++code) {
      CyclicMorphism x = circle_element(1, 1);
      int degree = 1;
      for (int j = 0; j <= n - 1; ++j) {
        if (j == code - 1) continue;
        x = compose(x, CyclicMorphism::from_delta(MonotoneMap::degeneracy(degree, j)));
        ++degree;
      }
      row.push_back(x.rot);
    }
    rot_of_code.push_back(std::move(row));
  }
  return rot_of_code;
}

Table invert(const Table& rot_of_code) {
  Table code_of_rot;
  for (const auto& row : rot_of_code) {
    std::vector<int> inv(row.size(), -1);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 0 || static_cast<std::size_t>(row[c]) >= row.size() || inv[static_cast<std::size_t>(row[c])] >= 0) {
        throw Error(Errc::Internal, "circle codes are not a bijection onto rotations");
      }
      inv[static_cast<std::size_t>(row[c])] = static_cast<int>(c);
    }
    code_of_rot.push_back(std::move(inv));
  }
  return code_of_rot;
}

std::vector<Simplex> all_tuples(int order, int length) {
  std::vector<Simplex> out;
  Simplex x(static_cast<std::size_t>(length), 0);
  for (;;) {
    out.push_back(x);
    int k = length - 1;
    while (k >= 0 && x[static_cast<std::size_t>(k)] == order - 1) {
      x[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
    ++x[static_cast<std::size_t>(k)];
  }
  return out;
}

template <class Mul>
Simplex bar_face(const Simplex& g, int n, int i, Mul mul) {
  Simplex out;
  out.reserve(g.size());
  if (i == 0) {
    out.assign(g.begin() + 1, g.end());
  } else if (i == n) {
    out.assign(g.begin(), g.end() - 1);
  } else {
    for (int k = 0; k < n; ++k) {
      if (k == i - 1) {
        out.push_back(mul(g[static_cast<std::size_t>(k)], g[static_cast<std::size_t>(k) + 1]));
        ++k;
      } else {
        out.push_back(g[static_cast<std::size_t>(k)]);
      }
    }
  }
  return out;
}

Simplex insert_at(const Simplex& g, std::size_t position, std::int64_t value) {
  Simplex out = g;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(position), value);
  return out;
}

}  // namespace

int circle_rotation_of_code(int n, int code) {
  const Table t = circle_codes(n);
  return t[static_cast<std::size_t>(n)].at(static_cast<std::size_t>(code));
}

SpecPtr circle(int truncation) {
  if (truncation < 0) throw Error(Errc::TruncationTooSmall, "negative truncation");
  const auto rot_of_code = std::make_shared<const Table>(circle_codes(truncation + 1));
  const auto code_of_rot = std::make_shared<const Table>(invert(*rot_of_code));
  auto spec = std::make_shared<SimplicialSetSpec>();
  spec->name = "circle";
  spec->truncation = truncation;
  spec->elements = [](int n) {
    std::vector<Simplex> out;
    for (int c = 0; c <= n; ++c) out.push_back({c});
    return out;
  };
  auto act = [rot_of_code, code_of_rot](int n, const Simplex& x, const CyclicMorphism& theta) -> Simplex {
    const int rot = (*rot_of_code)[static_cast<std::size_t>(n)][static_cast<std::size_t>(x.at(0))];
    const CyclicMorphism y = compose(circle_element(n, rot), theta);
    return {(*code_of_rot)[static_cast<std::size_t>(theta.source())][static_cast<std::size_t>(y.rot)]};
  };
  spec->face = [act](int n, int i, const Simplex& x) {
    return act(n, x, CyclicMorphism::from_delta(MonotoneMap::face(n, i)));
  };
  spec->degeneracy = [act](int n, int j, const Simplex& x) {
    return act(n, x, CyclicMorphism::from_delta(MonotoneMap::degeneracy(n, j)));
  };
  spec->cyclic = [act](int n, const Simplex& x) { return act(n, x, CyclicMorphism::rotation(n, 1)); };
  return spec;
}

SpecPtr classifying_space(const FiniteGroup& group, int truncation, std::optional<int> central) {
  if (truncation < 0) throw Error(Errc::TruncationTooSmall, "negative truncation");
  if (central && !group.is_central(*central)) {
    throw Error(Errc::NotCentral, "element " + std::to_string(*central) + " is not central in " + group.name());
  }
  auto g = std::make_shared<const FiniteGroup>(group);
  auto spec = std::make_shared<SimplicialSetSpec>();
  spec->name = "B(" + group.name() + ")";
  spec->truncation = truncation;
  spec->elements = [g](int n) { return all_tuples(g->order(), n); };
  const auto mul = [g](std::int64_t a, std::int64_t b) -> std::int64_t {
    return g->mul(static_cast<int>(a), static_cast<int>(b));
  };
  spec->face = [mul](int n, int i, const Simplex& x) { return bar_face(x, n, i, mul); };
  spec->degeneracy = [g](int, int j, const Simplex& x) {
    return insert_at(x, static_cast<std::size_t>(j), g->identity());
  };
  if (central) {
    const int z = *central;
    spec->cyclic = [g, z](int n, const Simplex& x) {
      if (n == 0) return x;
      int product = g->identity();
      for (std::int64_t v : x) product = g->mul(product, static_cast<int>(v));
      Simplex out{g->mul(z, g->inverse(product))};
      out.insert(out.end(), x.begin(), x.end() - 1);
      return out;
    };
  }
  return spec;
}

SpecPtr cyclic_bar(const FiniteGroup& group, int truncation) {
  if (truncation < 0) throw Error(Errc::TruncationTooSmall, "negative truncation");
  auto g = std::make_shared<const FiniteGroup>(group);
  auto spec = std::make_shared<SimplicialSetSpec>();
  spec->name = "Gamma(" + group.name() + ")";
  spec->truncation = truncation;
  spec->elements = [g](int n) { return all_tuples(g->order(), n + 1); };
  spec->face = [g](int n, int i, const Simplex& x) {
    Simplex out;
    if (i == n) {
      out.push_back(g->mul(static_cast<int>(x[static_cast<std::size_t>(n)]), static_cast<int>(x[0])));
      out.insert(out.end(), x.begin() + 1, x.end() - 1);
      return out;
    }
    for (int k = 0; k <= n; ++k) {
      if (k == i) {
        out.push_back(g->mul(static_cast<int>(x[static_cast<std::size_t>(k)]), static_cast<int>(x[static_cast<std::size_t>(k) + 1])));
        ++k;
      } else {
        out.push_back(x[static_cast<std::size_t>(k)]);
      }
    }
    return out;
  };
  spec->degeneracy = [g](int, int j, const Simplex& x) {
    return insert_at(x, static_cast<std::size_t>(j) + 1, g->identity());
  };
  spec->cyclic = [](int n, const Simplex& x) {
    Simplex out{x[static_cast<std::size_t>(n)]};
    out.insert(out.end(), x.begin(), x.end() - 1);
    return out;
  };
  return spec;
}

SpecPtr integers_classifying_space(int truncation, const std::vector<std::vector<Simplex>>& seeds,
                                   std::size_t max_elements) {
  if (truncation < 0) throw Error(Errc::TruncationTooSmall, "negative truncation");
  auto spec = std::make_shared<SimplicialSetSpec>();
  spec->name = "B(Z)";
  spec->truncation = truncation;
  const auto add = [](std::int64_t a, std::int64_t b) { return a + b; };
  spec->face = [add](int n, int i, const Simplex& x) { return bar_face(x, n, i, add); };
  spec->degeneracy = [](int, int j, const Simplex& x) { return insert_at(x, static_cast<std::size_t>(j), 0); };
  spec->cyclic = [](int n, const Simplex& x) {
    if (n == 0) return x;
    std::int64_t sum = 0;
    for (std::int64_t v : x) sum += v;
    Simplex out{1 - sum};
    out.insert(out.end(), x.begin(), x.end() - 1);
    return out;
  };

  std::vector<std::set<Simplex>> support(static_cast<std::size_t>(truncation) + 1);
  std::vector<Simplex> frontier_list;
  std::size_t total = 0;
  const auto insert = [&](const Simplex& x) {
    const auto n = x.size();
    if (n > static_cast<std::size_t>(truncation)) return;
    if (support[n].insert(x).second) {
      if (++total > max_elements) throw Error(Errc::BudgetExceeded, "B(Z) support exceeds element budget");
      frontier_list.push_back(x);
    }
  };
  for (const auto& degree : seeds) {
    for (const Simplex& x : degree) insert(x);
  }
  while (!frontier_list.empty()) {
    const Simplex x = frontier_list.back();
    frontier_list.pop_back();
    const int n = static_cast<int>(x.size());
    for (int i = 0; n >= 1 && i <= n; ++i) insert(spec->face(n, i, x));
    for (int j = 0; n + 1 <= truncation && j <= n; ++j) insert(spec->degeneracy(n, j, x));
    insert(spec->cyclic(n, x));
  }
  auto elements = std::make_shared<std::vector<std::vector<Simplex>>>();
  for (const auto& s : support) elements->emplace_back(s.begin(), s.end());
  spec->elements = [elements](int n) { return (*elements)[static_cast<std::size_t>(n)]; };
  return spec;
}

SimplicialMapSpec circle_to_bz(int truncation) {
  const SpecPtr source = circle(truncation);
  auto image = [](int n, const Simplex& x) {
    const int code = static_cast<int>(x.at(0));
    Simplex y = code == 0 ? Simplex{} : Simplex{1};
    if (code == 0) {
      for (int k = 0; k < n; ++k) y = insert_at(y, 0, 0);
      return y;
    }
    for (int j = 0; j <= n - 1; ++j) {
      if (j == code - 1) continue;
      y = insert_at(y, static_cast<std::size_t>(j), 0);
    }
    return y;
  };
  std::vector<std::vector<Simplex>> seeds;
  for (int n = 0; n <= truncation; ++n) {
    std::vector<Simplex> degree;
    for (const Simplex& x : source->elements(n)) degree.push_back(image(n, x));
    seeds.push_back(std::move(degree));
  }
  SimplicialMapSpec f;
  f.name = "circle -> B(Z)";
  f.source = source;
  f.target = integers_classifying_space(truncation, seeds);
  f.map = image;
  f.cyclic = true;
  return f;
}

}  // namespace cyclix
