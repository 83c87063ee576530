#include "cyclix/io_json.hpp"

#include <json.hpp>

#include "cyclix/error.hpp"

namespace cyclix {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

// Runs f, turning JSON type and key errors into InvalidInput.
template <class F>
auto guarded(const char* what, F f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidInput, std::string(what) + ": " + e.what());
  }
}

Rational coefficient(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::exception&) {
      throw Error(Errc::InvalidInput, "bad coefficient '" + v.get<std::string>() + "'");
    }
  }
  throw Error(Errc::InvalidInput, "coefficient must be an integer or a \"p/q\" string");
}

SparseVec coefficient_vector(const json& v, std::size_t dim, const ScalarDomain& dom) {
  if (!v.is_array() || v.size() != dim) {
    throw Error(Errc::InvalidInput, "coefficient vector must have length " + std::to_string(dim));
  }
  std::vector<Entry> raw;
  for (std::size_t k = 0; k < dim; ++k) raw.push_back({k, dom.reduce(coefficient(v[k]))});
  return canonicalize(std::move(raw), dom);
}

FiniteGroup group_from(const json& j) {
  if (j.is_string()) return FiniteGroup::from_preset(j.get<std::string>());
  if (!j.is_object()) throw Error(Errc::InvalidInput, "group must be an object or a preset string");
  if (j.contains("preset")) return FiniteGroup::from_preset(j.at("preset").get<std::string>());
  if (!j.contains("table")) throw Error(Errc::InvalidInput, "group needs \"table\" or \"preset\"");
  auto table = j.at("table").get<std::vector<std::vector<int>>>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  const std::string name = j.value("name", std::string("group"));
  return FiniteGroup(std::move(table), std::move(labels), name);
}

int positive_param(const json& params, const char* key) {
  const json& v = params.is_object() ? params.at(key) : params;
  const int n = v.get<int>();
  if (n < 1) throw Error(Errc::InvalidInput, std::string(key) + " must be positive");
  return n;
}

json homology_json(const HomologyResult& h) {
  json groups = json::array();
  for (const auto& g : h.groups) {
    json torsion = json::array();
    for (const auto& t : g.torsion) torsion.push_back(t.get_str());
    groups.push_back({{"degree", g.degree}, {"betti", g.betti}, {"torsion", torsion}});
  }
  return {{"domain", h.domain.name()}, {"groups", groups}};
}

HomologyResult homology_of(const json& j) {
  HomologyResult h;
  h.domain = ScalarDomain::parse(j.at("domain").get<std::string>());
  for (const auto& g : j.at("groups")) {
    HomologyGroup group;
    group.degree = g.at("degree").get<int>();
    group.betti = g.at("betti").get<std::size_t>();
    for (const auto& t : g.at("torsion")) group.torsion.emplace_back(t.get<std::string>());
    h.groups.push_back(std::move(group));
  }
  return h;
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::optional<int> optional_of(const json& v) {
  if (v.is_null()) return std::nullopt;
  return v.get<int>();
}

}  // namespace

FiniteGroup parse_group(const std::string& text) {
  const json j = parse_text(text);
  return guarded("group input", [&] { return group_from(j); });
}

FiniteAlgebra parse_algebra(const std::string& text, ScalarDomain dom) {
  const json j = parse_text(text);
  return guarded("algebra input", [&] {
    if (!j.is_object()) throw Error(Errc::InvalidInput, "algebra input must be an object");
    if (j.contains("preset")) {
      const std::string kind = j.at("preset").get<std::string>();
      const json params = j.value("params", json::object());
      if (kind == "unit") return FiniteAlgebra::ground(dom);
      if (kind == "group") return FiniteAlgebra::group_algebra(group_from(params.is_object() ? params.at("group") : params), dom);
      if (kind == "truncpoly") return FiniteAlgebra::truncated_polynomial(positive_param(params, "k"), dom);
      if (kind == "productfield") return FiniteAlgebra::product_field(positive_param(params, "m"), dom);
      throw Error(Errc::InvalidInput, "unknown algebra preset '" + kind + "'");
    }
    const auto dim = j.at("dim").get<std::size_t>();
    if (dim == 0) throw Error(Errc::InvalidInput, "dim must be positive");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<std::string>>();
    } else {
      for (std::size_t k = 0; k < dim; ++k) labels.push_back("e" + std::to_string(k));
    }
    if (labels.size() != dim) throw Error(Errc::InvalidInput, "labels must have length dim");
    const json& rows = j.at("table");
    if (!rows.is_array() || rows.size() != dim) throw Error(Errc::InvalidInput, "table must be dim x dim");
    std::vector<std::vector<SparseVec>> table(dim);
    for (std::size_t a = 0; a < dim; ++a) {
      if (!rows[a].is_array() || rows[a].size() != dim) throw Error(Errc::InvalidInput, "table must be dim x dim");
      for (std::size_t b = 0; b < dim; ++b) table[a].push_back(coefficient_vector(rows[a][b], dim, dom));
    }
    return FiniteAlgebra(dom, std::move(labels), coefficient_vector(j.at("unit"), dim, dom), std::move(table),
                         j.value("name", std::string("algebra")));
  });
}

SpecPtr parse_simplicial_set(const std::string& text) {
  const json j = parse_text(text);
  return guarded("simplicial set input", [&] {
    const json& degrees = j.at("degrees");
    if (!degrees.is_array() || degrees.empty()) throw Error(Errc::InvalidInput, "\"degrees\" must be a non-empty array");
    const int top = static_cast<int>(degrees.size()) - 1;
    std::vector<std::size_t> sizes;
    for (const auto& d : degrees) sizes.push_back(d.at("size").get<std::size_t>());
    using Table = std::vector<std::vector<std::int64_t>>;
    auto read_table = [&](const json& d, const char* key, int n, std::size_t count, int target) {
      const Table t = d.at(key).get<Table>();
      if (t.size() != count) {
        throw Error(Errc::InvalidInput, std::string(key) + " of degree " + std::to_string(n) + " needs " +
                                            std::to_string(count) + " tables");
      }
      for (const auto& row : t) {
        if (row.size() != sizes[static_cast<std::size_t>(n)]) {
          throw Error(Errc::InvalidInput, std::string(key) + " table of degree " + std::to_string(n) + " has wrong length");
        }
        for (auto v : row) {
          if (v < 0 || static_cast<std::size_t>(v) >= sizes[static_cast<std::size_t>(target)]) {
            throw Error(Errc::InvalidInput, std::string(key) + " entry out of range in degree " + std::to_string(n));
          }
        }
      }
      return t;
    };
    std::vector<Table> faces(degrees.size());
    std::vector<Table> degens(degrees.size());
    std::vector<std::vector<std::int64_t>> cyclic(degrees.size());
    const bool has_cyclic = degrees[0].contains("cyclic");
    for (int n = 0; n <= top; ++n) {
      const json& d = degrees[static_cast<std::size_t>(n)];
      const auto k = static_cast<std::size_t>(n);
      if (n >= 1) faces[k] = read_table(d, "faces", n, k + 1, n - 1);
      if (n < top) degens[k] = read_table(d, "degeneracies", n, k + 1, n + 1);
      if (d.contains("cyclic") != has_cyclic) throw Error(Errc::InvalidInput, "cyclic table missing in some degree");
      if (has_cyclic) {
        cyclic[k] = d.at("cyclic").get<std::vector<std::int64_t>>();
        if (cyclic[k].size() != sizes[k]) throw Error(Errc::InvalidInput, "cyclic table of degree " + std::to_string(n) + " has wrong length");
        for (auto v : cyclic[k]) {
          if (v < 0 || static_cast<std::size_t>(v) >= sizes[k]) throw Error(Errc::InvalidInput, "cyclic entry out of range");
        }
      }
    }
    auto spec = std::make_shared<SimplicialSetSpec>();
    spec->name = j.value("name", std::string("input"));
    spec->truncation = top;
    spec->elements = [sizes](int n) {
      std::vector<Simplex> out;
      for (std::size_t k = 0; k < sizes[static_cast<std::size_t>(n)]; ++k) out.push_back({static_cast<std::int64_t>(k)});
      return out;
    };
    spec->face = [faces](int n, int i, const Simplex& x) {
      return Simplex{faces[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][static_cast<std::size_t>(x[0])]};
    };
    spec->degeneracy = [degens](int n, int j, const Simplex& x) {
      return Simplex{degens[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)][static_cast<std::size_t>(x[0])]};
    };
    if (has_cyclic) {
      spec->cyclic = [cyclic](int n, const Simplex& x) {
        return Simplex{cyclic[static_cast<std::size_t>(n)][static_cast<std::size_t>(x[0])]};
      };
    }
    return SpecPtr(spec);
  });
}

std::string homology_to_json(const HomologyResult& h) { return homology_json(h).dump(2); }

HomologyResult homology_from_json(const std::string& text) {
  const json j = parse_text(text);
  return guarded("homology report", [&] { return homology_of(j); });
}

std::string sbi_to_json(const SbiReport& r) {
  json nodes = json::array();
  for (const auto& n : r.nodes) {
    nodes.push_back({{"node", n.node},
                     {"segment", n.segment},
                     {"maps", n.maps},
                     {"im_dim", n.image_dim},
                     {"ker_dim", n.kernel_dim},
                     {"exact", n.exact}});
  }
  const json j = {{"max_degree", r.max_degree},
                  {"hh_betti", r.hh_betti},
                  {"hc_betti", r.hc_betti},
                  {"b_squared_zero", r.b_squared_zero},
                  {"b_anticommutes", r.b_anticommutes},
                  {"nodes", nodes},
                  {"passed", r.passed()}};
  return j.dump(2);
}

SbiReport sbi_from_json(const std::string& text) {
  const json j = parse_text(text);
  return guarded("sbi report", [&] {
    SbiReport r;
    r.max_degree = j.at("max_degree").get<int>();
    r.hh_betti = j.at("hh_betti").get<std::vector<std::size_t>>();
    r.hc_betti = j.at("hc_betti").get<std::vector<std::size_t>>();
    r.b_squared_zero = j.at("b_squared_zero").get<bool>();
    r.b_anticommutes = j.at("b_anticommutes").get<bool>();
    for (const auto& n : j.at("nodes")) {
      r.nodes.push_back({n.at("node").get<std::string>(), n.at("segment").get<int>(), n.at("maps").get<std::string>(),
                         n.at("im_dim").get<std::size_t>(), n.at("ker_dim").get<std::size_t>(), n.at("exact").get<bool>()});
    }
    return r;
  });
}

std::string window_to_json(const WindowResult& w) {
  json degrees = json::array();
  for (const auto& d : w.tower.degrees) {
    degrees.push_back({{"degree", d.degree},
                       {"betti", d.betti},
                       {"s_ranks", d.s_ranks},
                       {"stable_from", d.stable_from},
                       {"stabilized", d.stabilized()}});
  }
  const json tower = {{"depth", w.tower.depth},
                      {"stable", w.tower.stable},
                      {"hh_vanishing_from", optional_int(w.tower.hh_vanishing_from)},
                      {"normalized_vanishing_from", optional_int(w.tower.normalized_vanishing_from)},
                      {"degrees", degrees}};
  const json j = {{"variant", variant_name(w.variant)},
                  {"window", w.window},
                  {"homology", homology_json(w.homology)},
                  {"tower", tower}};
  return j.dump(2);
}

WindowResult window_from_json(const std::string& text) {
  const json j = parse_text(text);
  return guarded("window report", [&] {
    WindowResult w;
    const std::string v = j.at("variant").get<std::string>();
    if (v == "cyclic") {
      w.variant = CyclicVariant::Cyclic;
    } else if (v == "negative") {
      w.variant = CyclicVariant::Negative;
    } else if (v == "periodic") {
      w.variant = CyclicVariant::Periodic;
    } else {
      throw Error(Errc::InvalidInput, "unknown variant '" + v + "'");
    }
    w.window = j.at("window").get<int>();
    w.homology = homology_of(j.at("homology"));
    const json& t = j.at("tower");
    w.tower.depth = t.at("depth").get<int>();
    w.tower.stable = t.at("stable").get<bool>();
    w.tower.hh_vanishing_from = optional_of(t.at("hh_vanishing_from"));
    w.tower.normalized_vanishing_from = optional_of(t.at("normalized_vanishing_from"));
    for (const auto& d : t.at("degrees")) {
      TowerDegree deg;
      deg.degree = d.at("degree").get<int>();
      deg.betti = d.at("betti").get<std::vector<std::size_t>>();
      deg.s_ranks = d.at("s_ranks").get<std::vector<std::size_t>>();
      deg.stable_from = d.at("stable_from").get<int>();
      w.tower.degrees.push_back(std::move(deg));
    }
    return w;
  });
}

std::string identity_report_to_json(const IdentityReport& r) {
  json relations = json::array();
  for (const auto& c : r.relations) {
    relations.push_back({{"relation", c.relation}, {"checked", c.checked}, {"failed", c.failed}});
  }
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"relation", v.relation}, {"degree", v.degree}, {"detail", v.detail}});
  }
  const json j = {{"subject", r.subject}, {"passed", r.passed()}, {"relations", relations}, {"violations", violations}};
  return j.dump(2);
}

IdentityReport identity_report_from_json(const std::string& text) {
  const json j = parse_text(text);
  return guarded("identity report", [&] {
    IdentityReport r;
    r.subject = j.at("subject").get<std::string>();
    for (const auto& c : j.at("relations")) {
      r.relations.push_back(
          {c.at("relation").get<std::string>(), c.at("checked").get<std::size_t>(), c.at("failed").get<std::size_t>()});
    }
    for (const auto& v : j.at("violations")) {
      r.violations.push_back({v.at("relation").get<std::string>(), v.at("degree").get<int>(), v.at("detail").get<std::string>()});
    }
    return r;
  });
}

std::string hkr_to_json(const HkrReport& r) {
  json degrees = json::array();
  for (const auto& d : r.degrees) {
    degrees.push_back({{"degree", d.degree},
                       {"omega_dim", d.omega_dim},
                       {"hh_betti", d.hh_betti},
                       {"pi_eps_identity", d.pi_eps_identity},
                       {"eps_cycles", d.eps_cycles},
                       {"pi_kills_boundaries", d.pi_kills_boundaries},
                       {"eps_pi_identity", d.eps_pi_identity},
                       {"isomorphism", d.isomorphism()}});
  }
  const json j = {{"degrees", degrees}, {"passed", r.passed()}};
  return j.dump(2);
}

HkrReport hkr_from_json(const std::string& text) {
  const json j = parse_text(text);
  return guarded("hkr report", [&] {
    HkrReport r;
    for (const auto& d : j.at("degrees")) {
      HkrDegree deg;
      deg.degree = d.at("degree").get<int>();
      deg.omega_dim = d.at("omega_dim").get<std::size_t>();
      deg.hh_betti = d.at("hh_betti").get<std::size_t>();
      deg.pi_eps_identity = d.at("pi_eps_identity").get<bool>();
      deg.eps_cycles = d.at("eps_cycles").get<bool>();
      deg.pi_kills_boundaries = d.at("pi_kills_boundaries").get<bool>();
      deg.eps_pi_identity = d.at("eps_pi_identity").get<bool>();
      r.degrees.push_back(deg);
    }
    return r;
  });
}

}  // namespace cyclix
