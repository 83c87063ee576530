#include "cyclix/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cyclix/cyclic_homology.hpp"
#include "cyclix/error.hpp"
#include "cyclix/free_cyclic.hpp"
#include "cyclix/hochschild.hpp"
#include "cyclix/io_json.hpp"
#include "cyclix/kaehler.hpp"
#include "cyclix/simplicial_presets.hpp"
#include "cyclix/tensor_maps.hpp"

namespace cyclix::cli {

namespace {

struct JobConfig {
  std::string command;
  std::string suite;
  std::string preset;
  std::string input;
  std::string group = "cyclic:2";
  std::optional<int> central;
  std::string domain = "q";
  int max_degree = 4;
  bool normalized = false;
  bool unnormalized = false;
  std::string variant = "cyclic";
  int window = 4;
  bool json = false;
  std::size_t budget = default_tensor_budget;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Normalization mode_of(const JobConfig& cfg) {
  return cfg.unnormalized ? Normalization::Unnormalized : Normalization::Normalized;
}

std::string mode_name(Normalization m) { return m == Normalization::Normalized ? "normalized" : "unnormalized"; }

std::string ring_symbol(const ScalarDomain& dom) {
  switch (dom.kind()) {
    case ScalarDomain::Kind::Rationals:
      return "Q";
    case ScalarDomain::Kind::PrimeField:
      return "F_" + std::to_string(dom.characteristic());
    case ScalarDomain::Kind::Integers:
      return "Z";
  }
  return "?";
}

std::string group_str(const HomologyGroup& g, const ScalarDomain& dom) {
  std::vector<std::string> parts;
  if (g.betti == 1) parts.push_back(ring_symbol(dom));
  if (g.betti > 1) parts.push_back(ring_symbol(dom) + "^" + std::to_string(g.betti));
  for (const auto& t : g.torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) out += " + " + parts[k];
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? " " : "") + std::to_string(v[k]);
  return out;
}

void print_table(std::ostream& out, const std::string& symbol, const HomologyResult& h) {
  for (const auto& g : h.groups) out << symbol << "_" << g.degree << " = " << group_str(g, h.domain) << "\n";
  out << "betti: " << join(h.betti()) << "\n";
}

FiniteAlgebra load_algebra(const JobConfig& cfg, const ScalarDomain& dom) {
  if (!cfg.input.empty()) return parse_algebra(read_file(cfg.input), dom);
  if (cfg.preset.empty()) throw Error(Errc::InvalidInput, "an algebra needs --preset or --input");
  return FiniteAlgebra::from_preset(cfg.preset, dom);
}

std::string algebra_title(const JobConfig& cfg) { return cfg.input.empty() ? cfg.preset : cfg.input; }

FiniteGroup load_group(const JobConfig& cfg) {
  if (!cfg.input.empty()) return parse_group(read_file(cfg.input));
  return FiniteGroup::from_preset(cfg.group);
}

bool is_algebra_preset(const std::string& p) {
  return p == "unit" || p.rfind("truncpoly:", 0) == 0 || p.rfind("productfield:", 0) == 0 || p.rfind("group:", 0) == 0;
}

// Simplicial-set presets and JSON files; truncation N.
SpecPtr load_spec(const JobConfig& cfg, int truncation) {
  const std::string& p = cfg.preset;
  if (p.empty()) {
    if (cfg.input.empty()) throw Error(Errc::InvalidInput, "a simplicial set needs --preset or --input");
    return parse_simplicial_set(read_file(cfg.input));
  }
  if (p == "circle") return circle(truncation);
  if (p == "bg") return classifying_space(load_group(cfg), truncation, cfg.central);
  if (p == "cyclicbar") return cyclic_bar(load_group(cfg), truncation);
  if (p == "free-circle") return free_cyclic(circle(truncation));
  if (p == "free-bg") return free_cyclic(classifying_space(load_group(cfg), truncation, cfg.central));
  throw Error(Errc::InvalidInput, "unknown simplicial set preset '" + p + "'");
}

int cmd_homology(const JobConfig& cfg, std::ostream& out) {
  const ScalarDomain dom = ScalarDomain::parse(cfg.domain);
  const SpecPtr spec = load_spec(cfg, cfg.max_degree + 1);
  if (spec->truncation <= cfg.max_degree) {
    throw Error(Errc::TruncationTooSmall, "input stops at degree " + std::to_string(spec->truncation) +
                                              "; homology up to " + std::to_string(cfg.max_degree) + " needs one more");
  }
  const LinearizedModule m(spec, dom);
  const Normalization mode = mode_of(cfg);
  const HomologyResult h = homology(chain_complex(m, mode), 0, cfg.max_degree);
  if (cfg.json) {
    out << homology_to_json(h) << "\n";
    return Ok;
  }
  out << "# H(" << spec->name << ") over " << dom.name() << ", " << mode_name(mode) << ", degrees 0.." << cfg.max_degree
      << "\n";
  print_table(out, "H", h);
  return Ok;
}

int cmd_hh(const JobConfig& cfg, std::ostream& out) {
  const ScalarDomain dom = ScalarDomain::parse(cfg.domain);
  const FiniteAlgebra a = load_algebra(cfg, dom);
  HochschildOptions opts;
  opts.mode = mode_of(cfg);
  opts.budget = cfg.budget;
  const HomologyResult h = hh(a, 0, cfg.max_degree, opts);
  if (cfg.json) {
    out << homology_to_json(h) << "\n";
    return Ok;
  }
  out << "# HH(" << algebra_title(cfg) << ") over " << dom.name() << ", " << mode_name(opts.mode) << ", degrees 0.."
      << cfg.max_degree << "\n";
  print_table(out, "HH", h);
  return Ok;
}

CyclicVariant parse_variant(const std::string& v) {
  if (v == "cyclic") return CyclicVariant::Cyclic;
  if (v == "negative") return CyclicVariant::Negative;
  if (v == "periodic") return CyclicVariant::Periodic;
  throw Error(Errc::InvalidInput, "unknown variant '" + v + "'");
}

int cmd_hc(const JobConfig& cfg, std::ostream& out) {
  const ScalarDomain dom = ScalarDomain::parse(cfg.domain);
  const FiniteAlgebra a = load_algebra(cfg, dom);
  const CyclicVariant variant = parse_variant(cfg.variant);
  if (variant == CyclicVariant::Cyclic) {
    HcOptions opts;
    opts.budget = cfg.budget;
    const HomologyResult h = hc(a, 0, cfg.max_degree, opts);
    if (cfg.json) {
      out << homology_to_json(h) << "\n";
      return Ok;
    }
    out << "# HC(" << algebra_title(cfg) << ") over " << dom.name() << ", degrees 0.." << cfg.max_degree << "\n";
    print_table(out, "HC", h);
    return Ok;
  }
  const WindowResult w = hc_window(a, variant, cfg.max_degree, cfg.window, cfg.budget);
  if (cfg.json) {
    out << window_to_json(w) << "\n";
    return Ok;
  }
  const std::string symbol = variant == CyclicVariant::Negative ? "HC^-" : "HC^per";
  const std::string columns = variant == CyclicVariant::Negative
                                  ? "[-" + std::to_string(cfg.window) + ", 0]"
                                  : "[-" + std::to_string(cfg.window) + ", " + std::to_string(cfg.max_degree + 1) + "]";
  out << "# " << symbol << "(" << algebra_title(cfg) << ") over " << dom.name() << ", window " << cfg.window
      << ", columns " << columns << ", degrees 0.." << cfg.max_degree << "\n";
  print_table(out, symbol, w.homology);
  out << "S-tower HC_n <- HC_{n+2} <- ... up to degree " << w.tower.depth << "\n";
  for (const auto& d : w.tower.degrees) {
    out << "  n=" << d.degree << "  betti " << join(d.betti) << "  S ranks " << join(d.s_ranks) << "  "
        << (d.stabilized() ? "stable from step " + std::to_string(d.stable_from) : std::string("not stable")) << "\n";
  }
  out << "HH vanishing from degree: "
      << (w.tower.hh_vanishing_from ? std::to_string(*w.tower.hh_vanishing_from) : std::string("not detected")) << "\n";
  out << "flag: " << (w.tower.stable ? "STABLE" : "UNSTABLE") << "\n";
  return Ok;
}

int emit_report(const IdentityReport& r, const JobConfig& cfg, std::ostream& out) {
  if (cfg.json) {
    out << identity_report_to_json(r) << "\n";
    return r.passed() ? Ok : VerificationFailed;
  }
  out << "# " << r.subject << "\n";
  for (const auto& c : r.relations) {
    out << (c.failed == 0 ? "PASS  " : "FAIL  ") << c.relation << "  (" << c.checked << " checked, " << c.failed
        << " failed)\n";
  }
  for (const auto& v : r.violations) out << "  violation: " << v.relation << " in degree " << v.degree << ": " << v.detail << "\n";
  out << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return r.passed() ? Ok : VerificationFailed;
}

int verify_relations(const JobConfig& cfg, std::ostream& out) {
  const ScalarDomain dom = ScalarDomain::parse(cfg.domain);
  if (is_algebra_preset(cfg.preset)) {
    const HochschildModule m(load_algebra(cfg, dom), cfg.max_degree, true, cfg.budget);
    IdentityReport r = check_module_identities(m, IdentityMode::Cyclic);
    r.subject = "cyclic module relations of " + m.name() + " up to degree " + std::to_string(cfg.max_degree);
    if (cfg.max_degree >= 1) r.merge(bprime_homotopy_check(m, cfg.max_degree - 1));
    return emit_report(r, cfg, out);
  }
  const SpecPtr spec = load_spec(cfg, cfg.max_degree);
  const IdentityMode mode = spec->is_cyclic() ? IdentityMode::Cyclic : IdentityMode::Simplicial;
  IdentityReport r = check_identities(*spec, mode);
  r.subject = std::string(mode == IdentityMode::Cyclic ? "cyclic" : "simplicial") + " relations of " + spec->name +
              " up to degree " + std::to_string(spec->truncation);
  return emit_report(r, cfg, out);
}

int verify_sbi(const JobConfig& cfg, std::ostream& out) {
  const ScalarDomain dom = ScalarDomain::parse(cfg.domain);
  const SbiReport r = connes_maps(load_algebra(cfg, dom), cfg.max_degree, cfg.budget);
  if (cfg.json) {
    out << sbi_to_json(r) << "\n";
    return r.passed() ? Ok : VerificationFailed;
  }
  out << "# Connes sequence HH_n -> HC_n -> HC_{n-2} -> HH_{n-1} for " << algebra_title(cfg) << " over " << dom.name()
      << ", n = 0.." << cfg.max_degree << "\n";
  out << (r.b_squared_zero ? "PASS  " : "FAIL  ") << "B^2 = 0\n";
  out << (r.b_anticommutes ? "PASS  " : "FAIL  ") << "bB + Bb = 0\n";
  out << "HH betti: " << join(r.hh_betti) << "\n";
  out << "HC betti: " << join(r.hc_betti) << "\n";
  for (const auto& n : r.nodes) {
    out << (n.exact ? "PASS  " : "FAIL  ") << "n=" << n.segment << "  exact at " << n.node << " (" << n.maps
        << ")  im " << n.image_dim << "  ker " << n.kernel_dim << "\n";
  }
  out << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return r.passed() ? Ok : VerificationFailed;
}

int verify_hkr(const JobConfig& cfg, std::ostream& out) {
  const ScalarDomain dom = ScalarDomain::parse(cfg.domain);
  const HkrReport r = hkr_check(load_algebra(cfg, dom), cfg.max_degree, cfg.budget);
  if (cfg.json) {
    out << hkr_to_json(r) << "\n";
    return r.passed() ? Ok : VerificationFailed;
  }
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "# HKR maps for " << algebra_title(cfg) << " over " << dom.name() << ", n = 0.." << cfg.max_degree << "\n";
  for (const auto& d : r.degrees) {
    const bool ok = d.pi_eps_identity && d.eps_cycles && d.pi_kills_boundaries;
    out << (ok ? "PASS  " : "FAIL  ") << "n=" << d.degree << "  dim Omega " << d.omega_dim << "  dim HH " << d.hh_betti
        << "  pi eps = id " << yes(d.pi_eps_identity) << "  b eps = 0 " << yes(d.eps_cycles) << "  pi b = 0 "
        << yes(d.pi_kills_boundaries) << "  eps pi = id on HH " << yes(d.eps_pi_identity) << "  isomorphism "
        << yes(d.isomorphism()) << "\n";
  }
  out << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return r.passed() ? Ok : VerificationFailed;
}

int verify_aw_ez(const JobConfig& cfg, std::ostream& out) {
  const ScalarDomain dom = ScalarDomain::parse(cfg.domain);
  const int n = cfg.max_degree + 1;
  const std::string algebra = cfg.preset.empty() ? "truncpoly:2" : cfg.preset;
  const ModulePtr s1 = std::make_shared<LinearizedModule>(circle(n), dom);
  const ModulePtr ch = std::make_shared<HochschildModule>(FiniteAlgebra::from_preset(algebra, dom), n, true, cfg.budget);
  IdentityReport all;
  all.subject = "AW/EZ over " + dom.name() + " up to degree " + std::to_string(cfg.max_degree) + " for pairs of " +
                s1->name() + " and " + ch->name();
  for (const auto& left : {s1, ch}) {
    for (const auto& right : {s1, ch}) all.merge(check_aw_ez(left, right, cfg.max_degree));
  }
  return emit_report(all, cfg, out);
}

int verify_adjunction(const JobConfig& cfg, std::ostream& out) {
  JobConfig y_cfg = cfg;
  if (y_cfg.preset.empty()) y_cfg.preset = "circle";
  const SpecPtr y = load_spec(y_cfg, cfg.max_degree);
  const SpecPtr x = cyclic_bar(load_group(cfg), cfg.max_degree);
  IdentityReport r = check_adjunction(y, x);
  r.subject = "adjunction F -| U with Y = " + y->name + ", X = " + x->name;
  return emit_report(r, cfg, out);
}

int verify_exercise_bz(const JobConfig& cfg, std::ostream& out) {
  const SimplicialMapSpec f = circle_to_bz(cfg.max_degree);
  IdentityReport r = check_map(f);
  r.subject = f.name + " up to degree " + std::to_string(cfg.max_degree);
  return emit_report(r, cfg, out);
}

int dispatch(const JobConfig& cfg, std::ostream& out) {
  if (cfg.command == "homology") return cmd_homology(cfg, out);
  if (cfg.command == "hh") return cmd_hh(cfg, out);
  if (cfg.command == "hc") return cmd_hc(cfg, out);
  if (cfg.suite == "relations") return verify_relations(cfg, out);
  if (cfg.suite == "sbi") return verify_sbi(cfg, out);
  if (cfg.suite == "hkr") return verify_hkr(cfg, out);
  if (cfg.suite == "aw-ez") return verify_aw_ez(cfg, out);
  if (cfg.suite == "adjunction") return verify_adjunction(cfg, out);
  return verify_exercise_bz(cfg, out);
}

int exit_code_of(Errc code) {
  switch (code) {
    case Errc::BudgetExceeded:
      return ResourceExceeded;
    case Errc::MatrixMismatch:
    case Errc::RelationFailure:
    case Errc::SignCheckFailed:
    case Errc::BoundarySquareNonzero:
    case Errc::NotAChainMap:
    case Errc::Internal:
      return VerificationFailed;
    default:
      return BadInput;
  }
}

void add_common(CLI::App* sub, JobConfig& cfg) {
  sub->add_option("--preset", cfg.preset, "Built-in input");
  sub->add_option("--input", cfg.input, "JSON input file");
  sub->add_option("--group", cfg.group, "Group preset for bg and cyclicbar")->capture_default_str();
  sub->add_option("--central", cfg.central, "Central element index making B.G cyclic");
  sub->add_option("--domain", cfg.domain, "q, zp:<p> or z")->capture_default_str();
  sub->add_option("--max-degree", cfg.max_degree, "Largest degree reported")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  auto* norm = sub->add_flag("--normalized", cfg.normalized, "Normalized chains (default)");
  sub->add_flag("--unnormalized", cfg.unnormalized, "Unnormalized chains")->excludes(norm);
  sub->add_option("--variant", cfg.variant, "cyclic, negative or periodic")
      ->capture_default_str()
      ->check(CLI::IsMember({"cyclic", "negative", "periodic"}));
  sub->add_option("--window", cfg.window, "Columns to the left of 0 for the windowed variants")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  sub->add_flag("--json", cfg.json, "JSON output");
  sub->add_option("--budget", cfg.budget, "Largest number of basis tensors")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  JobConfig cfg;
  CLI::App app("Exact simplicial, Hochschild and cyclic homology", "cyclix");
  app.require_subcommand(1);
  auto* homology_cmd = app.add_subcommand("homology", "Homology of a simplicial set: circle, bg, cyclicbar or --input");
  auto* hh_cmd = app.add_subcommand("hh", "Hochschild homology of an algebra");
  auto* hc_cmd = app.add_subcommand("hc", "Cyclic homology and its windowed variants");
  auto* verify_cmd = app.add_subcommand("verify", "Verification suites");
  verify_cmd->add_option("suite", cfg.suite, "relations, sbi, hkr, aw-ez, adjunction or exercise-bz")
      ->required()
      ->check(CLI::IsMember({"relations", "sbi", "hkr", "aw-ez", "adjunction", "exercise-bz"}));
  for (auto* sub : {homology_cmd, hh_cmd, hc_cmd, verify_cmd}) add_common(sub, cfg);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return BadInput;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  try {
    return dispatch(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_of(e.code());
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return ResourceExceeded;
  }
}

}  // namespace cyclix::cli
