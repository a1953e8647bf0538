// Command-line front end for the locrep library.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "locrep/abelian.hpp"
#include "locrep/braid.hpp"
#include "locrep/catalog.hpp"
#include "locrep/errors.hpp"
#include "locrep/fingerprint.hpp"
#include "locrep/gamma.hpp"
#include "locrep/json_io.hpp"
#include "locrep/rep_spec.hpp"
#include "locrep/search.hpp"
#include "locrep/stabilization.hpp"
#include "locrep/tietze.hpp"

using namespace locrep;

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_ids(const std::vector<FamilyId>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += " ";
    out += to_string(id);
  }
  return out.empty() ? "-" : out;
}

int run_verify_quad(const std::string& text, bool as_json) {
  Quad q = Quad::parse(text);
  QuadReport r = check_quad(q);
  auto ids = identify(q);
  if (as_json) {
    std::cout << verify_json(q, r, ids).dump(2) << "\n";
    return r.valid() ? kOk : kDomainFailure;
  }
  std::cout << "quad: " << to_string(q) << "\n";
  std::cout << "tau basis: " << yes_no(r.tau_is_basis) << "\n";
  std::cout << "kappa basis: " << yes_no(r.kappa_is_basis) << "\n";
  auto eq = [](const char* name, const EquationCheck& e) {
    std::cout << "[" << name << "] " << (e.holds() ? "holds" : "fails") << ": "
              << to_string(e.lhs, WordStyle::Compact) << " vs " << to_string(e.rhs, WordStyle::Compact)
              << "\n";
  };
  eq("T", r.top);
  eq("M", r.middle);
  eq("B", r.bottom);
  if (r.valid()) {
    std::cout << "valid: yes\n";
    std::cout << "families: " << join_ids(ids) << "\n";
    std::cout << "canonical: " << to_string(canonicalize(q)) << "\n";
    return kOk;
  }
  std::cout << "valid: no (fails " << r.failures() << ")\n";
  return kDomainFailure;
}

int run_verify_pair(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw ParseError("core must be written \"A,B\": \"" + text + "\"");
  }
  Word a = Word::parse(text.substr(0, comma));
  Word b = Word::parse(text.substr(comma + 1));
  if (a.max_generator() > 2 || b.max_generator() > 2) throw RankError("core words must be over {a, b}");
  bool basis = is_basis(a, b);
  auto nielsen = nielsen_reduce(a, b);
  std::cout << "core: (" << to_string(a, WordStyle::Compact) << "," << to_string(b, WordStyle::Compact)
            << ")\n";
  std::cout << "basis (commutator test): " << yes_no(basis) << "\n";
  std::cout << "basis (Nielsen reduction): " << yes_no(is_basis_nielsen(a, b)) << "\n";
  std::cout << "Nielsen reduced pair: (" << to_string(nielsen.pair.first, WordStyle::Compact) << ","
            << to_string(nielsen.pair.second, WordStyle::Compact) << ") after " << nielsen.moves.size()
            << " moves\n";
  if (!basis) return kDomainFailure;
  AutF2 core(a, b);
  std::cout << "inverse: " << to_string(invert_aut(core)) << "\n";
  auto list = [](const std::vector<AutF2>& v) {
    std::string out;
    for (const auto& c : v) out += (out.empty() ? "" : " ") + to_string(c);
    return out.empty() ? std::string("-") : out;
  };
  std::cout << "outgoing: " << list(outgoing_cores(core)) << "\n";
  std::cout << "incoming: " << list(incoming_cores(core)) << "\n";
  S1Report s1 = check_S1(core);
  std::cout << "S1: " << to_string(s1.status) << " (" << s1.witness << ")\n";
  return kOk;
}

int run_classify(int max_len, int jobs, bool as_json) {
  SearchStats stats;
  auto classes = classify_search(max_len, jobs, &stats);
  if (as_json) {
    std::cout << classify_json(max_len, classes).dump(2) << "\n";
    return kOk;
  }
  std::cout << "max length: " << max_len << "\n";
  std::cout << "basis pairs: " << stats.basis_pairs << "\n";
  std::cout << "quads tested: " << stats.quads_tested << "\n";
  std::cout << "solutions: " << stats.solutions << "\n";
  std::cout << "canonical classes: " << classes.size() << "\n";
  for (const auto& q : classes) std::cout << to_string(q) << "  " << join_ids(identify(q)) << "\n";
  return kOk;
}

int run_catalog(const std::string& family, std::optional<int> r, bool all) {
  FamilyId base = FamilyId::parse(family);
  if (r) base.r = *r;
  std::vector<unsigned> masks = {base.decoration};
  if (all) masks.assign(kDecorationOrder.begin(), kDecorationOrder.end());
  bool all_valid = true;
  for (unsigned m : masks) {
    FamilyId id = base;
    id.decoration = m;
    Quad q = catalog(id);
    bool ok = check_quad(q).valid();
    all_valid = all_valid && ok;
    std::cout << to_string(id) << "  " << to_string(q) << "  " << (ok ? "valid" : "INVALID") << "\n";
  }
  return all_valid ? kOk : kDomainFailure;
}

Component parse_component(const std::string& text) {
  if (text == "A" || text == "B" || text == "C" || text == "D") {
    return static_cast<Component>(static_cast<int>(Component::A) + (text[0] - 'A'));
  }
  if (text == "T") return Component::T;
  if (text == "T'" || text == "Tp") return Component::TPrime;
  return component_of(FamilyId::parse(text).family);
}

int run_gamma(const std::string& family, int r, const std::string& dot_path) {
  Component c = parse_component(family);
  GammaGraph g = build_gamma(figure_vertices(c, r));
  std::ofstream out(dot_path);
  if (!out) throw std::runtime_error("cannot write " + dot_path);
  out << to_dot(g);
  std::cout << "component: " << tag(c) << (c == Component::A ? ":r=" + std::to_string(r) : "") << "\n";
  std::cout << "vertices: " << g.vertices.size() << "\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    std::cout << "  v" << i << " " << to_string(g.vertices[i]) << "\n";
  }
  std::cout << "edges: " << g.edges.size() << "\n";
  for (const auto& e : g.edges) {
    std::cout << "  v" << e.from << " -> v" << e.to << "  " << join_ids(e.labels) << "\n";
  }
  if (c != Component::A || r >= 1) {
    auto fig = figure_edges(c, r);
    bool same = fig.size() == g.edges.size();
    for (const auto& fe : fig) same = same && g.has_edge(fe.from, fe.to);
    std::cout << "matches figure: " << yes_no(same) << "\n";
  } else {
    std::cout << "matches figure: n/a (r = 0 collapses the component)\n";
  }
  std::cout << "dot written to " << dot_path << "\n";
  return kOk;
}

int run_act(const std::string& spec, int n, const std::string& braid) {
  LocalRep rep = parse_rep_spec(spec, n);
  BraidWord b = parse_braid(braid, n);
  Endo e = endo_of_braid(rep, b);
  for (int i = 1; i <= e.rank(); ++i) {
    std::cout << "x" << i << " -> " << to_string(e.image(i), WordStyle::Indexed) << "\n";
  }
  return kOk;
}

int run_invariant(const std::string& spec, int n, const std::string& braid,
                  const std::vector<std::string>& homs, std::uint64_t budget, int jobs, bool as_json) {
  LocalRep rep = parse_rep_spec(spec, n);
  BraidWord b = parse_braid(braid, n);
  std::vector<FiniteGroupTable> groups;
  if (homs.empty()) {
    groups = default_groups();
  } else {
    for (const auto& h : homs) groups.push_back(FiniteGroupTable::resolve(h));
  }
  GroupPresentation p = presentation(rep, b);
  GroupPresentation s = tietze_simplify(p);
  Fingerprint f = fingerprint(p, groups, budget, jobs);
  if (as_json) {
    std::cout << invariant_json(p, s, f).dump(2) << "\n";
    return kOk;
  }
  std::cout << "presentation: " << to_string(p) << "\n";
  std::cout << "simplified: " << to_string(s) << "\n";
  std::cout << "abelianization: " << describe_abelian(f.abelianization) << "\n";
  for (const auto& [name, count] : f.hom_counts) std::cout << "homs into " << name << ": " << count << "\n";
  return kOk;
}

int run_check_stab(const std::string& spec, int n) {
  LocalRep rep = parse_rep_spec(spec, n);
  StabilizationReport r = check_stabilization(rep);
  for (std::size_t i = 0; i < r.cores.size(); ++i) {
    std::cout << "core " << i + 1 << " " << to_string(rep.cores()[i]) << ": S1 "
              << to_string(r.cores[i].status) << " (" << r.cores[i].witness << ")\n";
  }
  std::cout << "S2 (extends along an edge): " << yes_no(r.extends) << "\n";
  const char* verdict = r.strict() ? "satisfied"
                        : r.ok()     ? "satisfied only up to inversion (a = b^-1 for some core)"
                                     : "not established";
  std::cout << "stabilization properties: " << verdict << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local braid representations on free groups"};
  app.require_subcommand(1);

  bool as_json = false;

  auto* verify = app.add_subcommand("verify", "Check a quad (A,B,C,D) or a single core (A,B)");
  std::string quad_text, pair_text;
  auto* quad_opt = verify->add_option("--quad", quad_text, "quad \"A,B,C,D\"");
  auto* pair_opt = verify->add_option("--pair", pair_text, "core \"A,B\"");
  quad_opt->excludes(pair_opt);
  verify->add_flag("--json", as_json, "machine-readable output (--quad only)");

  auto* classify = app.add_subcommand("classify", "Exhaustive search for valid quads");
  int max_len = 1, jobs = 1;
  classify->add_option("--max-len", max_len, "maximum word length")->required()->check(CLI::Range(0, 8));
  classify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  classify->add_flag("--json", as_json, "machine-readable output");

  auto* cat = app.add_subcommand("catalog", "Print catalog quads");
  std::string family;
  std::optional<int> cat_r;
  bool all_decorations = false;
  cat->add_option("--family", family, "family id, e.g. A2:r=1:-s")->required();
  cat->add_option("--r", cat_r, "family parameter")->check(CLI::NonNegativeNumber);
  cat->add_flag("--all-decorations", all_decorations, "all eight symmetry images");

  auto* gamma = app.add_subcommand("gamma", "Graph of cores for one component");
  std::string gamma_family, dot_path;
  int gamma_r = 1;
  gamma->add_option("--family", gamma_family, "component or family tag")->required();
  gamma->add_option("--r", gamma_r, "parameter for the A component")->check(CLI::NonNegativeNumber);
  gamma->add_option("--dot", dot_path, "output DOT file")->required();

  auto* act = app.add_subcommand("act", "Automorphism of F_n induced by a braid");
  std::string rep_spec, braid;
  int n = 2;
  act->add_option("--rep", rep_spec, "artin | wada:<family> | cores:A,B;...")->required();
  act->add_option("--n", n, "strands")->required()->check(CLI::Range(1, 64));
  act->add_option("--braid", braid, "e.g. \"1 -2 1\"")->required();

  auto* inv = app.add_subcommand("invariant", "Closed-braid group and its fingerprint");
  std::vector<std::string> homs;
  std::uint64_t budget = kDefaultHomBudget;
  int inv_jobs = 1;
  inv->add_option("--rep", rep_spec, "artin | wada:<family> | cores:A,B;...")->required();
  inv->add_option("--n", n, "strands")->required()->check(CLI::Range(1, 64));
  inv->add_option("--braid", braid, "e.g. \"1 1 1\"")->required();
  inv->add_option("--homs", homs, "finite groups (names or table files)")->delimiter(',');
  inv->add_option("--budget", budget, "maximum candidate tuples per group");
  inv->add_option("--jobs", inv_jobs, "worker threads")->check(CLI::Range(1, 256));
  inv->add_flag("--json", as_json, "machine-readable output");

  auto* stab = app.add_subcommand("check-stab", "Stabilization properties of a representation");
  int stab_n = 3;
  stab->add_option("--rep", rep_spec, "artin | wada:<family> | cores:A,B;...")->required();
  stab->add_option("--n", stab_n, "strands")->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) {
      if (!*quad_opt && !*pair_opt) {
        std::cerr << "verify: one of --quad or --pair is required\n" << verify->help();
        return kUsage;
      }
      return *quad_opt ? run_verify_quad(quad_text, as_json) : run_verify_pair(pair_text);
    }
    if (*classify) return run_classify(max_len, jobs, as_json);
    if (*cat) return run_catalog(family, cat_r, all_decorations);
    if (*gamma) return run_gamma(gamma_family, gamma_r, dot_path);
    if (*act) return run_act(rep_spec, n, braid);
    if (*inv) return run_invariant(rep_spec, n, braid, homs, budget, inv_jobs, as_json);
    if (*stab) return run_check_stab(rep_spec, stab_n);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const RankError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
  return kUsage;
}
