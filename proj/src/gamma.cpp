#include "locrep/gamma.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "locrep/errors.hpp"
#include "locrep/quad.hpp"

namespace locrep {

namespace {

AutF2 core(std::string_view a, std::string_view b) { return AutF2(Word::parse(a), Word::parse(b)); }

Word conj_power(int r, Letter l) {
  Word ar = power(Word::generator(kA), r);
  return ar * Word{l} * invert(ar);
}

FamilyId fid(std::string_view text, int r = 0) {
  FamilyId id = FamilyId::parse(text);
  id.r = has_parameter(id.family) ? r : 0;
  return id;
}

}  // namespace

std::optional<std::size_t> GammaGraph::index_of(const AutF2& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

bool GammaGraph::has_edge(const AutF2& from, const AutF2& to) const {
  auto i = index_of(from);
  auto j = index_of(to);
  if (!i || !j) return false;
  return std::any_of(edges.begin(), edges.end(),
                     [&](const GammaEdge& e) { return e.from == *i && e.to == *j; });
}

GammaGraph build_gamma(std::vector<AutF2> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  GammaGraph g{std::move(vertices), {}};
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (std::size_t j = 0; j < g.vertices.size(); ++j) {
      Quad q(g.vertices[i], g.vertices[j]);
      if (!check_quad(q).valid()) continue;
      g.edges.push_back({i, j, identify(q)});
    }
  }
  return g;
}

std::string to_dot(const GammaGraph& g) {
  std::ostringstream os;
  os << "digraph Gamma {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    os << "  v" << i << " [label=\"" << to_string(g.vertices[i]) << "\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  v" << e.from << " -> v" << e.to;
    if (!e.labels.empty()) os << " [label=\"" << to_string(e.labels.front()) << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::vector<AutF2> figure_vertices(Component c, int r) {
  std::vector<AutF2> v;
  switch (c) {
    case Component::T: v = {core("a", "b")}; break;
    case Component::TPrime: v = {core("a", "B"), core("A", "b")}; break;
    case Component::A:
      if (r < 0) throw std::invalid_argument("r must be >= 0");
      v = {AutF2(conj_power(r, kB), Word{kA}), AutF2(conj_power(r, -kB), Word{-kA}),
           AutF2(conj_power(-r, -kB), Word{-kA}), AutF2(conj_power(-r, kB), Word{kA})};
      break;
    case Component::B: v = {core("B", "a"), core("b", "A")}; break;
    case Component::C: v = {core("aBa", "a"), core("aba", "A")}; break;
    case Component::D:
      v = {core("ABa", "bba"), core("abA", "bbA"), core("Aba", "Abb"), core("aBA", "abb")};
      break;
  }
  std::vector<AutF2> out;
  for (auto& x : v) {
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  }
  return out;
}

std::vector<FigureEdge> figure_edges(Component c, int r) {
  if (c == Component::A && r < 1) {
    throw std::invalid_argument("the drawn A component needs r >= 1");
  }
  auto v = figure_vertices(c, r);
  auto e = [&](std::size_t from, std::size_t to, std::string_view label) {
    return FigureEdge{v[from], v[to], fid(label, r)};
  };
  switch (c) {
    case Component::T: return {e(0, 0, "T")};
    case Component::TPrime: return {e(0, 1, "T'")};
    case Component::A:
      // 0 top-left, 1 top-right, 2 bottom-left, 3 bottom-right
      return {e(0, 0, "A1"),        e(0, 1, "A2"),    e(1, 3, "A2:-s"), e(1, 2, "A3"),
              e(2, 0, "A2:-sbw"),   e(2, 1, "A3:bw"), e(3, 2, "A2:bw"), e(3, 3, "A1:bw")};
    case Component::B:
      return {e(0, 0, "B1"), e(0, 1, "B2"), e(1, 1, "B1:s"), e(1, 0, "B2:-")};
    case Component::C:
      return {e(0, 0, "C1"), e(0, 1, "C2"), e(1, 1, "C3"), e(1, 0, "C2:-s")};
    case Component::D:
      // 0 top, 1 left, 2 right, 3 bottom
      return {e(0, 0, "D1"),    e(0, 2, "D2:-sbw"), e(1, 0, "D3:-sbw"), e(1, 2, "D4:-sbw"),
              e(2, 1, "D4:-s"), e(2, 3, "D3:-s"),   e(3, 3, "D1:-s"),   e(3, 1, "D2:-s")};
  }
  return {};
}

LocalRep rep_from_path(const GammaGraph& g, const std::vector<AutF2>& path) {
  for (const auto& v : path) {
    if (!g.index_of(v)) throw PathError("vertex " + to_string(v) + " is not in the graph");
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.has_edge(path[i], path[i + 1])) {
      throw PathError("no edge " + to_string(path[i]) + " -> " + to_string(path[i + 1]));
    }
  }
  return LocalRep(path);
}

bool can_extend(const LocalRep& rep) {
  if (rep.cores().empty()) return true;
  return !outgoing_cores(rep.cores().back()).empty();
}

}  // namespace locrep
