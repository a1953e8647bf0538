#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "locrep/autf2.hpp"
#include "locrep/catalog.hpp"
#include "locrep/local_rep.hpp"

namespace locrep {

struct GammaEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::vector<FamilyId> labels;  // every catalog id describing the edge quad
};

// Directed graph on cores: v -> w iff (v, w) is a valid quad.  Self-loops
// included.
struct GammaGraph {
  std::vector<AutF2> vertices;  // sorted, unique
  std::vector<GammaEdge> edges;  // sorted by (from, to)

  std::optional<std::size_t> index_of(const AutF2& v) const;
  bool has_edge(const AutF2& from, const AutF2& to) const;
};

GammaGraph build_gamma(std::vector<AutF2> vertices);

// DOT digraph; vertex label "(A,B)", edge label the first FamilyId.
std::string to_dot(const GammaGraph& g);

// A labelled arrow of the classification figure.
struct FigureEdge {
  AutF2 from;
  AutF2 to;
  FamilyId label;
};

// Vertex set drawn for a component (deduplicated; A uses parameter r).
std::vector<AutF2> figure_vertices(Component c, int r = 1);
// Arrows drawn for a component.  For the A component the drawing assumes
// four distinct vertices, so r must be >= 1.
std::vector<FigureEdge> figure_edges(Component c, int r = 1);

// Representation whose cores are the path's vertices; consecutive vertices
// must be joined by an edge (PathError otherwise).
LocalRep rep_from_path(const GammaGraph& g, const std::vector<AutF2>& path);

// Whether the last core has an outgoing edge, i.e. the rep extends to one
// more strand.  A rep without cores always extends.
bool can_extend(const LocalRep& rep);

}  // namespace locrep
