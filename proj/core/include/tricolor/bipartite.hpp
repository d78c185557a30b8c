#pragma once

#include <variant>
#include <vector>

#include "tricolor/graph.hpp"

namespace tricolor {

// Proper 2-coloring of a vertex set W: W is the disjoint union of the two
// sides and each side is independent in G.
struct TwoColoring {
  VertexSet side0;
  VertexSet side1;

  VertexSet members() const { return side0 | side1; }
  // Both sides as one independent-or-2-colorable witness with side0 first.
  static TwoColoring independent(VertexSet set);
};

// Vertices of an odd cycle, in cycle order (the last vertex is adjacent to
// the first).
struct OddCycle {
  std::vector<Vertex> cycle;
};

using Bipartition = std::variant<TwoColoring, OddCycle>;

// 2-colors G[W] by BFS, or returns an odd cycle of G[W].
Bipartition bipartition(const Graph& g, const VertexSet& w);

// True iff `c` is a proper 2-coloring of exactly W.
bool is_two_coloring_of(const Graph& g, const VertexSet& w, const TwoColoring& c);

// True iff `cycle` is an odd cycle of G whose vertices all lie in W.
bool is_odd_cycle_in(const Graph& g, const VertexSet& w, const OddCycle& c);

}  // namespace tricolor
