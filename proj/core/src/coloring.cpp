#include "tricolor/coloring.hpp"

#include <algorithm>
#include <unordered_set>

#include "tricolor/errors.hpp"

namespace tricolor {

bool Coloring::total() const {
  return std::none_of(colors.begin(), colors.end(), [](Color c) { return c < 0; });
}

std::size_t Coloring::palette_size() const {
  std::unordered_set<Color> seen;
  for (Color c : colors) {
    if (c >= 0) seen.insert(c);
  }
  return seen.size();
}

Color Coloring::max_color() const {
  Color best = kUncolored;
  for (Color c : colors) best = std::max(best, c);
  return best;
}

ProperCheck is_proper_coloring(const Graph& g, const Coloring& c) {
  if (c.size() != g.order()) {
    throw PartialColoring("coloring covers " + std::to_string(c.size()) + " of " +
                          std::to_string(g.order()) + " vertices");
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (c[v] < 0) throw PartialColoring("vertex " + std::to_string(v) + " is uncolored");
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && c[u] == c[v]) return {false, Edge{u, v}};
    }
  }
  return {};
}

}  // namespace tricolor
