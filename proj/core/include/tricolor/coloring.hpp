#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tricolor/graph.hpp"

namespace tricolor {

// Vertex id -> color id. kUncolored marks an unassigned vertex.
struct Coloring {
  std::vector<Color> colors;

  Coloring() = default;
  explicit Coloring(std::size_t n, Color fill = kUncolored) : colors(n, fill) {}

  std::size_t size() const { return colors.size(); }
  bool total() const;
  // Number of distinct colors in use.
  std::size_t palette_size() const;
  Color max_color() const;

  Color operator[](Vertex v) const { return colors[v]; }
  Color& operator[](Vertex v) { return colors[v]; }

  bool operator==(const Coloring&) const = default;
};

struct ProperCheck {
  bool proper = true;
  std::optional<Edge> violation;  // first monochromatic edge, canonical order

  explicit operator bool() const { return proper; }
};

// Throws PartialColoring unless the assignment is total on V.
ProperCheck is_proper_coloring(const Graph& g, const Coloring& c);

}  // namespace tricolor
