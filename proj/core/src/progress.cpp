#include "tricolor/progress.hpp"

#include <cmath>

namespace tricolor {

const char* kind_name(ProgressKind kind) {
  switch (kind) {
    case ProgressKind::kType0: return "type0";
    case ProgressKind::kType1: return "type1";
    case ProgressKind::kType2: return "type2";
    case ProgressKind::kMono: return "mono";
  }
  return "unknown";
}

std::size_t type1_threshold(std::size_t n, double k, double c1) {
  const double x = std::ceil(c1 * static_cast<double>(n) / k);
  return x < 1 ? 1 : static_cast<std::size_t>(x);
}

namespace {

std::optional<std::string> check_witness(const Graph& g, const VertexSet& set,
                                         const TwoColoring& w) {
  if (w.side0.universe() != g.order() || w.side1.universe() != g.order()) {
    return "witness has the wrong universe";
  }
  if (!is_two_coloring_of(g, set, w)) return "witness is not a proper 2-coloring of the set";
  return std::nullopt;
}

}  // namespace

std::optional<std::string> structural_violation(const Graph& g, const Progress& p, double k,
                                                const ProgressThresholds& t) {
  const std::size_t n = g.order();
  return std::visit(
      [&](const auto& c) -> std::optional<std::string> {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, SameColor>) {
          if (c.u >= n || c.v >= n) return "type0 vertex out of range";
          if (c.u == c.v) return "type0 pair must be two distinct vertices";
          if (g.adjacent(c.u, c.v)) return "type0 pair is adjacent";
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, LargeSet>) {
          if (c.set.universe() != n) return "type1 set has the wrong universe";
          if (auto e = check_witness(g, c.set, c.witness)) return e;
          const std::size_t need = type1_threshold(n, k, t.c1);
          if (c.set.size() < need) {
            return "type1 set has " + std::to_string(c.set.size()) + " vertices, need " +
                   std::to_string(need);
          }
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, SmallNeighborhood>) {
          if (c.set.universe() != n) return "type2 set has the wrong universe";
          if (c.set.empty()) return "type2 set is empty";
          if (auto e = check_witness(g, c.set, c.witness)) return e;
          if (!(c.neighborhood == (neighborhood(g, c.set) - c.set))) {
            return "type2 neighborhood differs from N(X) \\ X";
          }
          const double bound = t.c2 * k * static_cast<double>(c.set.size());
          if (static_cast<double>(c.neighborhood.size()) > bound) {
            return "type2 neighborhood " + std::to_string(c.neighborhood.size()) +
                   " exceeds bound " + std::to_string(bound);
          }
          return std::nullopt;
        } else {
          if (c.set.universe() != n) return "mono set has the wrong universe";
          if (c.set.size() < 2) return "mono set needs at least two vertices";
          return std::nullopt;
        }
      },
      p.claim);
}

VertexSet claim_vertices(const Progress& p, std::size_t n) {
  return std::visit(
      [&](const auto& c) -> VertexSet {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, SameColor>) {
          return VertexSet(n, {c.u, c.v});
        } else {
          return c.set;
        }
      },
      p.claim);
}

}  // namespace tricolor
