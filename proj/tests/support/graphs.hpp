#pragma once

#include <vector>

#include "tricolor/generator.hpp"
#include "tricolor/graph.hpp"

namespace fixtures {

using tricolor::Edge;
using tricolor::Graph;
using tricolor::Vertex;

inline Graph make(std::size_t n, const std::vector<Edge>& e) { return tricolor::build_graph(n, e); }

inline Graph triangle() { return make(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(std::min<Vertex>(i, (i + 1) % n), std::max<Vertex>(i, (i + 1) % n));
  return make(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make(n, e);
}

// Star with center 0 and leaves 1..leaves.
inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return make(leaves + 1, e);
}

inline tricolor::Generated planted(std::size_t n, double p, std::uint64_t seed) {
  tricolor::GenParams gp;
  gp.n = n;
  gp.edge_prob = p;
  gp.seed = seed;
  return tricolor::generate_planted(gp);
}

}  // namespace fixtures
