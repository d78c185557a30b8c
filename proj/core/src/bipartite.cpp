#include "tricolor/bipartite.hpp"

#include <algorithm>
#include <limits>

namespace tricolor {

namespace {

constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

// Calls fn(w) for each w in N(v) ∩ set, ascending.
template <typename Fn>
void for_each_neighbor_in(const Graph& g, Vertex v, const VertexSet& set, Fn&& fn) {
  const auto nb = g.neighbors(v);
  if (!g.has_rows() || nb.size() < set.words().size()) {
    for (Vertex w : nb) {
      if (set.contains(w)) fn(w);
    }
    return;
  }
  const auto row = g.row(v);
  const auto sw = set.words();
  for (std::size_t i = 0; i < row.size(); ++i) {
    std::uint64_t bits = row[i] & sw[i];
    while (bits != 0) {
      fn(static_cast<Vertex>((i << 6) + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
}

}  // namespace

TwoColoring TwoColoring::independent(VertexSet set) {
  TwoColoring c;
  c.side1 = VertexSet(set.universe());
  c.side0 = std::move(set);
  return c;
}

Bipartition bipartition(const Graph& g, const VertexSet& w) {
  const std::size_t n = g.order();
  VertexSet unvisited = w;
  std::vector<Vertex> parent(n, kNone);
  std::vector<std::uint32_t> depth(n, 0);
  TwoColoring c{VertexSet(n), VertexSet(n)};
  std::vector<Vertex> queue;
  queue.reserve(w.size());

  while (!unvisited.empty()) {
    const Vertex root = *unvisited.first();
    unvisited.erase(root);
    c.side0.insert(root);
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      std::vector<Vertex> fresh;
      for_each_neighbor_in(g, u, unvisited, [&](Vertex x) { fresh.push_back(x); });
      for (Vertex x : fresh) {
        unvisited.erase(x);
        parent[x] = u;
        depth[x] = depth[u] + 1;
        (depth[x] % 2 == 0 ? c.side0 : c.side1).insert(x);
        queue.push_back(x);
      }
    }
  }

  for (Vertex u : w) {
    const VertexSet& same = c.side0.contains(u) ? c.side0 : c.side1;
    Vertex clash = kNone;
    for_each_neighbor_in(g, u, same, [&](Vertex x) {
      if (clash == kNone) clash = x;
    });
    if (clash == kNone) continue;

    // Tree paths from u and clash up to their lowest common ancestor.
    std::vector<Vertex> pu{u};
    std::vector<Vertex> pv{clash};
    Vertex a = u;
    Vertex b = clash;
    while (depth[a] > depth[b]) pu.push_back(a = parent[a]);
    while (depth[b] > depth[a]) pv.push_back(b = parent[b]);
    while (a != b) {
      pu.push_back(a = parent[a]);
      pv.push_back(b = parent[b]);
    }
    OddCycle oc;
    oc.cycle = pu;  // u ... lca
    for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it) oc.cycle.push_back(*it);
    return oc;
  }
  return c;
}

bool is_two_coloring_of(const Graph& g, const VertexSet& w, const TwoColoring& c) {
  if (c.side0.intersects(c.side1)) return false;
  if (!(c.members() == w)) return false;
  return !has_edge_inside(g, c.side0) && !has_edge_inside(g, c.side1);
}

bool is_odd_cycle_in(const Graph& g, const VertexSet& w, const OddCycle& c) {
  const auto& cyc = c.cycle;
  if (cyc.size() < 3 || cyc.size() % 2 == 0) return false;
  std::vector<Vertex> sorted = cyc;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    if (!w.contains(cyc[i])) return false;
    if (!g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
  }
  return true;
}

}  // namespace tricolor
