#include "tricolor/graph.hpp"

#include <algorithm>
#include <numeric>

#include "tricolor/errors.hpp"

namespace tricolor {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.n_ = n;
  std::vector<std::size_t> deg(n, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n) throw VertexOutOfRange(u, n);
    if (v >= n) throw VertexOutOfRange(v, n);
    if (u == v) throw SelfLoop(u);
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
  g.adj_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adj_[fill[u]++] = v;
    g.adj_[fill[v]++] = u;
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto first = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]);
    auto last = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]);
    std::sort(first, last);
    auto dup = std::adjacent_find(first, last);
    if (dup != last) throw DuplicateEdge(static_cast<Vertex>(i), *dup);
  }
  g.m_ = edges.size();
  g.words_ = word_count(n);
  if (n <= kRowLimit) {
    g.rows_.assign(n * g.words_, 0);
    for (std::size_t i = 0; i < n; ++i) {
      auto* row = g.rows_.data() + i * g.words_;
      for (Vertex w : g.neighbors(static_cast<Vertex>(i))) {
        row[w >> 6] |= std::uint64_t{1} << (w & 63);
      }
    }
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  if (!rows_.empty()) {
    return ((rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u) != 0;
  }
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::min_degree() const {
  std::size_t best = n_ == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

VertexSet neighbors_in(const Graph& g, Vertex v, const VertexSet& y) {
  if (v >= g.order()) throw VertexOutOfRange(v, g.order());
  if (g.has_rows()) {
    auto row = g.row(v);
    auto yw = y.words();
    std::vector<std::uint64_t> out(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) out[i] = row[i] & yw[i];
    return VertexSet::from_words(g.order(), std::move(out));
  }
  VertexSet out(g.order());
  for (Vertex w : g.neighbors(v)) {
    if (y.contains(w)) out.insert(w);
  }
  return out;
}

std::size_t degree_in(const Graph& g, Vertex v, const VertexSet& y) {
  if (v >= g.order()) throw VertexOutOfRange(v, g.order());
  const auto nb = g.neighbors(v);
  if (!g.has_rows() || nb.size() < y.words().size()) {
    std::size_t c = 0;
    for (Vertex w : nb) c += y.contains(w) ? 1 : 0;
    return c;
  }
  return and_count(g.row(v), y.words());
}

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
  if (g.has_rows()) {
    std::vector<std::uint64_t> out(word_count(g.order()), 0);
    for (Vertex v : x) {
      auto row = g.row(v);
      for (std::size_t i = 0; i < out.size(); ++i) out[i] |= row[i];
    }
    return VertexSet::from_words(g.order(), std::move(out));
  }
  VertexSet out(g.order());
  for (Vertex v : x) {
    for (Vertex w : g.neighbors(v)) out.insert(w);
  }
  return out;
}

VertexSet neighborhood_in(const Graph& g, const VertexSet& x, const VertexSet& y) {
  VertexSet out = neighborhood(g, x);
  out &= y;
  return out;
}

std::size_t incidences(const Graph& g, const VertexSet& a, const VertexSet& b) {
  std::size_t total = 0;
  for (Vertex v : a) total += degree_in(g, v, b);
  return total;
}

std::size_t edges_within(const Graph& g, const VertexSet& w) {
  return incidences(g, w, w) / 2;
}

std::size_t edges_between(const Graph& g, const VertexSet& s, const VertexSet& t) {
  return incidences(g, s, t) - edges_within(g, s & t);
}

bool has_edge_inside(const Graph& g, const VertexSet& w) {
  for (Vertex v : w) {
    if (degree_in(g, v, w) > 0) return true;
  }
  return false;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& w) {
  Subgraph out;
  out.to_parent = w.to_vector();
  std::vector<Vertex> to_child(g.order(), 0);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    to_child[out.to_parent[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    const Vertex pu = out.to_parent[i];
    for (Vertex pv : g.neighbors(pu)) {
      if (pu < pv && w.contains(pv)) edges.emplace_back(static_cast<Vertex>(i), to_child[pv]);
    }
  }
  out.graph = Graph::from_edges(out.to_parent.size(), edges);
  return out;
}

namespace {

Contraction merge_by_map(const Graph& g, std::vector<Vertex> map, std::size_t new_n) {
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u >= v) continue;
      Vertex a = map[u];
      Vertex b = map[v];
      if (a > b) std::swap(a, b);
      edges.emplace_back(a, b);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {Graph::from_edges(new_n, edges), std::move(map)};
}

}  // namespace

Contraction contract(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order()) throw VertexOutOfRange(u, g.order());
  if (v >= g.order()) throw VertexOutOfRange(v, g.order());
  if (u == v) throw Error("contract: u and v must differ");
  if (g.adjacent(u, v)) throw AdjacentPair(u, v);
  VertexSet s(g.order(), {u, v});
  return contract_set(g, s);
}

Contraction contract_set(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw Error("contract_set: empty set");
  for (Vertex a : s) {
    for (Vertex b : g.neighbors(a)) {
      if (s.contains(b)) throw AdjacentPair(a, b);
    }
  }
  const Vertex keep = *s.first();
  std::vector<Vertex> map(g.order());
  Vertex next = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s.contains(v) && v != keep) continue;
    map[v] = next++;
  }
  for (Vertex v : s) map[v] = map[keep];
  return merge_by_map(g, std::move(map), next);
}

}  // namespace tricolor
