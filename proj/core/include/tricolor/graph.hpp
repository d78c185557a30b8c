#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tricolor/types.hpp"
#include "tricolor/vertex_set.hpp"

namespace tricolor {

// Immutable simple undirected graph on vertices 0..n-1.
//
// Adjacency is stored twice: as sorted CSR neighbor lists, and (for graphs
// up to kRowLimit vertices) as one bitset row per vertex so that N_Y(v)
// queries cost O(n/64).
class Graph {
 public:
  static constexpr std::size_t kRowLimit = 32768;

  Graph() = default;

  // Validating constructor; throws SelfLoop, DuplicateEdge, VertexOutOfRange.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return n_; }
  std::size_t num_edges() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  bool has_rows() const { return !rows_.empty() || n_ == 0; }
  // Requires has_rows().
  std::span<const std::uint64_t> row(Vertex v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  std::size_t min_degree() const;
  std::size_t max_degree() const;

  // Canonical edge list: u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  VertexSet all() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
  std::vector<std::uint64_t> rows_;
};

// build_graph: same contract as Graph::from_edges.
Graph build_graph(std::size_t n, std::span<const Edge> edges);

// N_Y(v) = N(v) ∩ Y.
VertexSet neighbors_in(const Graph& g, Vertex v, const VertexSet& y);
// d_Y(v) = |N_Y(v)|.
std::size_t degree_in(const Graph& g, Vertex v, const VertexSet& y);

// N(X) = union of N(v) over v in X (may intersect X).
VertexSet neighborhood(const Graph& g, const VertexSet& x);
// N_Y(X) = N(X) ∩ Y.
VertexSet neighborhood_in(const Graph& g, const VertexSet& x, const VertexSet& y);

// Number of edges with one endpoint in S and the other in T. An edge with
// both endpoints in S ∩ T counts once.
std::size_t edges_between(const Graph& g, const VertexSet& s, const VertexSet& t);

// Sum over a in A of d_B(a): the number of ordered adjacent pairs (a, b),
// a ∈ A, b ∈ B. Symmetric in A and B. This is the "edge mass" of a
// subproblem (A, B) whose sides may overlap.
std::size_t incidences(const Graph& g, const VertexSet& a, const VertexSet& b);

// Number of edges with both endpoints in W.
std::size_t edges_within(const Graph& g, const VertexSet& w);

// True if G[W] has at least one edge.
bool has_edge_inside(const Graph& g, const VertexSet& w);

struct Subgraph {
  Graph graph;
  // to_parent[i] is the id in the parent graph of subgraph vertex i.
  std::vector<Vertex> to_parent;
};

// G[W] with vertices relabelled 0..|W|-1 in ascending parent order.
Subgraph induced_subgraph(const Graph& g, const VertexSet& w);

struct Contraction {
  Graph graph;
  // vertex_map[old] = new id; merged vertices share an id.
  std::vector<Vertex> vertex_map;
};

// Merges u and v. The merged vertex takes id min(u, v); ids above
// max(u, v) shift down by one. Throws AdjacentPair when u–v is an edge.
Contraction contract(const Graph& g, Vertex u, Vertex v);

// Merges every vertex of S into one (|S| ≥ 1). Equivalent to |S|-1
// successive contractions. Throws AdjacentPair if S is not independent.
Contraction contract_set(const Graph& g, const VertexSet& s);

}  // namespace tricolor
