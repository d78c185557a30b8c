#pragma once

#include <optional>
#include <string>
#include <variant>

#include "tricolor/bipartite.hpp"
#include "tricolor/graph.hpp"

namespace tricolor {

// Type 0: u and v share a color in every 3-coloring.
struct SameColor {
  Vertex u = 0;
  Vertex v = 0;
};

// Type 1: a 2-colorable set of size at least type1_threshold(n, k).
struct LargeSet {
  VertexSet set;
  TwoColoring witness;
};

// Type 2: a nonempty 2-colorable set X with |N(X) \ X| <= c2 * k * |X|.
struct SmallNeighborhood {
  VertexSet set;
  TwoColoring witness;
  VertexSet neighborhood;
};

// A set of at least two vertices that is monochromatic in every 3-coloring.
struct MonoSet {
  VertexSet set;
};

enum class ProgressKind { kType0, kType1, kType2, kMono };

struct Progress {
  std::variant<SameColor, LargeSet, SmallNeighborhood, MonoSet> claim;
  std::string provenance;

  ProgressKind kind() const { return static_cast<ProgressKind>(claim.index()); }
};

const char* kind_name(ProgressKind kind);

struct ProgressThresholds {
  double c1 = 1.0;  // Type 1 size constant
  double c2 = 1.0;  // Type 2 neighborhood factor
};

// ceil(c1 * n / k), at least 1.
std::size_t type1_threshold(std::size_t n, double k, double c1 = 1.0);
inline double type2_factor(const ProgressThresholds& t) { return t.c2; }

// First violated structural invariant of `p` on g with color target k, or
// nullopt when the claim is well formed. Type 0 and MonoSet are checked
// only structurally here; their coloring-theoretic content needs the oracle.
std::optional<std::string> structural_violation(const Graph& g, const Progress& p, double k,
                                                const ProgressThresholds& t);

// The claim's principal vertex set (the pair for Type 0).
VertexSet claim_vertices(const Progress& p, std::size_t n);

}  // namespace tricolor
