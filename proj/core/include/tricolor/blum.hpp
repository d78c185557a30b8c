#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "tricolor/bipartite.hpp"
#include "tricolor/errors.hpp"
#include "tricolor/graph.hpp"
#include "tricolor/params.hpp"
#include "tricolor/progress.hpp"
#include "tricolor/rational.hpp"

namespace tricolor {

// X receives at least two colors in every proper 3-coloring.
struct MultichromaticGuaranteed {
  enum class Reason { kInternalEdge, kOddNeighborhood };
  Reason reason = Reason::kInternalEdge;
  std::optional<Edge> edge;    // kInternalEdge
  std::vector<Vertex> cycle;   // kOddNeighborhood: odd cycle in G[N(X)]
};

using MultichromaticOutcome = std::variant<MultichromaticGuaranteed, Progress>;

// Requires resolved params (k >= 1, nh >= 1). Throws SetTooSmall when
// |X| < p.nh, or when a lowered nh override leaves the small-neighborhood
// bound unmet.
MultichromaticOutcome multichromatic_test(const Graph& g, const VertexSet& x, const Params& p);

struct RegularPair {
  VertexSet s;
  VertexSet t;
  Rational delta_s;  // every S vertex has more than delta_s neighbors in T
  Rational delta_t;  // every T vertex has between delta_t and degree_cap * delta_t in S
  int j = 1;
  int bucket = 0;
};

// Largest l with base^l <= d (d >= 1).
int degree_bucket(std::size_t d, const Rational& base);

// Removes S vertices with d_U <= s_floor and U vertices with d_S <= u_floor
// until none remain. The fixed point does not depend on removal order.
std::pair<VertexSet, VertexSet> prune_to_fixed_point(const Graph& g, const VertexSet& s,
                                                      const VertexSet& u, std::int64_t s_floor,
                                                      std::int64_t u_floor);

// Degree bucketing and pruning. T vertices without neighbors in S are
// allowed; they count toward the average but join no bucket. Throws
// EmptyResult if S or T is empty or E(S, T) = 0, InvariantViolation if a
// survivor breaks the degree bounds.
RegularPair regularize(const Graph& g, const VertexSet& s, const VertexSet& t, const Params& p,
                       int j = 1);

struct TwoLevel {
  Vertex r0 = 0;
  RegularPair pair;
};

struct TwoLevelFailure {
  std::string reason;
};

using TwoLevelOutcome = std::variant<TwoLevel, Progress, NonColorabilityWitness, TwoLevelFailure>;

// S = N(r0); T = N(S) \ {r0} truncated to the floor(n/k) vertices of
// largest d_S; then regularized.
TwoLevelOutcome build_two_level(const Graph& g, Vertex r0, const Params& p);

}  // namespace tricolor
