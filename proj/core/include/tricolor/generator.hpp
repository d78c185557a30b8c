#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "tricolor/coloring.hpp"
#include "tricolor/graph.hpp"

namespace tricolor {

// Planted 3-partite random graph: every cross-class pair is an edge
// independently with probability edge_prob; no edge lies inside a class.
struct GenParams {
  std::size_t n = 0;
  std::array<double, 3> class_balance{1.0 / 3, 1.0 / 3, 1.0 / 3};
  double edge_prob = 0.5;
  std::optional<std::size_t> min_degree_target;
  std::uint64_t seed = 1;
  int max_attempts = 50;
};

struct Generated {
  Graph graph;
  Coloring planted;
  int attempts = 1;
};

// Deterministic in GenParams. Throws MinDegreeUnreachable when no attempt
// within max_attempts meets min_degree_target, std::invalid_argument for
// malformed parameters.
Generated generate_planted(const GenParams& params);

// Class sizes obtained by largest-remainder rounding of n * class_balance.
std::array<std::size_t, 3> class_sizes(std::size_t n, const std::array<double, 3>& balance);

}  // namespace tricolor
