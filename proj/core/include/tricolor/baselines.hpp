#pragma once

#include <cstddef>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "tricolor/coloring.hpp"
#include "tricolor/graph.hpp"

namespace tricolor {

// First fit in the given order, colors base, base+1, ... Throws
// std::invalid_argument unless order is a permutation of V.
Coloring greedy_color(const Graph& g, std::span<const Vertex> order, Color base = 0);
Coloring greedy_color(const Graph& g);

struct BaselineReport {
  std::string method;
  std::size_t colors_used = 0;       // palette size of the output
  std::size_t colors_allocated = 0;  // 2 per extraction plus the greedy palette
  std::size_t extractions = 0;
  std::size_t extracted_vertices = 0;
  std::size_t threshold = 0;
};

struct BaselineResult {
  Coloring coloring;
  BaselineReport report;
};

// ceil(sqrt(2n)).
std::size_t default_extraction_threshold(std::size_t n);

// Repeatedly 2-colors and removes N(v) for a vertex v of current degree at
// least threshold, then colors the rest greedily from a separate palette.
// Throws NotThreeColorable (odd wheel) when some N(v) is not bipartite.
BaselineResult neighborhood_extraction_color(const Graph& g, std::size_t threshold);

nlohmann::json to_json(const BaselineReport& r);

}  // namespace tricolor
