#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "tricolor/coloring.hpp"
#include "tricolor/graph.hpp"
#include "tricolor/progress.hpp"
#include "tricolor/trace.hpp"

namespace tricolor {

// Remove these vertices now and color them greedily on unwind.
struct Defer {
  std::vector<Vertex> vertices;
};
struct Exhausted {};

using SourceAction = std::variant<Progress, Defer, Exhausted>;

// Called with the current working graph H (vertices relabelled 0..|H|-1).
// Claims must hold for H. May throw NotThreeColorable with H-local ids.
using ProgressSource = std::function<SourceAction(const Graph& h)>;

struct DriverStep {
  std::size_t step = 0;
  std::string mechanism;  // contract | type1 | type2 | defer | fallback
  std::size_t set_size = 0;
  std::size_t neighborhood_size = 0;
  std::size_t colors_so_far = 0;
  std::size_t graph_size = 0;
};

struct DriverStats {
  std::size_t colors_used = 0;
  std::size_t contractions = 0;
  std::size_t type1_batches = 0;
  std::size_t type2_batches = 0;
  std::size_t deferred_vertices = 0;
  std::size_t fallback_vertices = 0;
  std::size_t phases = 0;          // phases that extracted at least one set
  std::size_t fallback_colors = 0; // colors used by greedy and deferred vertices
  std::size_t batch_colors = 0;    // colors used by extracted sets
  std::vector<std::size_t> graph_sizes;
  std::vector<DriverStep> steps;
};

struct DriverResult {
  Coloring coloring;
  DriverStats stats;
};

struct DriverOptions {
  ProgressThresholds thresholds{};
};

// Turns a stream of sound progress into a proper coloring of g. Throws
// UnsoundProgress on a malformed claim and NotThreeColorable (with ids of
// g) when a claim or the source proves g is not 3-colorable.
DriverResult color_with_progress(const Graph& g, double k, const ProgressSource& source,
                                 const DriverOptions& opts = {}, const Instrumentation& instr = {});

nlohmann::json to_json(const DriverStep& s);
nlohmann::json to_json(const DriverStats& s);

}  // namespace tricolor
