#include "tricolor/baselines.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tricolor/bipartite.hpp"
#include "tricolor/errors.hpp"

namespace tricolor {

namespace {

Color first_fit(const Graph& g, Vertex v, const Coloring& c, Color base, std::vector<char>& used) {
  used.assign(g.degree(v) + 1, 0);
  for (Vertex w : g.neighbors(v)) {
    const Color cw = c[w];
    if (cw < base) continue;
    const auto slot = static_cast<std::size_t>(cw - base);
    if (slot < used.size()) used[slot] = 1;
  }
  std::size_t slot = 0;
  while (used[slot]) ++slot;
  return base + static_cast<Color>(slot);
}

}  // namespace

Coloring greedy_color(const Graph& g, std::span<const Vertex> order, Color base) {
  const std::size_t n = g.order();
  if (order.size() != n) throw std::invalid_argument("greedy_color: order is not a permutation");
  std::vector<char> seen(n, 0);
  for (Vertex v : order) {
    if (v >= n || seen[v]) throw std::invalid_argument("greedy_color: order is not a permutation");
    seen[v] = 1;
  }
  Coloring c(n);
  std::vector<char> used;
  for (Vertex v : order) c[v] = first_fit(g, v, c, base, used);
  return c;
}

Coloring greedy_color(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  return greedy_color(g, order, 0);
}

std::size_t default_extraction_threshold(std::size_t n) {
  const auto t = static_cast<std::size_t>(std::ceil(std::sqrt(2.0 * static_cast<double>(n))));
  return std::max<std::size_t>(t, 1);
}

BaselineResult neighborhood_extraction_color(const Graph& g, std::size_t threshold) {
  if (threshold < 1) throw std::invalid_argument("neighborhood_extraction_color: threshold < 1");
  const std::size_t n = g.order();
  BaselineResult out;
  out.report.method = "extract";
  out.report.threshold = threshold;
  out.coloring = Coloring(n);

  VertexSet alive = g.all();
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);

  Color next = 0;
  for (;;) {
    std::optional<Vertex> best;
    for (Vertex v : alive) {
      if (!best || deg[v] > deg[*best]) best = v;
    }
    if (!best || deg[*best] < threshold) break;
    const VertexSet w = neighbors_in(g, *best, alive);
    auto split = bipartition(g, w);
    if (auto* odd = std::get_if<OddCycle>(&split)) {
      NonColorabilityWitness wit;
      wit.kind = NonColorabilityWitness::Kind::kOddWheel;
      wit.center = *best;
      wit.vertices = std::move(odd->cycle);
      throw NotThreeColorable(std::move(wit));
    }
    const auto& two = std::get<TwoColoring>(split);
    for (Vertex v : two.side0) out.coloring[v] = next;
    for (Vertex v : two.side1) out.coloring[v] = next + 1;
    next += 2;
    ++out.report.extractions;
    out.report.extracted_vertices += w.size();
    alive -= w;
    for (Vertex v : w) {
      for (Vertex u : g.neighbors(v)) {
        if (alive.contains(u)) --deg[u];
      }
    }
  }

  const Color base = next;
  std::vector<char> used;
  Color top = base;
  for (Vertex v : alive) {
    out.coloring[v] = first_fit(g, v, out.coloring, base, used);
    top = std::max(top, static_cast<Color>(out.coloring[v] + 1));
  }
  out.report.colors_used = out.coloring.palette_size();
  out.report.colors_allocated = static_cast<std::size_t>(top);
  if (!is_proper_coloring(g, out.coloring)) {
    throw InvariantViolation("neighborhood_extraction_color: improper coloring");
  }
  return out;
}

nlohmann::json to_json(const BaselineReport& r) {
  return {{"method", r.method},
          {"colors_used", r.colors_used},
          {"colors_allocated", r.colors_allocated},
          {"extractions", r.extractions},
          {"extracted_vertices", r.extracted_vertices},
          {"threshold", r.threshold}};
}

}  // namespace tricolor
