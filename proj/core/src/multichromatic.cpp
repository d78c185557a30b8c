#include "tricolor/blum.hpp"

#include <stdexcept>

namespace tricolor {

namespace {

std::optional<Edge> find_internal_edge(const Graph& g, const VertexSet& x) {
  for (Vertex v : x) {
    if (auto w = neighbors_in(g, v, x).first()) return Edge{std::min(v, *w), std::max(v, *w)};
  }
  return std::nullopt;
}

}  // namespace

MultichromaticOutcome multichromatic_test(const Graph& g, const VertexSet& x, const Params& p) {
  if (p.k < 1 || p.nh == 0) throw std::invalid_argument("multichromatic_test: params not resolved");
  if (x.size() < p.nh) throw SetTooSmall(x.size(), p.nh);

  if (auto e = find_internal_edge(g, x)) {
    MultichromaticGuaranteed m;
    m.reason = MultichromaticGuaranteed::Reason::kInternalEdge;
    m.edge = e;
    return m;
  }
  // X is independent, so N(X) is disjoint from it.
  VertexSet nb = neighborhood(g, x);
  auto split = bipartition(g, nb);
  if (auto* odd = std::get_if<OddCycle>(&split)) {
    MultichromaticGuaranteed m;
    m.reason = MultichromaticGuaranteed::Reason::kOddNeighborhood;
    m.cycle = std::move(odd->cycle);
    return m;
  }
  auto& two = std::get<TwoColoring>(split);
  const std::size_t n = g.order();
  if (nb.size() >= type1_threshold(n, p.k, p.progress.c1)) {
    return Progress{LargeSet{std::move(nb), std::move(two)}, "multichromatic_test"};
  }
  const double bound = p.progress.c2 * p.k * static_cast<double>(x.size());
  if (static_cast<double>(nb.size()) > bound) {
    throw SetTooSmall(x.size(), static_cast<std::size_t>(nb.size() / (p.progress.c2 * p.k)) + 1);
  }
  return Progress{SmallNeighborhood{x, TwoColoring::independent(x), std::move(nb)},
                  "multichromatic_test"};
}

}  // namespace tricolor
