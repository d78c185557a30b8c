#include <algorithm>
#include <cmath>

#include "tricolor/blum.hpp"

namespace tricolor {

TwoLevelOutcome build_two_level(const Graph& g, Vertex r0, const Params& p) {
  const std::size_t n = g.order();
  if (r0 >= n) throw VertexOutOfRange(r0, n);
  if (p.k < 1) throw std::invalid_argument("build_two_level: params not resolved");

  VertexSet s = neighbors_in(g, r0, g.all());
  if (s.empty()) return TwoLevelFailure{"root has no neighbors"};
  auto split = bipartition(g, s);
  if (auto* odd = std::get_if<OddCycle>(&split)) {
    NonColorabilityWitness w;
    w.kind = NonColorabilityWitness::Kind::kOddWheel;
    w.center = r0;
    w.vertices = std::move(odd->cycle);
    return w;
  }
  if (s.size() >= type1_threshold(n, p.k, p.progress.c1)) {
    return Progress{LargeSet{s, std::move(std::get<TwoColoring>(split))}, "two_level"};
  }

  VertexSet t = neighborhood(g, s);
  t.erase(r0);
  const auto limit = static_cast<std::size_t>(std::floor(static_cast<double>(n) / p.k));
  if (limit == 0) return TwoLevelFailure{"n/k below one"};
  if (t.size() > limit) {
    std::vector<std::pair<std::size_t, Vertex>> ranked;
    ranked.reserve(t.size());
    for (Vertex w : t) ranked.emplace_back(degree_in(g, w, s), w);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    t.clear();
    for (std::size_t i = 0; i < limit; ++i) t.insert(ranked[i].second);
  }
  if (t.empty()) return TwoLevelFailure{"second neighborhood is empty"};

  TwoLevel out;
  out.r0 = r0;
  try {
    out.pair = regularize(g, s, t, p, 1);
  } catch (const EmptyResult& e) {
    return TwoLevelFailure{e.what()};
  }
  if (!out.pair.s.is_subset_of(s) || out.pair.t.size() > limit) {
    throw InvariantViolation("build_two_level: structure postcondition failed");
  }
  return out;
}

}  // namespace tricolor
