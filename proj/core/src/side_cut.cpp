#include "tricolor/kt.hpp"

namespace tricolor {

Rational side_cut_threshold(const RegularPair& pair, const Params& p) {
  return pair.delta_t * p.sidecut_factor;
}

SideCut best_side_cut(const Graph& g, const VertexSet& x, const VertexSet& y,
                      const RegularPair& pair, const Params& p) {
  const std::int64_t need = ceil_of(side_cut_threshold(pair, p));
  const VertexSet rest = pair.s - x;
  SideCut best{pair.s, pair.t, std::nullopt, 0};
  for (Vertex u : y) {
    if (static_cast<std::int64_t>(degree_in(g, u, rest)) < need) continue;
    ++best.qualifying;
    VertexSet xu = neighbors_in(g, u, rest);
    VertexSet yu = neighborhood_in(g, xu, pair.t) - y;
    if (yu.size() < best.y.size()) {
      best.x = std::move(xu);
      best.y = std::move(yu);
      best.u = u;
    }
  }
  return best;
}

}  // namespace tricolor
