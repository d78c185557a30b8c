#include "tricolor/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "tricolor/bipartite.hpp"
#include "tricolor/errors.hpp"

namespace tricolor {

PairRelation PairAnswer::relation() const {
  if (!can_equal && !can_differ) return PairRelation::kVacuous;
  if (!can_differ) return PairRelation::kAlways;
  if (!can_equal) return PairRelation::kNever;
  return PairRelation::kSometimes;
}

bool ColoringSummary::always_same(std::size_t i) const { return !pairs.at(i).can_differ; }
bool ColoringSummary::always_monochromatic(std::size_t i) const {
  return !colorable || sets.at(i).max_colors <= 1;
}
bool ColoringSummary::always_multichromatic(std::size_t i) const {
  return !colorable || sets.at(i).min_colors >= 2;
}

namespace {

using Mask = std::uint32_t;

// Backtracking search over canonical 3-colorings of a graph with at most 32
// vertices, under optional pair and set constraints.
class Search {
 public:
  Search(const Graph& g, std::optional<Edge> differ) : n_(g.order()), differ_(differ) {
    adj_.assign(n_, 0);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : g.neighbors(u)) adj_[u] |= Mask{1} << v;
    }
  }

  void require_equal(Edge e) { equal_ = e; }
  void require_differ(Edge e) { unequal_ = e; }
  void constrain_set(const VertexSet& s, int min_colors, int max_colors) {
    set_ = 0;
    for (Vertex v : s) set_ |= Mask{1} << v;
    set_min_ = min_colors;
    set_max_ = max_colors;
  }

  bool exists() {
    prepare();
    stop_at_first_ = true;
    found_ = false;
    dfs(0, 0);
    return found_;
  }

  std::uint64_t count(std::uint64_t limit, bool& exceeded) {
    prepare();
    stop_at_first_ = false;
    limit_ = limit;
    leaves_ = 0;
    total_ = 0;
    exceeded_ = false;
    dfs(0, 0);
    exceeded = exceeded_;
    return total_;
  }

 private:
  void prepare() {
    // Constrained vertices first, then greedily by connectivity to the
    // already ordered prefix (ties: degree, then id).
    Mask constrained = set_;
    for (const auto& e : {differ_, equal_, unequal_}) {
      if (e) constrained |= (Mask{1} << e->first) | (Mask{1} << e->second);
    }
    order_.clear();
    Mask placed = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if ((constrained >> v) & 1u) {
        order_.push_back(v);
        placed |= Mask{1} << v;
      }
    }
    while (order_.size() < n_) {
      Vertex best = 0;
      int best_conn = -1;
      int best_deg = -1;
      for (Vertex v = 0; v < n_; ++v) {
        if ((placed >> v) & 1u) continue;
        const int conn = std::popcount(adj_[v] & placed);
        const int deg = std::popcount(adj_[v]);
        if (conn > best_conn || (conn == best_conn && deg > best_deg)) {
          best = v;
          best_conn = conn;
          best_deg = deg;
        }
      }
      order_.push_back(best);
      placed |= Mask{1} << best;
    }
    color_.assign(n_, -1);
    class_ = {0, 0, 0};
    set_remaining_ = std::popcount(set_);
    set_counts_ = {0, 0, 0};
  }

  bool pair_ok(const std::optional<Edge>& e, Vertex v, int c, bool want_equal) const {
    if (!e) return true;
    Vertex other;
    if (e->first == v) {
      other = e->second;
    } else if (e->second == v) {
      other = e->first;
    } else {
      return true;
    }
    if (color_[other] < 0) return true;
    return (color_[other] == c) == want_equal;
  }

  int set_colors() const {
    return (set_counts_[0] > 0) + (set_counts_[1] > 0) + (set_counts_[2] > 0);
  }

  void dfs(std::size_t i, int used) {
    if (stop_at_first_ && found_) return;
    if (exceeded_) return;
    if (i == n_) {
      if (stop_at_first_) {
        found_ = true;
        return;
      }
      if (++leaves_ > limit_) {
        exceeded_ = true;
        return;
      }
      total_ += used == 1 ? 3 : 6;
      return;
    }
    const Vertex v = order_[i];
    const bool in_set = ((set_ >> v) & 1u) != 0;
    const int choices = std::min(used + 1, 3);
    for (int c = 0; c < choices; ++c) {
      if ((adj_[v] & class_[c]) != 0) continue;
      if (!pair_ok(differ_, v, c, false)) continue;
      if (!pair_ok(unequal_, v, c, false)) continue;
      if (!pair_ok(equal_, v, c, true)) continue;
      if (in_set) {
        ++set_counts_[c];
        --set_remaining_;
        const int sc = set_colors();
        const bool ok = sc <= set_max_ && sc + set_remaining_ >= set_min_;
        if (!ok) {
          --set_counts_[c];
          ++set_remaining_;
          continue;
        }
      }
      color_[v] = c;
      class_[c] |= Mask{1} << v;
      dfs(i + 1, std::max(used, c + 1));
      class_[c] &= ~(Mask{1} << v);
      color_[v] = -1;
      if (in_set) {
        --set_counts_[c];
        ++set_remaining_;
      }
      if ((stop_at_first_ && found_) || exceeded_) return;
    }
  }

  std::size_t n_;
  std::vector<Mask> adj_;
  std::optional<Edge> differ_;
  std::optional<Edge> equal_;
  std::optional<Edge> unequal_;
  Mask set_ = 0;
  int set_min_ = 0;
  int set_max_ = 3;

  std::vector<Vertex> order_;
  std::vector<int> color_;
  std::array<Mask, 3> class_{};
  std::array<int, 3> set_counts_{};
  int set_remaining_ = 0;

  bool stop_at_first_ = true;
  bool found_ = false;
  std::uint64_t limit_ = 0;
  std::uint64_t leaves_ = 0;
  std::uint64_t total_ = 0;
  bool exceeded_ = false;
};

void check_cap(const Graph& g, const OracleOptions& opts) {
  const std::size_t cap = std::min<std::size_t>(opts.cap, 32);
  if (g.order() > cap) throw TooLarge(g.order(), cap);
}

}  // namespace

ColoringSummary enumerate_3colorings(const Graph& g, const OracleQueries& q,
                                     const OracleOptions& opts) {
  check_cap(g, opts);
  for (const auto& [u, v] : q.pairs) {
    if (u >= g.order()) throw VertexOutOfRange(u, g.order());
    if (v >= g.order()) throw VertexOutOfRange(v, g.order());
  }
  if (q.differ) {
    if (q.differ->first >= g.order()) throw VertexOutOfRange(q.differ->first, g.order());
    if (q.differ->second >= g.order()) throw VertexOutOfRange(q.differ->second, g.order());
  }

  ColoringSummary out;
  {
    Search s(g, q.differ);
    out.count = s.count(opts.count_limit, out.count_exceeds_limit);
    out.colorable = out.count > 0 || out.count_exceeds_limit;
  }
  for (const auto& e : q.pairs) {
    PairAnswer a;
    a.pair = e;
    if (out.colorable) {
      if (e.first == e.second) {
        a.can_equal = true;
      } else {
        Search eq(g, q.differ);
        eq.require_equal(e);
        a.can_equal = eq.exists();
        Search ne(g, q.differ);
        ne.require_differ(e);
        a.can_differ = ne.exists();
      }
    }
    out.pairs.push_back(a);
  }
  for (const auto& set : q.sets) {
    if (set.universe() != g.order()) throw Error("oracle: query set has the wrong universe");
    SetAnswer a;
    if (out.colorable && !set.empty()) {
      for (int c = 1; c <= 3; ++c) {
        Search s(g, q.differ);
        s.constrain_set(set, 0, c);
        if (s.exists()) {
          a.min_colors = c;
          break;
        }
      }
      for (int c = std::min<int>(3, static_cast<int>(set.size())); c >= 1; --c) {
        Search s(g, q.differ);
        s.constrain_set(set, c, 3);
        if (s.exists()) {
          a.max_colors = c;
          break;
        }
      }
    }
    out.sets.push_back(a);
  }
  return out;
}

namespace {

std::optional<std::string> two_colorable(const Graph& g, const VertexSet& set) {
  if (set.universe() != g.order()) return "set has the wrong universe";
  if (std::holds_alternative<OddCycle>(bipartition(g, set))) {
    return "set is not 2-colorable (odd cycle)";
  }
  return std::nullopt;
}

Verdict accept(std::string why) { return {true, std::move(why)}; }
Verdict reject(std::string why) { return {false, std::move(why)}; }

}  // namespace

Verdict verify_progress_claim(const Graph& g, const Progress& claim, double k,
                              const VerifyOptions& opts) {
  const std::size_t n = g.order();
  return std::visit(
      [&](const auto& c) -> Verdict {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, SameColor>) {
          if (c.u >= n || c.v >= n) return reject("vertex out of range");
          if (c.u == c.v) return reject("pair must be two distinct vertices");
          if (g.adjacent(c.u, c.v)) return reject("pair is adjacent");
          OracleQueries q;
          q.pairs.push_back({c.u, c.v});
          auto s = enumerate_3colorings(g, q, opts.oracle);
          if (!s.colorable) return accept("vacuous: graph has no 3-coloring");
          if (s.always_same(0)) return accept("same color in every 3-coloring");
          return reject("some 3-coloring separates the pair");
        } else if constexpr (std::is_same_v<T, LargeSet>) {
          if (auto e = two_colorable(g, c.set)) return reject(*e);
          const std::size_t need = type1_threshold(n, k, opts.thresholds.c1);
          if (c.set.size() < need) {
            return reject("size " + std::to_string(c.set.size()) + " below threshold " +
                          std::to_string(need));
          }
          return accept("2-colorable set of size " + std::to_string(c.set.size()));
        } else if constexpr (std::is_same_v<T, SmallNeighborhood>) {
          if (c.set.empty()) return reject("set is empty");
          if (auto e = two_colorable(g, c.set)) return reject(*e);
          const VertexSet nb = neighborhood(g, c.set) - c.set;
          if (c.neighborhood.universe() == n && !(c.neighborhood == nb)) {
            return reject("stated neighborhood differs from N(X) \\ X");
          }
          const double bound = opts.thresholds.c2 * k * static_cast<double>(c.set.size());
          if (static_cast<double>(nb.size()) > bound) {
            return reject("|N(X)| = " + std::to_string(nb.size()) + " exceeds " +
                          std::to_string(bound));
          }
          return accept("|N(X)| = " + std::to_string(nb.size()) + " within bound");
        } else {
          if (c.set.size() < 2) return reject("mono set needs at least two vertices");
          OracleQueries q;
          q.sets.push_back(c.set);
          auto s = enumerate_3colorings(g, q, opts.oracle);
          if (!s.colorable) return accept("vacuous: graph has no 3-coloring");
          if (s.always_monochromatic(0)) return accept("monochromatic in every 3-coloring");
          return reject("some 3-coloring uses several colors on the set");
        }
      },
      claim.claim);
}

Verdict verify_claim(const Graph& g, const Claim& claim, double k, const VerifyOptions& opts) {
  if (const auto* p = std::get_if<Progress>(&claim)) return verify_progress_claim(g, *p, k, opts);
  if (const auto* m = std::get_if<MultichromaticClaim>(&claim)) {
    if (m->set.empty()) return reject("set is empty");
    OracleQueries q;
    q.sets.push_back(m->set);
    auto s = enumerate_3colorings(g, q, opts.oracle);
    if (!s.colorable) return accept("vacuous: graph has no 3-coloring");
    if (s.always_multichromatic(0)) return accept("multichromatic in every 3-coloring");
    return reject("some 3-coloring makes the set monochromatic");
  }
  const auto& c = std::get<ConditionalMonoClaim>(claim);
  if (c.set.empty()) return reject("set is empty");
  OracleQueries q;
  q.sets.push_back(c.set);
  q.differ = Edge{c.t, c.r0};
  auto s = enumerate_3colorings(g, q, opts.oracle);
  if (!s.colorable) return accept("vacuous: no 3-coloring separates t and r0");
  if (s.always_monochromatic(0)) {
    return accept("monochromatic in every 3-coloring where t and r0 differ");
  }
  return reject("a 3-coloring with t, r0 different uses several colors on the set");
}

}  // namespace tricolor
