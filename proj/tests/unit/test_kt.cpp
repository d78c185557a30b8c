#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "graphs.hpp"
#include "naive.hpp"
#include "tricolor/blum.hpp"
#include "tricolor/kt.hpp"
#include "tricolor/oracle.hpp"
#include "tricolor/params.hpp"

using namespace tricolor;
using namespace fixtures;

namespace {

VertexSet range(std::size_t n, Vertex lo, Vertex hi) {
  VertexSet s(n);
  for (Vertex v = lo; v < hi; ++v) s.insert(v);
  return s;
}

Params with_k(double k, std::size_t n) {
  Params p;
  p.k = k;
  return resolve(p, n, 1);
}

// Root 0 adjacent to S = [1, 1 + a); S complete to T = [1 + a, 1 + a + b).
Graph rooted_biclique(std::size_t a, std::size_t b, std::vector<Edge> extra = {}) {
  std::vector<Edge> e = std::move(extra);
  for (Vertex i = 1; i <= a; ++i) {
    e.emplace_back(0, i);
    for (Vertex j = 0; j < b; ++j) e.emplace_back(i, static_cast<Vertex>(1 + a + j));
  }
  return make(1 + a + b, e);
}

// 12 vertices: root 0; block 1 is S1 = {1,2,3} with T1 = {4,5};
// block 2 is S2 = {6,7,8} with T2 = {9,10,11}. Blocks are complete bipartite.
Graph two_blocks() {
  std::vector<Edge> e;
  for (Vertex s = 1; s <= 3; ++s) {
    e.emplace_back(0, s);
    for (Vertex t = 4; t <= 5; ++t) e.emplace_back(s, t);
  }
  for (Vertex s = 6; s <= 8; ++s) {
    e.emplace_back(0, s);
    for (Vertex t = 9; t <= 11; ++t) e.emplace_back(s, t);
  }
  return make(12, e);
}

}  // namespace

TEST(CutOrColor, CompleteBipartiteIsMonochromaticIfDiffer) {
  Graph g = rooted_biclique(4, 4);
  auto p = with_k(2, 9);
  VertexSet s = range(9, 1, 5), t = range(9, 5, 9);
  CutContext ctx(g, 0, t);
  auto r = cut_or_color(ctx, s, t, 5, p);
  EXPECT_TRUE(std::holds_alternative<MonochromaticIfDiffer>(r.outcome));
  EXPECT_EQ(r.x_extensions, 0u);
  EXPECT_TRUE(verify_claim(g, ConditionalMonoClaim{s, 5, 0}, p.k).accepted);
}

TEST(CutOrColor, TwoBlocksGiveSparseCut) {
  Graph g = two_blocks();
  auto p = with_k(2, 12);
  VertexSet s(12, {1, 2, 3, 6, 7, 8}), t(12, {4, 5, 9, 10, 11});
  CutContext ctx(g, 0, t);
  auto r = cut_or_color(ctx, s, t, 4, p);
  auto* cut = std::get_if<SparseCut>(&r.outcome);
  ASSERT_NE(cut, nullptr);
  EXPECT_EQ(cut->x, VertexSet(12, {1, 2, 3}));
  EXPECT_EQ(cut->y, VertexSet(12, {4, 5}));
  EXPECT_TRUE(check_sparse_cut(g, 0, s, t, 4, cut->x, cut->y, p.nh).empty());
  // The two blocks can be colored independently, so the cut side is not forced.
  auto list = naive::all_colorings(g);
  EXPECT_FALSE(naive::always_monochromatic(list, s, std::make_pair(Vertex{4}, Vertex{0})));
}

TEST(CheckSparseCut, ConstructedViolations) {
  Graph g = two_blocks();
  VertexSet s(12, {1, 2, 3, 6, 7, 8}), t(12, {4, 5, 9, 10, 11});
  auto has = [](const std::vector<CutViolation>& v, CutViolation x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  auto i1 = check_sparse_cut(g, 0, s, t, 4, VertexSet(12, {1, 2}), VertexSet(12, {4, 5}), 3);
  EXPECT_TRUE(has(i1, CutViolation::kI1));
  auto i2 = check_sparse_cut(g, 0, s, t, 4, VertexSet(12, {1, 2, 3}), VertexSet(12, {4}), 3);
  EXPECT_TRUE(has(i2, CutViolation::kI2));
  // With nh = 1 a block-2 vertex touching Y breaks I3.
  Graph g2 = make(12, [] {
    auto e = two_blocks().edges();
    e.emplace_back(4, 6);
    return e;
  }());
  auto i3 = check_sparse_cut(g2, 0, s, t, 4, VertexSet(12, {1, 2, 3}), VertexSet(12, {4, 5}), 1);
  EXPECT_TRUE(has(i3, CutViolation::kI3));
  EXPECT_TRUE(has(i3, CutViolation::kI4));
  auto triv = check_sparse_cut(g, 0, s, t, 4, s, t, 3);
  EXPECT_TRUE(has(triv, CutViolation::kTrivial));
  EXPECT_STREQ(violation_name(CutViolation::kI2), "I2");
}

TEST(CutOrColor, RandomSubproblemsSatisfyInvariants) {
  int cuts = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto g = planted(300, 0.3, seed).graph;
    Params base;
    base.k = 2;
    auto p = resolve(base, 300, g.min_degree());
    p.nh = 10 + 3 * (seed % 8);
    auto h = build_two_level(g, static_cast<Vertex>(seed), p);
    auto* tl = std::get_if<TwoLevel>(&h);
    if (tl == nullptr) continue;
    CutContext ctx(g, tl->r0, tl->pair.t);
    int tried = 0;
    for (Vertex t : tl->pair.t) {
      if (++tried > 5) break;
      CutResult r;
      try {
        r = cut_or_color(ctx, tl->pair.s, tl->pair.t, t, p);
      } catch (const SetTooSmall&) {
        continue;
      }
      if (auto* cut = std::get_if<SparseCut>(&r.outcome)) {
        ++cuts;
        EXPECT_TRUE(check_sparse_cut(g, tl->r0, tl->pair.s, tl->pair.t, t, cut->x, cut->y, p.nh)
                        .empty());
      } else if (auto* pr = std::get_if<Progress>(&r.outcome)) {
        EXPECT_FALSE(structural_violation(g, *pr, p.k, p.progress));
      }
    }
  }
  EXPECT_GT(cuts, 20);
}

TEST(SideCut, NoCandidateKeepsPair) {
  Graph g = two_blocks();
  RegularPair pair{VertexSet(12, {1, 2, 3, 6, 7, 8}), VertexSet(12, {4, 5, 9, 10, 11}),
                   Rational(1), Rational(3), 1, 0};
  Params p;
  auto sc = best_side_cut(g, VertexSet(12, {1, 2, 3}), VertexSet(12, {4, 5}), pair, p);
  EXPECT_FALSE(sc.u.has_value());
  EXPECT_EQ(sc.qualifying, 0u);
  EXPECT_EQ(sc.x, pair.s);
  EXPECT_EQ(sc.y, pair.t);
}

TEST(SideCut, SingleCandidate) {
  // Two blocks plus edges from Y vertex 4 into S2 = {6,7,8}.
  auto e = two_blocks().edges();
  for (Vertex s = 6; s <= 8; ++s) e.emplace_back(4, s);
  Graph g = make(12, e);
  RegularPair pair{VertexSet(12, {1, 2, 3, 6, 7, 8}), VertexSet(12, {4, 5, 9, 10, 11}),
                   Rational(1), Rational(3), 1, 0};
  Params p;
  VertexSet x(12, {1, 2, 3}), y(12, {4, 5});
  auto sc = best_side_cut(g, x, y, pair, p);
  ASSERT_EQ(sc.u, Vertex{4});
  EXPECT_EQ(sc.qualifying, 1u);
  EXPECT_EQ(sc.x, VertexSet(12, {6, 7, 8}));
  EXPECT_EQ(sc.y, VertexSet(12, {9, 10, 11}));
  EXPECT_FALSE(sc.x.intersects(x));
  EXPECT_FALSE(sc.y.intersects(y));
  EXPECT_EQ(side_cut_threshold(pair, p), Rational(1));
}

TEST(SideCut, MatchesBruteForce) {
  std::mt19937_64 rng(3);
  int compared = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto g = planted(250, 0.3, seed).graph;
    Params base;
    base.k = 2;
    auto p = resolve(base, 250, g.min_degree());
    auto h = build_two_level(g, 0, p);
    auto* tl = std::get_if<TwoLevel>(&h);
    if (tl == nullptr) continue;
    std::bernoulli_distribution coin(0.3);
    VertexSet x(250);
    for (Vertex v : tl->pair.s)
      if (coin(rng)) x.insert(v);
    VertexSet y = neighborhood_in(g, x, tl->pair.t);
    auto a = best_side_cut(g, x, y, tl->pair, p);
    auto b = naive::brute_side_cut(g, x, y, tl->pair, p);
    EXPECT_EQ(a.u, b.u);
    EXPECT_EQ(a.qualifying, b.qualifying);
    EXPECT_EQ(a.x, b.x);
    EXPECT_EQ(a.y, b.y);
    ++compared;
  }
  EXPECT_GT(compared, 10);
}

TEST(InnerLoop, SingleVertexIsErrorA) {
  Graph g = rooted_biclique(1, 3);
  auto p = with_k(2, 5);
  RegularPair pair{VertexSet(5, {1}), VertexSet(5, {2, 3, 4}), Rational(1, 2), Rational(1, 2), 1, 0};
  CutContext ctx(g, 0, pair.t);
  auto out = inner_loop(ctx, pair, p);
  auto* f = std::get_if<SeekFailure>(&out);
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->reason, FailureReason::kErrorA);
  EXPECT_STREQ(failure_name(f->reason), "error_a");
}

TEST(InnerLoop, CompleteBipartiteGivesMonoSet) {
  // T contains edge 5-6, so U is multichromatic and every seed sees all of S.
  Graph g = rooted_biclique(4, 5, {{5, 6}});
  auto p = with_k(2, 10);
  VertexSet s = range(10, 1, 5), t = range(10, 5, 10);
  auto pair = regularize(g, s, t, p);
  ASSERT_EQ(pair.s, s);
  ASSERT_EQ(pair.t, t);
  CutContext ctx(g, 0, pair.t);
  auto out = inner_loop(ctx, pair, p);
  auto* pr = std::get_if<Progress>(&out);
  ASSERT_NE(pr, nullptr);
  ASSERT_EQ(pr->kind(), ProgressKind::kMono);
  EXPECT_EQ(std::get<MonoSet>(pr->claim).set, s);
  EXPECT_TRUE(verify_progress_claim(g, *pr, p.k).accepted);
  EXPECT_TRUE(naive::always_monochromatic(naive::all_colorings(g), s));
}

TEST(Audit, MuAtBoundary) {
  // delta_s = 4, nh = 2: |Y_j| = 16 / 16 = 1 gives mu = 1/8.
  Graph g = make(6, {{0, 5}});
  RegularPair pair{VertexSet(6, {0, 1}), VertexSet(6, {4, 5}), Rational(4), Rational(1), 1, 0};
  RoundInputs in;
  in.pair = &pair;
  in.x = VertexSet(6, {0});
  in.y = VertexSet(6, {5});
  in.nh = 2;
  in.k = 2;
  auto a = audit_round(g, in);
  EXPECT_EQ(a.mu, Rational(1, 8));
  ASSERT_NE(a.flag("mu_floor"), nullptr);
  EXPECT_TRUE(a.flag("mu_floor")->pass);
  EXPECT_FALSE(a.flag("mu_floor")->hard);
  EXPECT_FALSE(a.flag("ypp_edges")->evaluated);
  auto j = to_json(a);
  EXPECT_EQ(j.at("mu"), "1/8");
  EXPECT_TRUE(j.at("flags").at("ypp_edges").is_null());
}

TEST(Audit, YppEdgeBoundOnCompleteBipartiteRound) {
  // S_j = 0..5 complete to T_j = 6..8; final cut X = {0}, Y = T_j.
  std::vector<Edge> e;
  for (Vertex s = 0; s < 6; ++s)
    for (Vertex t = 6; t < 9; ++t) e.emplace_back(s, t);
  Graph g = make(9, e);
  RegularPair pair{range(9, 0, 6), range(9, 6, 9), Rational(2), Rational(4), 1, 0};
  RoundInputs in;
  in.pair = &pair;
  in.x = VertexSet(9, {0});
  in.y = range(9, 6, 9);
  in.termination_fired = true;
  in.nh = 1;
  in.k = 2;
  auto a = audit_round(g, in);
  EXPECT_EQ(a.ypp_size, 3u);
  EXPECT_EQ(a.edges_ypp_rest, 15u);
  EXPECT_EQ(a.edges_xy, 3u);
  const auto* f = a.flag("ypp_edges");
  ASSERT_NE(f, nullptr);
  EXPECT_TRUE(f->hard);
  EXPECT_TRUE(f->evaluated);
  EXPECT_TRUE(f->pass);
  EXPECT_TRUE(a.hard_ok());
}

TEST(Audit, NestedViolationIsHard) {
  std::vector<Edge> e{{0, 3}, {0, 4}};
  Graph g = make(5, e);
  RegularPair pair{VertexSet(5, {0, 1}), VertexSet(5, {3, 4}), Rational(1), Rational(1), 1, 0};
  RoundInputs in;
  in.pair = &pair;
  in.x = VertexSet(5, {0});
  in.y = VertexSet(5, {3});
  auto a = audit_round(g, in);
  EXPECT_FALSE(a.flag("nested")->pass);
  EXPECT_FALSE(a.hard_ok());
}

TEST(Seek, PlantedTwoThousand) {
  auto gen = planted(2000, 0.5, 1);
  const Graph& g = gen.graph;
  auto out = seek_progress(g, g.min_degree(), Params{});
  EXPECT_EQ(out.params.round_cap, 3);
  EXPECT_GE(out.roots_tried, 1u);
  for (const auto& a : out.audits) EXPECT_TRUE(a.hard_ok());
  if (auto* pr = std::get_if<Progress>(&out.result)) {
    EXPECT_FALSE(structural_violation(g, *pr, out.params.k, out.params.progress));
  } else {
    EXPECT_TRUE(std::holds_alternative<SeekFailure>(out.result));
  }
}

TEST(Seek, SparserInstancesFailAsData) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto gen = planted(800, 0.15, seed);
    Params p;
    p.k = 2;
    auto out = seek_progress(gen.graph, gen.graph.min_degree(), p);
    for (const auto& a : out.audits) EXPECT_TRUE(a.hard_ok());
    if (auto* pr = std::get_if<Progress>(&out.result)) {
      EXPECT_FALSE(structural_violation(gen.graph, *pr, out.params.k, out.params.progress));
    }
    EXPECT_FALSE(std::holds_alternative<NonColorabilityWitness>(out.result));
  }
}

TEST(Seek, TraceIsDeterministic) {
  auto gen = planted(600, 0.3, 9);
  Params p;
  p.k = 2;
  auto run = [&] {
    std::ostringstream os;
    TraceSink sink(os);
    Instrumentation instr;
    instr.trace = &sink;
    seek_progress(gen.graph, gen.graph.min_degree(), p, instr);
    return os.str();
  };
  const std::string a = run();
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, run());
}

TEST(Seek, KFourNeighborhoodWitness) {
  auto out = seek_progress(complete(4), 3, with_k(1, 4));
  EXPECT_TRUE(std::holds_alternative<NonColorabilityWitness>(out.result));
}
