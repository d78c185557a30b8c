#include <gtest/gtest.h>

#include <cmath>

#include "graphs.hpp"
#include "tricolor/driver.hpp"
#include "tricolor/errors.hpp"
#include "tricolor/kt.hpp"
#include "tricolor/params.hpp"
#include "tricolor/progress.hpp"

using namespace tricolor;
using namespace fixtures;

TEST(Thresholds, TypeOne) {
  EXPECT_EQ(type1_threshold(100, 10, 1.0), 10u);
  EXPECT_EQ(type1_threshold(100, 100, 1.0), 1u);
  EXPECT_EQ(type1_threshold(100, 10, 0.5), 5u);
  EXPECT_EQ(type1_threshold(3, 2, 1.0), 2u);
  EXPECT_EQ(type2_factor(ProgressThresholds{1.0, 2.5}), 2.5);
}

TEST(Structural, Violations) {
  Graph p = path(3);
  EXPECT_FALSE(structural_violation(p, Progress{SameColor{0, 2}, ""}, 1, {}));
  EXPECT_TRUE(structural_violation(p, Progress{SameColor{0, 1}, ""}, 1, {}));
  EXPECT_TRUE(structural_violation(p, Progress{MonoSet{VertexSet(3, {0})}, ""}, 1, {}));
  Progress small{LargeSet{VertexSet(3, {0}), TwoColoring::independent(VertexSet(3, {0}))}, ""};
  EXPECT_TRUE(structural_violation(p, small, 1, {}));
}

TEST(Params, ResolveDerivedSizes) {
  Params p;
  auto r = resolve(p, 2000, 500);
  EXPECT_DOUBLE_EQ(r.k, 2.0);
  EXPECT_EQ(r.nh, 500u);
  EXPECT_EQ(r.round_cap, 3);
  p.k = 10;
  r = resolve(p, 1000, 1);
  EXPECT_EQ(r.nh, 10u);
  p.nh = 4;
  EXPECT_EQ(resolve(p, 1000, 1).nh, 4u);
  Params bad;
  bad.progress.c1 = 2.0;
  EXPECT_THROW(resolve(bad, 10, 1), Error);
}

TEST(Params, RoundCapAndSplit) {
  EXPECT_EQ(default_round_cap(2000), 3);
  EXPECT_EQ(default_round_cap(1u << 16), 4);
  EXPECT_EQ(default_round_cap(10), 3);
  EXPECT_EQ(degree_split(5000, 0.605), 173u);
}

TEST(Params, JsonRoundTrip) {
  Params p;
  p.k = 3.5;
  p.sidecut_factor = Rational(2, 7);
  p.side_cuts = false;
  nlohmann::json j = p;
  EXPECT_EQ(j.at("sidecut_factor"), "2/7");
  Params q = j.get<Params>();
  EXPECT_EQ(q.sidecut_factor, Rational(2, 7));
  EXPECT_FALSE(q.side_cuts);
  EXPECT_EQ(nlohmann::json(q), j);
  EXPECT_THROW(nlohmann::json({{"bogus", 1}}).get<Params>(), Error);
  EXPECT_THROW(nlohmann::json({{"term_factor", "x/y"}}).get<Params>(), Error);
  Params r = nlohmann::json({{"bucket_base", "1.5"}}).get<Params>();
  EXPECT_EQ(r.bucket_base, Rational(3, 2));
}

TEST(Driver, ExhaustedTriangleUsesFallback) {
  auto res = color_with_progress(triangle(), 1, [](const Graph&) { return SourceAction{Exhausted{}}; });
  EXPECT_TRUE(is_proper_coloring(triangle(), res.coloring).proper);
  EXPECT_EQ(res.coloring.palette_size(), 3u);
  EXPECT_EQ(res.stats.colors_used, 3u);
  EXPECT_EQ(res.stats.fallback_vertices, 3u);
}

TEST(Driver, PathTypeOneOnce) {
  Graph p = path(3);
  int calls = 0;
  auto source = [&](const Graph& h) -> SourceAction {
    if (calls++ == 0) {
      EXPECT_EQ(h.order(), 3u);
      VertexSet x(3, {0, 2});
      return Progress{LargeSet{x, TwoColoring::independent(x)}, "test"};
    }
    return Exhausted{};
  };
  auto res = color_with_progress(p, 2, source);
  EXPECT_TRUE(is_proper_coloring(p, res.coloring).proper);
  EXPECT_EQ(res.coloring[0], res.coloring[2]);
  EXPECT_NE(res.coloring[0], res.coloring[1]);
  EXPECT_EQ(res.stats.colors_used, 2u);
  EXPECT_EQ(res.stats.type1_batches, 1u);
  EXPECT_EQ(res.stats.fallback_vertices, 1u);
}

TEST(Driver, TypeTwoAndContraction) {
  // Two triangles sharing an edge, plus a pendant vertex.
  Graph g = make(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
  int calls = 0;
  auto source = [&](const Graph& h) -> SourceAction {
    ++calls;
    if (calls == 1) return Progress{SameColor{0, 3}, "test"};
    if (calls == 2) {
      EXPECT_EQ(h.order(), 4u);
      // After contraction the pendant vertex is 3 with neighbor 0.
      VertexSet x(4, {3});
      return Progress{SmallNeighborhood{x, TwoColoring::independent(x), VertexSet(4, {0})}, "test"};
    }
    return Exhausted{};
  };
  auto res = color_with_progress(g, 1, source);
  EXPECT_TRUE(is_proper_coloring(g, res.coloring).proper);
  EXPECT_EQ(res.coloring[0], res.coloring[3]);
  EXPECT_EQ(res.stats.contractions, 1u);
  EXPECT_EQ(res.stats.type2_batches, 1u);
}

TEST(Driver, DeferralUnwinds) {
  Graph g = cycle(7);
  bool first = true;
  auto source = [&](const Graph& h) -> SourceAction {
    if (first) {
      first = false;
      std::vector<Vertex> all;
      for (Vertex v = 0; v < h.order(); v += 2) all.push_back(v);
      return Defer{all};
    }
    return Exhausted{};
  };
  auto res = color_with_progress(g, 1, source);
  EXPECT_TRUE(is_proper_coloring(g, res.coloring).proper);
  EXPECT_EQ(res.stats.deferred_vertices, 4u);
  EXPECT_LE(res.stats.colors_used, 3u);
}

TEST(Driver, RejectsUnsoundProgress) {
  Graph p = path(3);
  auto adjacent = [](const Graph&) -> SourceAction { return Progress{SameColor{0, 1}, "test"}; };
  EXPECT_THROW(color_with_progress(p, 1, adjacent), UnsoundProgress);
  auto small = [](const Graph&) -> SourceAction {
    VertexSet x(3, {0});
    return Progress{LargeSet{x, TwoColoring::independent(x)}, "test"};
  };
  EXPECT_THROW(color_with_progress(p, 1, small), UnsoundProgress);
  auto empty = [](const Graph&) -> SourceAction { return Defer{}; };
  EXPECT_THROW(color_with_progress(p, 1, empty), UnsoundProgress);
}

TEST(Driver, MonoSetWithEdgeIsNotColorable) {
  Graph p = path(3);
  auto source = [](const Graph&) -> SourceAction {
    return Progress{MonoSet{VertexSet(3, {0, 1, 2})}, "test"};
  };
  try {
    color_with_progress(p, 1, source);
    FAIL();
  } catch (const NotThreeColorable& e) {
    EXPECT_EQ(e.witness.kind, NonColorabilityWitness::Kind::kForcedAdjacentPair);
    ASSERT_EQ(e.witness.vertices.size(), 2u);
    EXPECT_TRUE(p.adjacent(e.witness.vertices[0], e.witness.vertices[1]));
  }
}

TEST(Driver, SourceWitnessIsRemapped) {
  Graph g = cycle(5);
  int calls = 0;
  auto source = [&](const Graph&) -> SourceAction {
    if (calls++ == 0) return Defer{{0}};
    NonColorabilityWitness w;
    w.center = 0;
    w.vertices = {1, 2};
    throw NotThreeColorable(w);
  };
  try {
    color_with_progress(g, 1, source);
    FAIL();
  } catch (const NotThreeColorable& e) {
    EXPECT_EQ(e.witness.center, Vertex{1});
    EXPECT_EQ(e.witness.vertices, (std::vector<Vertex>{2, 3}));
  }
}

TEST(Driver, PlantedWithSeekSource) {
  auto gen = planted(200, 0.5, 3);
  Params p;
  auto source = [&](const Graph& h) -> SourceAction {
    if (h.order() < 8 || h.num_edges() == 0) return Exhausted{};
    auto out = seek_progress(h, h.min_degree(), p);
    if (auto* pr = std::get_if<Progress>(&out.result)) return *pr;
    return Exhausted{};
  };
  auto r = resolve(p, 200, gen.graph.min_degree());
  auto res = color_with_progress(gen.graph, r.k, source);
  EXPECT_TRUE(is_proper_coloring(gen.graph, res.coloring).proper);
  EXPECT_GE(res.stats.colors_used, 3u);
}

TEST(Driver, StatsJson) {
  auto res = color_with_progress(path(4), 1, [](const Graph&) { return SourceAction{Exhausted{}}; });
  auto j = to_json(res.stats);
  EXPECT_EQ(j.at("colors_used"), 2);
  EXPECT_EQ(j.at("steps"), res.stats.steps.size());
}
