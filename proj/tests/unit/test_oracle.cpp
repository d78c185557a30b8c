#include <gtest/gtest.h>

#include "graphs.hpp"
#include "naive.hpp"
#include "tricolor/errors.hpp"
#include "tricolor/oracle.hpp"

using namespace tricolor;
using namespace fixtures;

TEST(Enumerate, TriangleCountAndMultiplicity) {
  Graph t = triangle();
  OracleQueries q;
  q.sets.push_back(t.all());
  auto s = enumerate_3colorings(t, q);
  EXPECT_TRUE(s.colorable);
  EXPECT_EQ(s.count, 6u);
  EXPECT_EQ(s.sets[0].min_colors, 3);
  EXPECT_EQ(s.sets[0].max_colors, 3);
  EXPECT_TRUE(s.always_multichromatic(0));
}

TEST(Enumerate, PathEndpointsSometimesEqual) {
  Graph p = path(3);
  OracleQueries q;
  q.pairs.push_back({0, 2});
  auto s = enumerate_3colorings(p, q);
  EXPECT_EQ(s.count, 12u);
  EXPECT_TRUE(s.pairs[0].can_equal);
  EXPECT_TRUE(s.pairs[0].can_differ);
  EXPECT_EQ(s.pairs[0].relation(), PairRelation::kSometimes);
  EXPECT_FALSE(s.always_same(0));
}

TEST(Enumerate, OddCycleNeedsThreeColors) {
  Graph c5 = cycle(5);
  OracleQueries q;
  q.sets.push_back(c5.all());
  auto s = enumerate_3colorings(c5, q);
  EXPECT_EQ(s.count, 30u);
  EXPECT_EQ(s.sets[0].min_colors, 3);
}

TEST(Enumerate, UncolorableIsVacuous) {
  Graph k4 = complete(4);
  OracleQueries q;
  q.pairs.push_back({0, 1});
  q.sets.push_back(VertexSet(4, {0, 1}));
  auto s = enumerate_3colorings(k4, q);
  EXPECT_FALSE(s.colorable);
  EXPECT_EQ(s.count, 0u);
  EXPECT_EQ(s.pairs[0].relation(), PairRelation::kVacuous);
  EXPECT_TRUE(s.always_monochromatic(0));
  EXPECT_TRUE(s.always_multichromatic(0));
}

TEST(Enumerate, ConditionalDiffer) {
  // P3 conditioned on 0 != 2 forces three colors on the path.
  Graph p = path(3);
  OracleQueries q;
  q.differ = Edge{0, 2};
  q.sets.push_back(p.all());
  auto s = enumerate_3colorings(p, q);
  EXPECT_EQ(s.count, 6u);
  EXPECT_EQ(s.sets[0].min_colors, 3);
}

TEST(Enumerate, RejectsLargeGraphs) {
  OracleOptions o;
  o.cap = 10;
  EXPECT_THROW(enumerate_3colorings(path(11), {}, o), TooLarge);
}

TEST(Enumerate, MatchesBruteForceOnSmallGraphs) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    for (double p : {0.2, 0.5, 0.8}) {
      std::size_t n = 3 + seed % 6;
      Graph g = planted(n, p, seed).graph;
      // Add edges inside a class sometimes to produce non-colorable graphs.
      if (seed % 4 == 0 && n >= 4) {
        std::vector<Edge> e = g.edges();
        for (Vertex a = 0; a < 4; ++a)
          for (Vertex b = a + 1; b < 4; ++b)
            if (!g.adjacent(a, b)) e.emplace_back(a, b);
        g = build_graph(n, e);
      }
      auto brute = naive::brute_force_count(g);
      auto list = naive::all_colorings(g);
      OracleQueries q;
      q.pairs.push_back({0, static_cast<Vertex>(n - 1)});
      q.sets.push_back(VertexSet(n, {0, 1, 2}));
      auto s = enumerate_3colorings(g, q);
      ASSERT_EQ(s.count, brute) << "seed " << seed << " p " << p;
      ASSERT_EQ(list.colorings.size(), brute);
      EXPECT_EQ(s.colorable, brute > 0);
      if (brute > 0) {
        EXPECT_EQ(s.always_same(0), naive::always_same(list, 0, static_cast<Vertex>(n - 1)));
        EXPECT_EQ(s.always_monochromatic(0), naive::always_monochromatic(list, q.sets[0]));
        EXPECT_EQ(s.always_multichromatic(0), naive::always_multichromatic(list, q.sets[0]));
      }
    }
  }
}

TEST(Enumerate, PlantedInstancesAreColorable) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto gen = planted(14, 0.4, seed);
    auto s = enumerate_3colorings(gen.graph, {});
    EXPECT_GE(s.count, 1u);
    EXPECT_EQ(s.count, naive::all_colorings(gen.graph).colorings.size());
  }
}

TEST(VerifyProgress, PathExamples) {
  Graph p = path(3);
  Progress t1{LargeSet{VertexSet(3, {0, 2}), TwoColoring::independent(VertexSet(3, {0, 2}))}, "test"};
  // ceil(3 / 2) = 2 <= |X|.
  EXPECT_TRUE(verify_progress_claim(p, t1, 2).accepted);
  // At k = 1 the threshold is 3 and the claim is too small.
  EXPECT_FALSE(verify_progress_claim(p, t1, 1).accepted);

  Progress t0{SameColor{0, 2}, "test"};
  auto v0 = verify_progress_claim(p, t0, 1);
  EXPECT_FALSE(v0.accepted);
  EXPECT_FALSE(v0.reason.empty());

  Progress t2{SmallNeighborhood{VertexSet(3, {0}), TwoColoring::independent(VertexSet(3, {0})),
                                VertexSet(3, {1})},
              "test"};
  EXPECT_TRUE(verify_progress_claim(p, t2, 1).accepted);
}

TEST(VerifyProgress, RejectsStructuralErrors) {
  Graph p = path(3);
  // Type 1 set containing an odd cycle.
  Graph t = triangle();
  Progress t1{LargeSet{t.all(), TwoColoring{VertexSet(3, {0, 1}), VertexSet(3, {2})}}, "test"};
  EXPECT_FALSE(verify_progress_claim(t, t1, 1).accepted);
  // Type 2 with a neighborhood that is too large for k = 1.
  Progress t2{SmallNeighborhood{VertexSet(3, {1}), TwoColoring::independent(VertexSet(3, {1})),
                                VertexSet(3, {0, 2})},
              "test"};
  EXPECT_FALSE(verify_progress_claim(p, t2, 1).accepted);
  EXPECT_TRUE(verify_progress_claim(p, t2, 2).accepted);
  // Wrong neighborhood.
  Progress t2b{SmallNeighborhood{VertexSet(3, {0}), TwoColoring::independent(VertexSet(3, {0})),
                                 VertexSet(3, {2})},
               "test"};
  EXPECT_FALSE(verify_progress_claim(p, t2b, 1).accepted);
}

TEST(VerifyProgress, TypeZeroAndMonoByOracle) {
  // Two triangles sharing edge 1-2: vertices 0 and 3 always share a color.
  Graph g = make(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_TRUE(verify_progress_claim(g, Progress{SameColor{0, 3}, "t"}, 1).accepted);
  EXPECT_TRUE(verify_progress_claim(g, Progress{MonoSet{VertexSet(4, {0, 3})}, "t"}, 1).accepted);
  EXPECT_FALSE(verify_progress_claim(g, Progress{MonoSet{VertexSet(4, {0, 1})}, "t"}, 1).accepted);
}

TEST(VerifyClaim, MultichromaticAndConditional) {
  Graph p = path(3);
  EXPECT_TRUE(verify_claim(p, MultichromaticClaim{VertexSet(3, {0, 1})}, 1).accepted);
  EXPECT_FALSE(verify_claim(p, MultichromaticClaim{VertexSet(3, {0, 2})}, 1).accepted);
  // Conditioned on 0 != 2, the set {0} is trivially monochromatic, {0, 2} never is.
  EXPECT_TRUE(verify_claim(p, ConditionalMonoClaim{VertexSet(3, {0}), 2, 0}, 1).accepted);
  EXPECT_FALSE(verify_claim(p, ConditionalMonoClaim{VertexSet(3, {0, 2}), 2, 0}, 1).accepted);
}

TEST(VerifyClaim, TooLargeThrows) {
  VerifyOptions o;
  o.oracle.cap = 5;
  Graph g = path(8);
  EXPECT_THROW(verify_claim(g, MultichromaticClaim{VertexSet(8, {0, 1})}, 1, o), TooLarge);
}
