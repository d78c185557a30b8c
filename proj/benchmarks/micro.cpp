#include <map>
#include <utility>

#include <benchmark/benchmark.h>

#include "tricolor/blum.hpp"
#include "tricolor/generator.hpp"
#include "tricolor/kt.hpp"
#include "tricolor/pipeline.hpp"

using namespace tricolor;

namespace {

const Graph& instance(std::size_t n, double p) {
  static std::map<std::pair<std::size_t, double>, Graph> cache;
  auto it = cache.find({n, p});
  if (it == cache.end()) {
    GenParams gp;
    gp.n = n;
    gp.edge_prob = p;
    gp.seed = 7;
    it = cache.emplace(std::make_pair(n, p), generate_planted(gp).graph).first;
  }
  return it->second;
}

void BM_NeighborsIn(benchmark::State& state) {
  const Graph& g = instance(static_cast<std::size_t>(state.range(0)), 0.3);
  VertexSet half(g.order());
  for (Vertex v = 0; v < g.order(); v += 2) half.insert(v);
  Vertex v = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(neighbors_in(g, v, half));
    v = (v + 1) % g.order();
  }
}
BENCHMARK(BM_NeighborsIn)->Arg(1000)->Arg(4000);

void BM_EdgesBetween(benchmark::State& state) {
  const Graph& g = instance(static_cast<std::size_t>(state.range(0)), 0.3);
  VertexSet a(g.order()), b(g.order());
  for (Vertex v = 0; v < g.order(); ++v) (v % 3 == 0 ? a : b).insert(v);
  for (auto _ : state) benchmark::DoNotOptimize(edges_between(g, a, b));
}
BENCHMARK(BM_EdgesBetween)->Arg(1000)->Arg(4000);

void BM_Regularize(benchmark::State& state) {
  const Graph& g = instance(static_cast<std::size_t>(state.range(0)), 0.3);
  const VertexSet s = neighbors_in(g, 0, g.all());
  VertexSet t = neighborhood(g, s);
  t.erase(0);
  const Params p;
  for (auto _ : state) benchmark::DoNotOptimize(regularize(g, s, t, p));
}
BENCHMARK(BM_Regularize)->Arg(1000)->Arg(4000);

void BM_CutOrColor(benchmark::State& state) {
  const Graph& g = instance(static_cast<std::size_t>(state.range(0)), 0.3);
  Params p;
  p.k = 2;
  p = resolve(p, g.order(), g.min_degree());
  auto h = build_two_level(g, 0, p);
  auto* tl = std::get_if<TwoLevel>(&h);
  if (tl == nullptr) {
    state.SkipWithError("no two-level structure");
    return;
  }
  const Vertex seed = *tl->pair.t.first();
  for (auto _ : state) {
    CutContext ctx(g, tl->r0, tl->pair.t);
    benchmark::DoNotOptimize(cut_or_color(ctx, tl->pair.s, tl->pair.t, seed, p));
  }
}
BENCHMARK(BM_CutOrColor)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_Pipeline(benchmark::State& state) {
  const Graph& g = instance(static_cast<std::size_t>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(pipeline_color(g, Params{}));
}
BENCHMARK(BM_Pipeline)->Arg(1000)->Arg(3000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
