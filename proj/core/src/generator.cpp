#include "tricolor/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tricolor/errors.hpp"
#include "tricolor/rng.hpp"

namespace tricolor {

std::array<std::size_t, 3> class_sizes(std::size_t n, const std::array<double, 3>& balance) {
  std::array<std::size_t, 3> sizes{};
  std::array<double, 3> frac{};
  std::size_t assigned = 0;
  for (int i = 0; i < 3; ++i) {
    const double exact = balance[i] * static_cast<double>(n);
    sizes[i] = static_cast<std::size_t>(std::floor(exact));
    frac[i] = exact - std::floor(exact);
    assigned += sizes[i];
  }
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return frac[a] > frac[b]; });
  for (int i = 0; assigned < n; i = (i + 1) % 3, ++assigned) ++sizes[order[i]];
  return sizes;
}

namespace {

void validate(const GenParams& p) {
  double sum = 0;
  for (double w : p.class_balance) {
    if (!(w >= 0)) throw std::invalid_argument("class_balance weights must be nonnegative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("class_balance must sum to 1");
  if (!(p.edge_prob >= 0 && p.edge_prob <= 1)) {
    throw std::invalid_argument("edge_prob must lie in [0, 1]");
  }
  if (p.max_attempts < 1) throw std::invalid_argument("max_attempts must be positive");
}

Generated sample_once(const GenParams& p, Rng& rng) {
  const auto sizes = class_sizes(p.n, p.class_balance);
  // Random labelling: labels[i] is the vertex id of the i-th slot; slots are
  // grouped by class.
  std::vector<Vertex> labels(p.n);
  std::iota(labels.begin(), labels.end(), Vertex{0});
  rng.shuffle(labels.begin(), labels.end());

  Generated out;
  out.planted = Coloring(p.n);
  std::array<std::size_t, 4> start{0, sizes[0], sizes[0] + sizes[1], p.n};
  for (int c = 0; c < 3; ++c) {
    for (std::size_t i = start[c]; i < start[c + 1]; ++i) out.planted[labels[i]] = c;
  }

  std::vector<Edge> edges;
  const double q = p.edge_prob;
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      const std::uint64_t rows = start[a + 1] - start[a];
      const std::uint64_t cols = start[b + 1] - start[b];
      const std::uint64_t total = rows * cols;
      auto emit = [&](std::uint64_t idx) {
        Vertex u = labels[start[a] + idx / cols];
        Vertex v = labels[start[b] + idx % cols];
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
      };
      if (q <= 0 || total == 0) continue;
      if (q >= 1) {
        for (std::uint64_t idx = 0; idx < total; ++idx) emit(idx);
        continue;
      }
      // Skip sampling: gaps between successive edges are geometric.
      std::uint64_t idx = rng.geometric(q);
      while (idx < total) {
        emit(idx);
        const std::uint64_t gap = rng.geometric(q);
        if (gap >= total) break;
        idx += gap + 1;
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  out.graph = Graph::from_edges(p.n, edges);
  return out;
}

}  // namespace

Generated generate_planted(const GenParams& params) {
  validate(params);
  Rng rng(params.seed);
  std::size_t best = 0;
  for (int attempt = 1; attempt <= params.max_attempts; ++attempt) {
    Generated g = sample_once(params, rng);
    g.attempts = attempt;
    if (!params.min_degree_target) return g;
    const std::size_t md = g.graph.min_degree();
    if (md >= *params.min_degree_target) return g;
    best = std::max(best, md);
  }
  throw MinDegreeUnreachable(*params.min_degree_target, best, params.max_attempts);
}

}  // namespace tricolor
