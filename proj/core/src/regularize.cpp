#include <algorithm>
#include <deque>

#include "tricolor/blum.hpp"

namespace tricolor {

int degree_bucket(std::size_t d, const Rational& base) {
  if (d == 0) return -1;
  int l = 0;
  Rational pow = 1;
  const Rational target(static_cast<std::int64_t>(d));
  while (pow * base <= target) {
    pow *= base;
    ++l;
  }
  return l;
}

std::pair<VertexSet, VertexSet> prune_to_fixed_point(const Graph& g, const VertexSet& s,
                                                      const VertexSet& u, std::int64_t s_floor,
                                                      std::int64_t u_floor) {
  VertexSet s_alive = s;
  VertexSet u_alive = u;
  const std::size_t n = g.order();
  std::vector<std::int64_t> deg_s(n, 0);  // for S vertices: degree into alive U
  std::vector<std::int64_t> deg_u(n, 0);  // for U vertices: degree into alive S
  // Queue entries: vertex and side (false = S role, true = U role).
  std::deque<std::pair<Vertex, bool>> queue;
  std::vector<char> queued_s(n, 0);
  std::vector<char> queued_u(n, 0);
  for (Vertex v : s) {
    deg_s[v] = static_cast<std::int64_t>(degree_in(g, v, u));
    if (deg_s[v] <= s_floor) {
      queue.emplace_back(v, false);
      queued_s[v] = 1;
    }
  }
  for (Vertex w : u) {
    deg_u[w] = static_cast<std::int64_t>(degree_in(g, w, s));
    if (deg_u[w] <= u_floor) {
      queue.emplace_back(w, true);
      queued_u[w] = 1;
    }
  }
  while (!queue.empty()) {
    const auto [v, in_u] = queue.front();
    queue.pop_front();
    if (!in_u) {
      s_alive.erase(v);
      for (Vertex w : g.neighbors(v)) {
        if (!u_alive.contains(w)) continue;
        if (--deg_u[w] <= u_floor && !queued_u[w]) {
          queue.emplace_back(w, true);
          queued_u[w] = 1;
        }
      }
    } else {
      u_alive.erase(v);
      for (Vertex x : g.neighbors(v)) {
        if (!s_alive.contains(x)) continue;
        if (--deg_s[x] <= s_floor && !queued_s[x]) {
          queue.emplace_back(x, false);
          queued_s[x] = 1;
        }
      }
    }
  }
  return {std::move(s_alive), std::move(u_alive)};
}

RegularPair regularize(const Graph& g, const VertexSet& s, const VertexSet& t, const Params& p,
                       int j) {
  if (s.empty() || t.empty()) throw EmptyResult("regularize: empty input side");
  const Rational& base = p.bucket_base;
  if (base <= 1) throw std::invalid_argument("regularize: bucket_base must exceed 1");

  std::vector<std::size_t> d(g.order(), 0);
  std::size_t total = 0;
  std::size_t max_d = 0;
  for (Vertex w : t) {
    d[w] = degree_in(g, w, s);
    total += d[w];
    max_d = std::max(max_d, d[w]);
  }
  if (total == 0) throw EmptyResult("regularize: no edges between S and T");

  // powers[l] = base^l for every bucket that can be occupied.
  std::vector<Rational> powers{Rational(1)};
  while (powers.back() * base <= Rational(static_cast<std::int64_t>(max_d))) {
    powers.push_back(powers.back() * base);
  }
  const std::size_t buckets = powers.size();
  std::vector<std::size_t> mass(buckets, 0);
  std::vector<int> bucket_of(g.order(), -1);
  for (Vertex w : t) {
    if (d[w] == 0) continue;
    const Rational dw(static_cast<std::int64_t>(d[w]));
    const auto it = std::upper_bound(powers.begin(), powers.end(), dw);
    const int l = static_cast<int>(it - powers.begin()) - 1;
    bucket_of[w] = l;
    mass[l] += d[w];
  }

  const Rational half_avg =
      Rational(static_cast<std::int64_t>(total), static_cast<std::int64_t>(t.size())) / 2;
  int best = -1;
  for (std::size_t l = 0; l < buckets; ++l) {
    if (powers[l] < half_avg || mass[l] == 0) continue;
    if (best < 0 || mass[l] > mass[best]) best = static_cast<int>(l);
  }
  if (best < 0) throw InvariantViolation("regularize: no eligible bucket");

  VertexSet u(g.order());
  for (Vertex w : t) {
    if (bucket_of[w] == best) u.insert(w);
  }
  RegularPair out;
  out.j = j;
  out.bucket = best;
  out.delta_t = powers[best] / p.delta_t_divisor;
  out.delta_s = Rational(static_cast<std::int64_t>(mass[best]),
                         static_cast<std::int64_t>(s.size())) /
                p.delta_s_divisor;

  auto [s_r, t_r] = prune_to_fixed_point(g, s, u, floor_of(out.delta_s), floor_of(out.delta_t));
  if (s_r.empty() || t_r.empty()) throw EmptyResult("regularize: pruning emptied a side");

  const Rational cap = p.degree_cap * out.delta_t;
  for (Vertex v : s_r) {
    if (Rational(static_cast<std::int64_t>(degree_in(g, v, t_r))) <= out.delta_s) {
      throw InvariantViolation("regularize: S survivor at or below delta_s");
    }
  }
  for (Vertex w : t_r) {
    const Rational dw(static_cast<std::int64_t>(degree_in(g, w, s_r)));
    if (dw <= out.delta_t || dw > cap) {
      throw InvariantViolation("regularize: T survivor outside (delta_t, cap * delta_t]");
    }
  }
  out.s = std::move(s_r);
  out.t = std::move(t_r);
  return out;
}

}  // namespace tricolor
