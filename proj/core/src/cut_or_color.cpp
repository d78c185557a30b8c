#include <stdexcept>

#include "tricolor/kt.hpp"

namespace tricolor {

CutContext::CutContext(const Graph& g, Vertex r0, VertexSet t1)
    : g_(&g), r0_(r0), nr0_(neighbors_in(g, r0, g.all())), t1_(std::move(t1)), z_(g.order()) {}

const VertexSet& CutContext::z(Vertex w) {
  auto& slot = z_.at(w);
  if (!slot) {
    if (!t1_.contains(w)) throw std::out_of_range("CutContext::z: vertex outside T1");
    slot = neighborhood_in(*g_, neighbors_in(*g_, w, nr0_), t1_);
  }
  return *slot;
}

namespace {

bool record_multichromatic(const Graph& g, const VertexSet& w, const Params& p,
                           const Instrumentation& instr, std::optional<Progress>& progress) {
  auto outcome = multichromatic_test(g, w, p);
  if (auto* pr = std::get_if<Progress>(&outcome)) {
    progress = std::move(*pr);
    return false;
  }
  if (instr.observer != nullptr) instr.observer->on_multichromatic(g, w);
  return true;
}

}  // namespace

CutResult cut_or_color(CutContext& ctx, const VertexSet& s, const VertexSet& t_side, Vertex t,
                       const Params& p, const Instrumentation& instr) {
  const Graph& g = ctx.graph();
  const std::size_t n = g.order();
  const std::size_t nh = p.nh;
  CutResult result;

  VertexSet x = neighbors_in(g, t, s);
  VertexSet y(n);
  std::vector<std::size_t> cnt_s(n, 0);  // |N_Y(s)| for s in S
  std::vector<std::size_t> cnt_t(n, 0);  // |Z(t') ∩ Y| for t' in T

  auto add_to_y = [&](Vertex v) {
    y.insert(v);
    for (Vertex w : g.neighbors(v)) {
      if (s.contains(w)) ++cnt_s[w];
    }
    for (Vertex w : ctx.z(v)) {
      if (t_side.contains(w)) ++cnt_t[w];
    }
  };
  for (Vertex v : neighborhood_in(g, x, t_side)) add_to_y(v);

  for (;;) {
    if (x == s) {
      if (instr.observer != nullptr) instr.observer->on_mono_if_differ(g, ctx.root(), t, s);
      result.outcome = MonochromaticIfDiffer{};
      return result;
    }
    std::optional<Vertex> xs;
    for (Vertex v : s) {
      if (!x.contains(v) && cnt_s[v] >= nh) {
        xs = v;
        break;
      }
    }
    if (xs) {
      std::optional<Progress> progress;
      if (!record_multichromatic(g, neighbors_in(g, *xs, y), p, instr, progress)) {
        result.outcome = std::move(*progress);
        return result;
      }
      x.insert(*xs);
      for (Vertex w : g.neighbors(*xs)) {
        if (t_side.contains(w) && !y.contains(w)) add_to_y(w);
      }
      ++result.x_extensions;
      instr.emit({{"event", "extension"}, {"kind", "x"}, {"vertex", *xs}, {"x", x.size()},
                  {"y", y.size()}});
      continue;
    }
    std::optional<Vertex> yt;
    for (Vertex v : t_side) {
      if (!y.contains(v) && cnt_t[v] >= nh) {
        yt = v;
        break;
      }
    }
    if (yt) {
      std::optional<Progress> progress;
      if (!record_multichromatic(g, ctx.z(*yt) & y, p, instr, progress)) {
        result.outcome = std::move(*progress);
        return result;
      }
      add_to_y(*yt);
      ++result.y_extensions;
      instr.emit({{"event", "extension"}, {"kind", "y"}, {"vertex", *yt}, {"x", x.size()},
                  {"y", y.size()}});
      continue;
    }
    if (instr.observer != nullptr) {
      instr.observer->on_sparse_cut(g, ctx.root(), s, t_side, t, x, y, nh);
    }
    result.outcome = SparseCut{std::move(x), std::move(y)};
    return result;
  }
}

const char* violation_name(CutViolation v) {
  switch (v) {
    case CutViolation::kNotSubproblem: return "not_subproblem";
    case CutViolation::kTrivial: return "trivial";
    case CutViolation::kI1: return "I1";
    case CutViolation::kI2: return "I2";
    case CutViolation::kI3: return "I3";
    case CutViolation::kI4: return "I4";
  }
  return "unknown";
}

std::vector<CutViolation> check_sparse_cut(const Graph& g, Vertex r0, const VertexSet& s,
                                           const VertexSet& t_side, Vertex t, const VertexSet& x,
                                           const VertexSet& y, std::size_t nh) {
  std::vector<CutViolation> out;
  if (!x.is_subset_of(s) || !y.is_subset_of(t_side)) out.push_back(CutViolation::kNotSubproblem);
  if (x == s) out.push_back(CutViolation::kTrivial);
  if (!neighbors_in(g, t, s).is_subset_of(x)) out.push_back(CutViolation::kI1);

  const VertexSet outside = t_side - y;
  for (Vertex v : x) {
    if (!neighbors_in(g, v, outside).empty()) {
      out.push_back(CutViolation::kI2);
      break;
    }
  }
  for (Vertex v : s - x) {
    if (degree_in(g, v, y) >= nh) {
      out.push_back(CutViolation::kI3);
      break;
    }
  }
  const VertexSet nr0 = neighbors_in(g, r0, g.all());
  for (Vertex v : outside) {
    if (neighborhood_in(g, neighbors_in(g, v, nr0), y).size() >= nh) {
      out.push_back(CutViolation::kI4);
      break;
    }
  }
  return out;
}

}  // namespace tricolor
