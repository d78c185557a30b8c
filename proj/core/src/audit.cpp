#include <cmath>

#include "tricolor/kt.hpp"

namespace tricolor {

bool RoundAudit::hard_ok() const {
  for (const auto& f : flags) {
    if (f.hard && f.evaluated && !f.pass) return false;
  }
  return true;
}

const AuditFlag* RoundAudit::flag(const std::string& name) const {
  for (const auto& f : flags) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

namespace {

Rational count(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

}  // namespace

RoundAudit audit_round(const Graph& g, const RoundInputs& in) {
  const RegularPair& pair = *in.pair;
  RoundAudit a;
  a.j = in.j;
  a.s_size = pair.s.size();
  a.t_size = pair.t.size();
  a.x_size = in.x.size();
  a.y_size = in.y.size();
  a.delta_s = pair.delta_s;
  a.delta_t = pair.delta_t;
  a.side_adopted = in.side_adopted;

  const bool adopted = in.side_adopted && in.side.has_value();
  const VertexSet& xj = adopted ? in.side->x : in.x;
  const VertexSet& yj = adopted ? in.side->y : in.y;
  a.xj_size = xj.size();
  a.yj_size = yj.size();
  const Rational nh = count(in.nh);
  a.mu = pair.delta_s > 0 ? count(a.yj_size) * nh / (pair.delta_s * pair.delta_s) : Rational(0);

  const VertexSet rest = pair.s - in.x;
  const Rational ypp_need = pair.delta_t / 3;
  VertexSet ypp(g.order());
  for (Vertex u : in.y) {
    if (count(degree_in(g, u, rest)) >= ypp_need) ypp.insert(u);
  }
  a.ypp_size = ypp.size();
  a.edges_ypp_rest = incidences(g, ypp, rest);
  a.edges_xy = incidences(g, in.x, in.y);

  auto add = [&](std::string name, bool hard, bool pass, bool evaluated = true) {
    a.flags.push_back({std::move(name), hard, evaluated ? pass : true, evaluated});
  };

  // Hard: these follow from the construction and must never fail.
  add("ypp_edges", true,
      count(a.edges_ypp_rest) >= pair.delta_t * count(in.y.size()) / 6, in.termination_fired);
  add("x_size", true, count(in.x.size()) >= pair.delta_t / 4);
  bool nested = true;
  for (Vertex v : in.x) {
    if (!neighbors_in(g, v, pair.t).is_subset_of(in.y)) {
      nested = false;
      break;
    }
  }
  add("nested", true, nested);
  if (adopted) {
    const SideCut& sc = *in.side;
    add("side_size", true, count(sc.x.size()) >= pair.delta_t / 3);
    add("side_disjoint", true, !sc.x.intersects(in.x) && !sc.y.intersects(in.y));
    bool per_vertex = true;
    const Rational floor_deg = pair.delta_s - nh;
    for (Vertex v : sc.x) {
      if (count(degree_in(g, v, sc.y)) < floor_deg) {
        per_vertex = false;
        break;
      }
    }
    add("side_degree", true, per_vertex);
  } else {
    add("side_size", true, true, false);
    add("side_disjoint", true, true, false);
    add("side_degree", true, true, false);
  }

  // Soft: asymptotic bounds, diagnostics only.
  std::size_t min_dy = 0;
  bool first = true;
  for (Vertex v : in.x) {
    const std::size_t d = degree_in(g, v, in.y);
    if (first || d < min_dy) min_dy = d;
    first = false;
  }
  add("cut_degree", false, !first && count(min_dy) >= pair.delta_s / 2);
  add("mu_floor", false, a.mu >= Rational(1, 8));
  add("y_sqrt_bound", false, count(a.yj_size) * count(a.yj_size) <= 30 * nh * count(a.t_size));
  const double round_bound = 30.0 * static_cast<double>(in.nh) *
                            std::pow(in.k, 1.0 / std::ldexp(1.0, in.j));
  add("y_round_bound", false, static_cast<double>(a.yj_size) < round_bound);
  add("delta_s_floor", false, pair.delta_s >= 2 * nh);
  add("delta_ratio", false, nh * pair.delta_t >= 4 * pair.delta_s);
  return a;
}

nlohmann::json to_json(const RoundAudit& a) {
  nlohmann::json flags = nlohmann::json::object();
  for (const auto& f : a.flags) {
    flags[f.name] = f.evaluated ? nlohmann::json(f.pass) : nlohmann::json(nullptr);
  }
  return {{"j", a.j},
          {"s_size", a.s_size},
          {"t_size", a.t_size},
          {"x_size", a.x_size},
          {"y_size", a.y_size},
          {"xj_size", a.xj_size},
          {"yj_size", a.yj_size},
          {"delta_s", to_string(a.delta_s)},
          {"delta_t", to_string(a.delta_t)},
          {"mu", to_string(a.mu)},
          {"ypp_size", a.ypp_size},
          {"edges_ypp_rest", a.edges_ypp_rest},
          {"edges_xy", a.edges_xy},
          {"side_adopted", a.side_adopted},
          {"flags", flags}};
}

}  // namespace tricolor
