#include <algorithm>
#include <numeric>

#include "tricolor/kt.hpp"

namespace tricolor {

const char* failure_name(FailureReason r) {
  switch (r) {
    case FailureReason::kErrorA: return "error_a";
    case FailureReason::kErrorB: return "error_b";
    case FailureReason::kRoundCapExceeded: return "round_cap_exceeded";
    case FailureReason::kStructureFailed: return "structure_failed";
  }
  return "unknown";
}

namespace {

Rational count(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

Progress emit_progress(Progress pr, const Graph& g, int j, const Instrumentation& instr) {
  if (instr.observer != nullptr) instr.observer->on_progress(g, pr);
  instr.emit({{"event", "progress"},
              {"round", j},
              {"type", kind_name(pr.kind())},
              {"provenance", pr.provenance},
              {"size", claim_vertices(pr, g.order()).size()}});
  return pr;
}

SeekFailure emit_failure(FailureReason r, std::string detail, int j, const Instrumentation& instr) {
  instr.emit({{"event", "error"}, {"round", j}, {"reason", failure_name(r)}, {"detail", detail}});
  return SeekFailure{r, std::move(detail)};
}

}  // namespace

InnerOutcome inner_loop(CutContext& ctx, const RegularPair& pair, const Params& p,
                        const Instrumentation& instr) {
  const Graph& g = ctx.graph();
  const std::int64_t high = ceil_of(pair.delta_t * p.highdeg_factor);
  VertexSet s = pair.s;
  VertexSet t = pair.t;
  std::size_t iterations = 0;
  for (;;) {
    ++iterations;
    if (s.size() <= 1) {
      return emit_failure(FailureReason::kErrorA, "|S| <= 1", pair.j, instr);
    }
    VertexSet u(g.order());
    for (Vertex v : t) {
      if (static_cast<std::int64_t>(degree_in(g, v, s)) >= high) u.insert(v);
    }
    if (u.size() < p.nh) {
      return emit_failure(FailureReason::kErrorB,
                          "|U| = " + std::to_string(u.size()) + " < nh = " + std::to_string(p.nh),
                          pair.j, instr);
    }
    auto mt = multichromatic_test(g, u, p);
    if (auto* pr = std::get_if<Progress>(&mt)) return emit_progress(std::move(*pr), g, pair.j, instr);
    if (instr.observer != nullptr) instr.observer->on_multichromatic(g, u);

    bool cut_found = false;
    for (Vertex seed : u) {
      CutResult r = cut_or_color(ctx, s, t, seed, p, instr);
      if (auto* pr = std::get_if<Progress>(&r.outcome)) {
        return emit_progress(std::move(*pr), g, pair.j, instr);
      }
      if (auto* cut = std::get_if<SparseCut>(&r.outcome)) {
        instr.emit({{"event", "cut"},
                    {"round", pair.j},
                    {"iteration", iterations},
                    {"seed", seed},
                    {"x", cut->x.size()},
                    {"y", cut->y.size()},
                    {"x_extensions", r.x_extensions},
                    {"y_extensions", r.y_extensions}});
        if (cut->x.size() >= s.size()) throw InvariantViolation("inner_loop: S did not shrink");
        s = std::move(cut->x);
        t = std::move(cut->y);
        cut_found = true;
        break;
      }
    }
    if (!cut_found) {
      // U is multichromatic, so some seed differs from r0 in every coloring,
      // and each seed's verdict makes S monochromatic.
      return emit_progress(Progress{MonoSet{s}, "inner_loop"}, g, pair.j, instr);
    }
    if (count(incidences(g, s, t)) < pair.delta_t * count(t.size()) * p.term_factor) {
      return FinalCut{std::move(s), std::move(t), iterations};
    }
  }
}

namespace {

struct RoundsResult {
  std::variant<Progress, SeekFailure> result;
};

RoundsResult run_rounds(const Graph& g, const TwoLevel& h1, const Params& p,
                        const Instrumentation& instr, std::vector<RoundAudit>& audits) {
  CutContext ctx(g, h1.r0, h1.pair.t);
  RegularPair pair = h1.pair;
  for (int j = 1;; ++j) {
    pair.j = j;
    InnerOutcome inner = inner_loop(ctx, pair, p, instr);
    if (auto* pr = std::get_if<Progress>(&inner)) return {std::move(*pr)};
    if (auto* f = std::get_if<SeekFailure>(&inner)) return {std::move(*f)};
    auto& fin = std::get<FinalCut>(inner);

    RoundInputs in;
    in.j = j;
    in.pair = &pair;
    in.x = fin.x;
    in.y = fin.y;
    in.termination_fired = true;
    in.nh = p.nh;
    in.k = p.k;
    if (p.side_cuts) {
      in.side = best_side_cut(g, fin.x, fin.y, pair, p);
      in.side_adopted = in.side->y.size() < fin.y.size();
      instr.emit({{"event", "side_cut"},
                  {"round", j},
                  {"qualifying", in.side->qualifying},
                  {"u", in.side->u ? nlohmann::json(*in.side->u) : nlohmann::json(nullptr)},
                  {"x", in.side->x.size()},
                  {"y", in.side->y.size()},
                  {"adopted", in.side_adopted}});
    }
    RoundAudit audit = audit_round(g, in);
    const bool hard_ok = audit.hard_ok();
    nlohmann::json ev = to_json(audit);
    ev["event"] = "round_end";
    ev["round"] = j;
    instr.emit(ev);
    audits.push_back(std::move(audit));
    if (!hard_ok && p.strict_audit) {
      throw InvariantViolation("round audit: hard flag failed in round " + std::to_string(j));
    }

    if (j >= p.round_cap) {
      return {emit_failure(FailureReason::kRoundCapExceeded,
                           "no progress within " + std::to_string(p.round_cap) + " rounds", j,
                           instr)};
    }
    const VertexSet& ns = in.side_adopted ? in.side->x : in.x;
    const VertexSet& nt = in.side_adopted ? in.side->y : in.y;
    try {
      pair = regularize(g, ns, nt, p, j + 1);
    } catch (const EmptyResult& e) {
      return {emit_failure(FailureReason::kStructureFailed, e.what(), j, instr)};
    }
  }
}

}  // namespace

SeekOutcome seek_progress(const Graph& g, std::size_t min_degree, const Params& p,
                          const Instrumentation& instr) {
  SeekOutcome out;
  out.params = resolve(p, g.order(), min_degree);
  const Params& rp = out.params;
  out.result = SeekFailure{FailureReason::kStructureFailed, "no root available"};
  if (g.order() == 0) return out;

  std::vector<Vertex> roots(g.order());
  std::iota(roots.begin(), roots.end(), Vertex{0});
  std::stable_sort(roots.begin(), roots.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  const std::size_t budget =
      std::min<std::size_t>(roots.size(), static_cast<std::size_t>(std::max(rp.root_retries, 1)));

  for (std::size_t i = 0; i < budget; ++i) {
    const Vertex r0 = roots[i];
    ++out.roots_tried;
    out.root = r0;
    TwoLevelOutcome h = build_two_level(g, r0, rp);
    if (auto* w = std::get_if<NonColorabilityWitness>(&h)) {
      instr.emit({{"event", "error"}, {"round", 0}, {"reason", "not_3_colorable"}, {"root", r0}});
      out.result = std::move(*w);
      return out;
    }
    if (auto* pr = std::get_if<Progress>(&h)) {
      out.result = emit_progress(std::move(*pr), g, 0, instr);
      return out;
    }
    if (auto* f = std::get_if<TwoLevelFailure>(&h)) {
      out.result = emit_failure(FailureReason::kStructureFailed, f->reason, 0, instr);
      continue;
    }
    const auto& h1 = std::get<TwoLevel>(h);
    out.t1_size = h1.pair.t.size();
    instr.emit({{"event", "structure"},
                {"root", r0},
                {"s", h1.pair.s.size()},
                {"t", h1.pair.t.size()},
                {"k", rp.k},
                {"nh", rp.nh},
                {"delta_s", to_string(h1.pair.delta_s)},
                {"delta_t", to_string(h1.pair.delta_t)}});
    try {
      RoundsResult r = run_rounds(g, h1, rp, instr, out.audits);
      if (auto* pr = std::get_if<Progress>(&r.result)) {
        out.result = std::move(*pr);
      } else {
        out.result = std::get<SeekFailure>(std::move(r.result));
      }
    } catch (const SetTooSmall& e) {
      // Only reachable with an nh override below n/k^2.
      out.result = emit_failure(FailureReason::kStructureFailed, e.what(), 0, instr);
    }
    return out;
  }
  return out;
}

}  // namespace tricolor
