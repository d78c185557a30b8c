#include "tricolor/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "tricolor/errors.hpp"

namespace tricolor {

std::optional<Method> parse_method(std::string_view name) {
  if (name == "pipeline") return Method::kPipeline;
  if (name == "greedy") return Method::kGreedy;
  if (name == "extract") return Method::kExtract;
  if (name == "kt") return Method::kKt;
  return std::nullopt;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::kPipeline: return "pipeline";
    case Method::kGreedy: return "greedy";
    case Method::kExtract: return "extract";
    case Method::kKt: return "kt";
  }
  return "unknown";
}

void certify_neighborhoods(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 3) continue;
    auto split = bipartition(g, neighbors_in(g, v, g.all()));
    if (auto* odd = std::get_if<OddCycle>(&split)) {
      NonColorabilityWitness w;
      w.kind = NonColorabilityWitness::Kind::kOddWheel;
      w.center = v;
      w.vertices = std::move(odd->cycle);
      throw NotThreeColorable(std::move(w));
    }
  }
}

namespace {

void absorb(SeekSummary& sum, const SeekOutcome& out) {
  ++sum.calls;
  if (const auto* pr = std::get_if<Progress>(&out.result)) {
    ++sum.found;
    ++sum.progress[kind_name(pr->kind())];
  } else if (const auto* f = std::get_if<SeekFailure>(&out.result)) {
    ++sum.failures[failure_name(f->reason)];
  }
  sum.rounds += out.audits.size();
  for (const auto& a : out.audits) {
    if (a.j == 1 && a.t_size > 0) {
      sum.y1_over_t1.push_back(static_cast<double>(a.yj_size) / static_cast<double>(a.t_size));
    }
    for (const auto& f : a.flags) {
      if (f.hard || !f.evaluated) continue;
      auto& [pass, total] = sum.soft_flags[f.name];
      ++total;
      if (f.pass) ++pass;
    }
  }
}

// When the seek fails on a graph of size s, it is not retried until the
// working graph has shrunk to s * shrink.
class SeekThrottle {
 public:
  explicit SeekThrottle(double shrink) : shrink_(shrink) {}
  bool allowed(std::size_t n) const {
    return !failed_at_ || static_cast<double>(n) <= static_cast<double>(*failed_at_) * shrink_;
  }
  void failed(std::size_t n) { failed_at_ = n; }

 private:
  double shrink_;
  std::optional<std::size_t> failed_at_;
};

Params seek_params(const Params& p, const Graph& h, std::size_t min_deg, double k_cap) {
  Params q = p;
  q.k = 0;
  q = resolve(q, h.order(), min_deg);
  q.k = std::max(1.0, std::min(q.k, k_cap));
  q.nh = p.nh;
  return q;
}

std::optional<Progress> run_seek(const Graph& h, std::size_t min_deg, const Params& q,
                                 const Instrumentation& instr, SeekSummary& sum) {
  SeekOutcome out = seek_progress(h, min_deg, q, instr);
  absorb(sum, out);
  if (auto* w = std::get_if<NonColorabilityWitness>(&out.result)) throw NotThreeColorable(*w);
  if (auto* pr = std::get_if<Progress>(&out.result)) return std::move(*pr);
  return std::nullopt;
}

double driver_k(const Params& p, std::size_t n, std::size_t degree) {
  if (p.k > 0) return std::max(1.0, p.k);
  const double d = static_cast<double>(std::max<std::size_t>(degree, 1));
  return std::max(1.0, p.ck * std::sqrt(static_cast<double>(std::max<std::size_t>(n, 1)) / d));
}

}  // namespace

ColorResult pipeline_color(const Graph& g, const Params& p, const Instrumentation& instr) {
  if (p.certify_neighborhoods) certify_neighborhoods(g);
  ColorResult res;
  ColorReport& rep = res.report;
  rep.method = "pipeline";
  rep.n = g.order();
  rep.m = g.num_edges();
  rep.degree_split = degree_split(g.order(), p.split_exponent);
  rep.k = driver_k(p, g.order(), rep.degree_split);
  const double k = rep.k;
  SeekThrottle throttle(p.seek_retry_shrink);

  ProgressSource source = [&](const Graph& h) -> SourceAction {
    const std::size_t nv = h.order();
    if (nv < p.small_graph || h.num_edges() == 0) return Exhausted{};

    Vertex top = 0;
    for (Vertex v = 1; v < nv; ++v) {
      if (h.degree(v) > h.degree(top)) top = v;
    }
    if (h.degree(top) >= type1_threshold(nv, k, p.progress.c1)) {
      VertexSet nb = neighbors_in(h, top, h.all());
      auto split = bipartition(h, nb);
      if (auto* odd = std::get_if<OddCycle>(&split)) {
        NonColorabilityWitness w;
        w.kind = NonColorabilityWitness::Kind::kOddWheel;
        w.center = top;
        w.vertices = std::move(odd->cycle);
        throw NotThreeColorable(std::move(w));
      }
      ++rep.type1_extractions;
      return Progress{LargeSet{std::move(nb), std::move(std::get<TwoColoring>(split))},
                      "pipeline_high_degree"};
    }

    const std::size_t min_deg = h.min_degree();
    const std::size_t split_deg = degree_split(nv, p.split_exponent);
    if (min_deg >= split_deg && throttle.allowed(nv)) {
      const Params q = seek_params(p, h, min_deg, k);
      if (auto pr = run_seek(h, min_deg, q, instr, rep.seek)) return std::move(*pr);
      throttle.failed(nv);
    }

    // Peel: everything below the split, or the minimum-degree layer.
    const std::size_t cut = min_deg >= split_deg ? min_deg + 1 : split_deg;
    Defer d;
    for (Vertex v = 0; v < nv; ++v) {
      if (h.degree(v) < cut) d.vertices.push_back(v);
    }
    ++rep.deferral_batches;
    return d;
  };

  DriverOptions opts;
  opts.thresholds = p.progress;
  DriverResult dr = color_with_progress(g, k, source, opts, instr);
  res.coloring = std::move(dr.coloring);
  rep.colors_used = dr.stats.colors_used;
  rep.driver = std::move(dr.stats);
  return res;
}

namespace {

ColorResult kt_color(const Graph& g, const Params& p, const Instrumentation& instr) {
  ColorResult res;
  ColorReport& rep = res.report;
  rep.method = "kt";
  rep.n = g.order();
  rep.m = g.num_edges();
  rep.k = driver_k(p, g.order(), g.min_degree());
  const double k = rep.k;
  ProgressSource source = [&](const Graph& h) -> SourceAction {
    if (h.num_edges() == 0) return Exhausted{};
    const std::size_t min_deg = h.min_degree();
    const Params q = seek_params(p, h, min_deg, k);
    if (auto pr = run_seek(h, min_deg, q, instr, rep.seek)) return std::move(*pr);
    return Exhausted{};
  };
  DriverOptions opts;
  opts.thresholds = p.progress;
  DriverResult dr = color_with_progress(g, k, source, opts, instr);
  res.coloring = std::move(dr.coloring);
  rep.colors_used = dr.stats.colors_used;
  rep.driver = std::move(dr.stats);
  return res;
}

}  // namespace

ColorResult color_graph(const Graph& g, Method method, const Params& p,
                        const Instrumentation& instr) {
  switch (method) {
    case Method::kPipeline: return pipeline_color(g, p, instr);
    case Method::kKt: return kt_color(g, p, instr);
    case Method::kGreedy: {
      ColorResult res;
      res.coloring = greedy_color(g);
      res.report.method = "greedy";
      res.report.n = g.order();
      res.report.m = g.num_edges();
      res.report.colors_used = res.coloring.palette_size();
      return res;
    }
    case Method::kExtract: {
      BaselineResult b = neighborhood_extraction_color(g, default_extraction_threshold(g.order()));
      ColorResult res;
      res.coloring = std::move(b.coloring);
      res.report.method = "extract";
      res.report.n = g.order();
      res.report.m = g.num_edges();
      res.report.colors_used = b.report.colors_used;
      res.report.baseline = b.report;
      return res;
    }
  }
  throw std::invalid_argument("color_graph: unknown method");
}

nlohmann::json to_json(const SeekSummary& s) {
  nlohmann::json flags = nlohmann::json::object();
  for (const auto& [name, pt] : s.soft_flags) {
    flags[name] = {{"passed", pt.first}, {"evaluated", pt.second}};
  }
  double mean = 0;
  for (double r : s.y1_over_t1) mean += r;
  if (!s.y1_over_t1.empty()) mean /= static_cast<double>(s.y1_over_t1.size());
  return {{"calls", s.calls},
          {"found", s.found},
          {"failures", s.failures},
          {"progress", s.progress},
          {"rounds", s.rounds},
          {"soft_flags", flags},
          {"y1_over_t1_mean", s.y1_over_t1.empty() ? nlohmann::json(nullptr) : nlohmann::json(mean)},
          {"y1_over_t1_count", s.y1_over_t1.size()}};
}

nlohmann::json to_json(const ColorReport& r) {
  nlohmann::json j = {{"method", r.method},
                      {"n", r.n},
                      {"m", r.m},
                      {"colors_used", r.colors_used},
                      {"k", r.k},
                      {"degree_split", r.degree_split},
                      {"type1_extractions", r.type1_extractions},
                      {"deferral_batches", r.deferral_batches},
                      {"seek", to_json(r.seek)}};
  if (r.driver) j["driver"] = to_json(*r.driver);
  if (r.baseline) j["baseline"] = to_json(*r.baseline);
  return j;
}

}  // namespace tricolor
