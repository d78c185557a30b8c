#include "tricolor/driver.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "tricolor/errors.hpp"

namespace tricolor {

nlohmann::json to_json(const DriverStep& s) {
  return {{"step", s.step},
          {"mechanism", s.mechanism},
          {"set_size", s.set_size},
          {"neighborhood_size", s.neighborhood_size},
          {"colors_so_far", s.colors_so_far},
          {"graph_size", s.graph_size}};
}

nlohmann::json to_json(const DriverStats& s) {
  return {{"colors_used", s.colors_used},
          {"contractions", s.contractions},
          {"type1_batches", s.type1_batches},
          {"type2_batches", s.type2_batches},
          {"deferred_vertices", s.deferred_vertices},
          {"fallback_vertices", s.fallback_vertices},
          {"phases", s.phases},
          {"fallback_colors", s.fallback_colors},
          {"batch_colors", s.batch_colors},
          {"steps", s.steps.size()}};
}

namespace {

class Driver {
 public:
  Driver(const Graph& g, double k, const DriverOptions& opts, const Instrumentation& instr)
      : g_(g), k_(k), opts_(opts), instr_(instr), cur_(g), groups_(g.order()),
        slot_color_(g.order(), -1) {
    for (Vertex v = 0; v < g.order(); ++v) groups_[v] = {v};
    open_phase();
  }

  DriverResult run(const ProgressSource& source) {
    while (cur_.order() > 0) {
      Subgraph h = induced_subgraph(cur_, active_);
      SourceAction action;
      try {
        action = source(h.graph);
      } catch (const NotThreeColorable& e) {
        throw NotThreeColorable(remap(e.witness, h.to_parent));
      }
      if (std::holds_alternative<Exhausted>(action)) {
        if (active_.size() == cur_.order()) break;
        open_phase();
        continue;
      }
      if (auto* d = std::get_if<Defer>(&action)) {
        defer(*d, h);
        continue;
      }
      apply(std::get<Progress>(action), h);
    }
    return finish();
  }

 private:
  void open_phase() {
    active_ = cur_.all();
    phase_start_ = cur_.order();
    phase_removed_ = 0;
    phase_slot_ = -1;
  }

  std::vector<Vertex> members(Vertex cur_v) const { return groups_[cur_v]; }

  NonColorabilityWitness remap(const NonColorabilityWitness& w,
                               const std::vector<Vertex>& to_cur) const {
    auto all_singletons = [&] {
      if (w.center && groups_[to_cur[*w.center]].size() != 1) return false;
      for (Vertex v : w.vertices) {
        if (groups_[to_cur[v]].size() != 1) return false;
      }
      return true;
    };
    NonColorabilityWitness out;
    if (all_singletons()) {
      out.kind = w.kind;
      if (w.center) out.center = groups_[to_cur[*w.center]][0];
      for (Vertex v : w.vertices) out.vertices.push_back(groups_[to_cur[v]][0]);
      return out;
    }
    out.kind = NonColorabilityWitness::Kind::kForcedAdjacentPair;
    if (w.center) {
      for (Vertex m : groups_[to_cur[*w.center]]) out.vertices.push_back(m);
    }
    for (Vertex v : w.vertices) {
      for (Vertex m : groups_[to_cur[v]]) out.vertices.push_back(m);
    }
    return out;
  }

  // Keeps only `keep` in the working graph, remapping groups and the phase.
  void restrict_to(const VertexSet& keep) {
    Subgraph sub = induced_subgraph(cur_, keep);
    std::vector<std::vector<Vertex>> groups(sub.to_parent.size());
    VertexSet active(sub.to_parent.size());
    for (Vertex i = 0; i < sub.to_parent.size(); ++i) {
      groups[i] = std::move(groups_[sub.to_parent[i]]);
      if (active_.contains(sub.to_parent[i])) active.insert(i);
    }
    cur_ = std::move(sub.graph);
    groups_ = std::move(groups);
    active_ = std::move(active);
  }

  void merge(const VertexSet& set_cur) {
    Contraction c = contract_set(cur_, set_cur);
    std::vector<std::vector<Vertex>> groups(c.graph.order());
    VertexSet active(c.graph.order());
    for (Vertex v = 0; v < cur_.order(); ++v) {
      auto& dst = groups[c.vertex_map[v]];
      dst.insert(dst.end(), groups_[v].begin(), groups_[v].end());
      if (active_.contains(v)) active.insert(c.vertex_map[v]);
    }
    for (auto& grp : groups) std::sort(grp.begin(), grp.end());
    cur_ = std::move(c.graph);
    groups_ = std::move(groups);
    active_ = std::move(active);
  }

  VertexSet to_cur(const VertexSet& h_set, const Subgraph& h) const {
    VertexSet out(cur_.order());
    for (Vertex v : h_set) out.insert(h.to_parent[v]);
    return out;
  }

  void record(std::string mechanism, std::size_t set_size, std::size_t nb_size,
              std::optional<std::size_t> colors = std::nullopt) {
    DriverStep s;
    s.step = stats_.steps.size();
    s.mechanism = std::move(mechanism);
    s.set_size = set_size;
    s.neighborhood_size = nb_size;
    s.colors_so_far = colors.value_or(2 * slots_);
    s.graph_size = cur_.order();
    stats_.graph_sizes.push_back(cur_.order());
    instr_.emit(to_json(s));
    stats_.steps.push_back(std::move(s));
  }

  void defer(const Defer& d, const Subgraph& h) {
    if (d.vertices.empty()) throw UnsoundProgress("driver: empty deferral");
    VertexSet gone(cur_.order());
    for (Vertex v : d.vertices) {
      if (v >= h.graph.order()) throw UnsoundProgress("driver: deferred vertex out of range");
      const Vertex c = h.to_parent[v];
      if (gone.contains(c)) continue;
      gone.insert(c);
      deferred_.push_back(groups_[c]);
      stats_.deferred_vertices += groups_[c].size();
    }
    restrict_to(cur_.all() - gone);
    record("defer", gone.size(), 0);
  }

  void contract_claim(const VertexSet& set_h, const Subgraph& h, const char* mechanism) {
    const VertexSet s = to_cur(set_h, h);
    for (Vertex a : s) {
      for (Vertex b : cur_.neighbors(a)) {
        if (!s.contains(b)) continue;
        // A sound claim forced two adjacent vertices into one color class.
        NonColorabilityWitness w;
        w.kind = NonColorabilityWitness::Kind::kForcedAdjacentPair;
        for (Vertex x : groups_[a]) {
          for (Vertex y : g_.neighbors(x)) {
            if (std::binary_search(groups_[b].begin(), groups_[b].end(), y)) {
              w.vertices = {x, y};
              throw NotThreeColorable(w);
            }
          }
        }
        w.vertices = {groups_[a][0], groups_[b][0]};
        throw NotThreeColorable(w);
      }
    }
    merge(s);
    stats_.contractions += s.size() - 1;
    record(mechanism, s.size(), 0);
  }

  void apply(const Progress& pr, const Subgraph& h) {
    if (auto err = structural_violation(h.graph, pr, k_, opts_.thresholds)) {
      throw UnsoundProgress("driver: " + *err + " (" + pr.provenance + ")");
    }
    if (const auto* t0 = std::get_if<SameColor>(&pr.claim)) {
      contract_claim(VertexSet(h.graph.order(), {t0->u, t0->v}), h, "contract");
      return;
    }
    if (const auto* mono = std::get_if<MonoSet>(&pr.claim)) {
      contract_claim(mono->set, h, "contract");
      return;
    }
    const bool type1 = pr.kind() == ProgressKind::kType1;
    const TwoColoring& wit = type1 ? std::get<LargeSet>(pr.claim).witness
                                   : std::get<SmallNeighborhood>(pr.claim).witness;
    const VertexSet& x_h = type1 ? std::get<LargeSet>(pr.claim).set
                                 : std::get<SmallNeighborhood>(pr.claim).set;
    if (phase_slot_ < 0) {
      phase_slot_ = static_cast<int>(slots_++);
      ++stats_.phases;
    }
    for (int side = 0; side < 2; ++side) {
      for (Vertex v : side == 0 ? wit.side0 : wit.side1) {
        for (Vertex orig : groups_[h.to_parent[v]]) slot_color_[orig] = 2 * phase_slot_ + side;
      }
    }
    const VertexSet nb_h = neighborhood(h.graph, x_h) - x_h;
    const VertexSet x = to_cur(x_h, h);
    const VertexSet nb = to_cur(nb_h, h);
    active_ -= x;
    active_ -= nb;
    phase_removed_ += x.size() + nb.size();
    if (type1) {
      ++stats_.type1_batches;
    } else {
      ++stats_.type2_batches;
    }
    restrict_to(cur_.all() - x);
    record(type1 ? "type1" : "type2", x.size(), nb.size());
    if (2 * phase_removed_ >= phase_start_) open_phase();
  }

  Color first_free(const std::vector<Vertex>& group, const std::vector<Color>& fb) const {
    std::vector<char> used;
    for (Vertex v : group) {
      for (Vertex w : g_.neighbors(v)) {
        const Color c = fb[w];
        if (c < 0) continue;
        if (static_cast<std::size_t>(c) >= used.size()) used.resize(c + 1, 0);
        used[c] = 1;
      }
    }
    Color c = 0;
    while (static_cast<std::size_t>(c) < used.size() && used[c]) ++c;
    return c;
  }

  DriverResult finish() {
    const std::size_t n = g_.order();
    std::vector<Color> fb(n, kUncolored);
    for (Vertex v = 0; v < cur_.order(); ++v) {
      const Color c = first_free(groups_[v], fb);
      for (Vertex m : groups_[v]) fb[m] = c;
      stats_.fallback_vertices += groups_[v].size();
    }
    for (auto it = deferred_.rbegin(); it != deferred_.rend(); ++it) {
      const Color c = first_free(*it, fb);
      for (Vertex m : *it) fb[m] = c;
    }
    Color reserve = 0;
    for (Color c : fb) reserve = std::max(reserve, static_cast<Color>(c + 1));

    DriverResult out;
    out.coloring = Coloring(n);
    for (Vertex v = 0; v < n; ++v) {
      if (fb[v] >= 0) {
        out.coloring[v] = fb[v];
      } else if (slot_color_[v] >= 0) {
        out.coloring[v] = reserve + slot_color_[v];
      } else {
        throw InvariantViolation("driver: vertex left uncolored");
      }
    }
    // Dense relabel, preserving color order.
    std::map<Color, Color> dense;
    for (Color c : out.coloring.colors) dense.emplace(c, 0);
    Color next = 0;
    for (auto& [c, d] : dense) d = next++;
    std::size_t fallback_colors = 0;
    for (const auto& [c, d] : dense) {
      if (c < reserve) ++fallback_colors;
    }
    for (Color& c : out.coloring.colors) c = dense[c];

    stats_.colors_used = out.coloring.palette_size();
    stats_.fallback_colors = fallback_colors;
    stats_.batch_colors = stats_.colors_used - fallback_colors;
    record("fallback", cur_.order(), 0, stats_.colors_used);
    out.stats = std::move(stats_);

    if (!is_proper_coloring(g_, out.coloring)) {
      throw InvariantViolation("driver: produced an improper coloring");
    }
    return out;
  }

  const Graph& g_;
  double k_;
  DriverOptions opts_;
  Instrumentation instr_;
  Graph cur_;
  std::vector<std::vector<Vertex>> groups_;
  VertexSet active_;
  std::size_t phase_start_ = 0;
  std::size_t phase_removed_ = 0;
  int phase_slot_ = -1;
  std::size_t slots_ = 0;
  std::vector<int> slot_color_;
  std::vector<std::vector<Vertex>> deferred_;
  DriverStats stats_;
};

}  // namespace

DriverResult color_with_progress(const Graph& g, double k, const ProgressSource& source,
                                 const DriverOptions& opts, const Instrumentation& instr) {
  Driver d(g, k, opts, instr);
  return d.run(source);
}

}  // namespace tricolor
