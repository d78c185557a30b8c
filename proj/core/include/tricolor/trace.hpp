#pragma once

#include <cstddef>
#include <ostream>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tricolor/graph.hpp"
#include "tricolor/progress.hpp"

namespace tricolor {

// JSON-lines event stream. Keys are emitted in sorted order so identical
// runs produce byte-identical traces.
class TraceSink {
 public:
  explicit TraceSink(std::ostream& out) : out_(&out) {}

  void emit(const nlohmann::json& event);
  std::size_t events() const { return events_; }

 private:
  std::ostream* out_;
  std::size_t events_ = 0;
};

// Callbacks for every claim the recursion derives, so that tests can check
// each one against an independent oracle. Default implementations ignore.
class ClaimObserver {
 public:
  virtual ~ClaimObserver() = default;

  // X is multichromatic in every 3-coloring.
  virtual void on_multichromatic(const Graph&, const VertexSet& /*x*/) {}
  // S is monochromatic in every 3-coloring where t and r0 differ.
  virtual void on_mono_if_differ(const Graph&, Vertex /*r0*/, Vertex /*t*/,
                                 const VertexSet& /*s*/) {}
  // A sparse cut (X, Y) returned by cut-or-color on (S, T) from seed t.
  virtual void on_sparse_cut(const Graph&, Vertex /*r0*/, const VertexSet& /*s*/,
                             const VertexSet& /*t_side*/, Vertex /*t*/, const VertexSet& /*x*/,
                             const VertexSet& /*y*/, std::size_t /*nh*/) {}
  virtual void on_progress(const Graph&, const Progress&) {}
};

struct Instrumentation {
  TraceSink* trace = nullptr;
  ClaimObserver* observer = nullptr;

  void emit(const nlohmann::json& event) const {
    if (trace != nullptr) trace->emit(event);
  }
};

nlohmann::json to_json_ids(const VertexSet& s);

}  // namespace tricolor
