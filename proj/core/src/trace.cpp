#include "tricolor/trace.hpp"

namespace tricolor {

void TraceSink::emit(const nlohmann::json& event) {
  *out_ << event.dump() << '\n';
  ++events_;
}

nlohmann::json to_json_ids(const VertexSet& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (Vertex v : s) arr.push_back(v);
  return arr;
}

}  // namespace tricolor
