#include "tricolor/errors.hpp"

#include <sstream>

namespace tricolor {

namespace {

std::string edge_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

DuplicateEdge::DuplicateEdge(Vertex u, Vertex v)
    : Error("duplicate edge " + edge_text(u, v)), edge(u, v) {}

SelfLoop::SelfLoop(Vertex v)
    : Error("self-loop at vertex " + std::to_string(v)), vertex(v) {}

VertexOutOfRange::VertexOutOfRange(std::size_t v, std::size_t n)
    : Error("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n)) {}

AdjacentPair::AdjacentPair(Vertex u, Vertex v)
    : Error("vertices " + edge_text(u, v) + " are adjacent") {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

MinDegreeUnreachable::MinDegreeUnreachable(std::size_t target, std::size_t best, int attempts)
    : Error("minimum degree " + std::to_string(target) + " not reached after " +
            std::to_string(attempts) + " attempts (best " + std::to_string(best) + ")"),
      best_min_degree(best) {}

TooLarge::TooLarge(std::size_t n, std::size_t cap)
    : Error("graph with " + std::to_string(n) + " vertices exceeds oracle cap " +
            std::to_string(cap)) {}

SetTooSmall::SetTooSmall(std::size_t size, std::size_t required)
    : Error("set of size " + std::to_string(size) + " below required " +
            std::to_string(required)) {}

std::string NonColorabilityWitness::describe() const {
  std::ostringstream os;
  if (kind == Kind::kOddWheel) {
    os << "odd cycle";
    if (center) os << " in the neighborhood of vertex " << *center;
  } else {
    os << "adjacent vertices forced to share a color";
  }
  os << ":";
  for (Vertex v : vertices) os << ' ' << v;
  return os.str();
}

NotThreeColorable::NotThreeColorable(NonColorabilityWitness w)
    : Error("graph is not 3-colorable: " + w.describe()), witness(std::move(w)) {}

}  // namespace tricolor
