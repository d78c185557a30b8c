#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tricolor/types.hpp"

namespace tricolor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DuplicateEdge : public Error {
 public:
  DuplicateEdge(Vertex u, Vertex v);
  Edge edge;
};

class SelfLoop : public Error {
 public:
  explicit SelfLoop(Vertex v);
  Vertex vertex;
};

class VertexOutOfRange : public Error {
 public:
  VertexOutOfRange(std::size_t v, std::size_t n);
};

class AdjacentPair : public Error {
 public:
  AdjacentPair(Vertex u, Vertex v);
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class PartialColoring : public Error {
 public:
  using Error::Error;
};

class MinDegreeUnreachable : public Error {
 public:
  MinDegreeUnreachable(std::size_t target, std::size_t best, int attempts);
  std::size_t best_min_degree;
};

class TooLarge : public Error {
 public:
  TooLarge(std::size_t n, std::size_t cap);
};

class SetTooSmall : public Error {
 public:
  SetTooSmall(std::size_t size, std::size_t required);
};

class UnsoundProgress : public Error {
 public:
  using Error::Error;
};

class EmptyResult : public Error {
 public:
  using Error::Error;
};

// A broken internal guarantee. Always a bug, never an input problem.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// Certificate that a graph has no proper 3-coloring.
struct NonColorabilityWitness {
  enum class Kind {
    // center adjacent to every vertex of an odd cycle
    kOddWheel,
    // an inference that holds in every 3-coloring forced two adjacent
    // vertices to share a color
    kForcedAdjacentPair,
  };
  Kind kind = Kind::kOddWheel;
  std::optional<Vertex> center;
  std::vector<Vertex> vertices;

  std::string describe() const;
};

class NotThreeColorable : public Error {
 public:
  explicit NotThreeColorable(NonColorabilityWitness w);
  NonColorabilityWitness witness;
};

}  // namespace tricolor
