#pragma once

#include <cstdint>
#include <utility>

namespace tricolor {

using Vertex = std::uint32_t;
using Color = std::int32_t;

inline constexpr Color kUncolored = -1;

// Undirected edge; canonical form has first < second.
using Edge = std::pair<Vertex, Vertex>;

}  // namespace tricolor
