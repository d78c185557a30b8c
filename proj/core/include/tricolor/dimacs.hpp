#pragma once

#include <string>
#include <string_view>

#include "tricolor/coloring.hpp"
#include "tricolor/graph.hpp"

namespace tricolor {

// DIMACS .col: "c ..." comments, one "p edge <n> <m>" line, then m lines
// "e <u> <v>" with 1-based ids. Throws ParseError carrying the line number.
Graph parse_dimacs(std::string_view text);

// Canonical form: "p edge n m" then edges with u < v in sorted order.
std::string emit_dimacs(const Graph& g);

// Coloring file: one "s <vertex> <color>" line per vertex, 1-based vertex ids,
// colors as stored.
std::string emit_coloring(const Coloring& c);
Coloring parse_coloring(std::string_view text, std::size_t n);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace tricolor
