#include "tricolor/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "tricolor/errors.hpp"

namespace tricolor {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t to_uint(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a nonnegative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    fn(++line_no, text.substr(pos, end - pos));
    pos = end + 1;
  }
}

}  // namespace

Graph parse_dimacs(std::string_view text) {
  std::size_t n = 0;
  std::size_t m = 0;
  bool header = false;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::size_t last_line = 0;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    last_line = line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") return;
    if (tok[0] == "p") {
      if (header) throw ParseError(line_no, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "edge") {
        throw ParseError(line_no, "expected 'p edge <n> <m>'");
      }
      n = to_uint(tok[2], line_no);
      m = to_uint(tok[3], line_no);
      header = true;
      edges.reserve(m);
      return;
    }
    if (tok[0] == "e") {
      if (!header) throw ParseError(line_no, "edge before problem line");
      if (tok.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      const auto u = to_uint(tok[1], line_no);
      const auto v = to_uint(tok[2], line_no);
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(n));
      }
      if (u == v) throw ParseError(line_no, "self-loop");
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      edge_lines.push_back(line_no);
      return;
    }
    throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
  });
  if (!header) throw ParseError(last_line, "missing problem line");
  if (edges.size() != m) {
    throw ParseError(last_line, "problem line declares " + std::to_string(m) + " edges, found " +
                                    std::to_string(edges.size()));
  }
  try {
    return Graph::from_edges(n, edges);
  } catch (const DuplicateEdge& e) {
    // Report the second occurrence of the pair.
    std::size_t seen = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      Vertex a = edges[i].first, b = edges[i].second;
      if (a > b) std::swap(a, b);
      Vertex x = e.edge.first, y = e.edge.second;
      if (x > y) std::swap(x, y);
      if (a == x && b == y && ++seen == 2) {
        throw ParseError(edge_lines[i], "duplicate edge");
      }
    }
    throw ParseError(last_line, "duplicate edge");
  }
}

std::string emit_dimacs(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.order() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

std::string emit_coloring(const Coloring& c) {
  std::ostringstream os;
  for (std::size_t v = 0; v < c.size(); ++v) os << "s " << v + 1 << ' ' << c.colors[v] << '\n';
  return os.str();
}

Coloring parse_coloring(std::string_view text, std::size_t n) {
  Coloring c(n);
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") return;
    if (tok[0] != "s" || tok.size() != 3) throw ParseError(line_no, "expected 's <vertex> <color>'");
    const auto v = to_uint(tok[1], line_no);
    const auto col = to_uint(tok[2], line_no);
    if (v < 1 || v > n) throw ParseError(line_no, "vertex id out of range");
    if (c[static_cast<Vertex>(v - 1)] != kUncolored) throw ParseError(line_no, "vertex colored twice");
    c[static_cast<Vertex>(v - 1)] = static_cast<Color>(col);
  });
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace tricolor
