#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "rcvc/graph.hpp"

namespace rcvc {

struct DimacsGraph {
    Graph graph;  // vertex ids are the 1-based DIMACS labels
    std::size_t declared_vertices = 0;
    std::size_t declared_edges = 0;
    std::size_t duplicate_edges = 0;
};

/// Parses "c" comment lines, one "p edge N M" header and M "e u v" lines.
/// Tokens are separated by ASCII spaces; lines end in LF or CRLF; blank lines
/// are skipped. Vertices 1..N all exist, isolated or not.
DimacsGraph parse_dimacs(std::string_view text);

/// Writes "p edge N M" and the edges of `g` with vertices relabelled 1..N in
/// ascending id order.
std::string write_dimacs(const Graph& g);

/// Reads an entire file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);

/// One 1-based vertex id per line.
VertexSet parse_cover(std::string_view text);
std::string write_cover(const VertexSet& cover);

}  // namespace rcvc
