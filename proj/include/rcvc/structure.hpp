#pragma once

#include <cstddef>

#include "rcvc/graph.hpp"

namespace rcvc {

/// A maximal pendant path: starts at a degree-1 vertex, runs through degree-2
/// vertices, and stops at `terminal`, the first vertex whose degree is not 2.
struct LineSegment {
    std::vector<VertexId> path;  // path.front() has degree 1; path.back() == terminal
    VertexId terminal = 0;
};

std::size_t extra_degree(const Graph& g, VertexId v);
std::size_t extra_degree_graph(const Graph& g);

/// Follows the line that starts at degree-1 vertex `start`.
LineSegment trace_line(const Graph& g, VertexId start);

/// Deletes lines (a terminal of degree >= 3 survives) and isolated vertices
/// until none remain. Every remaining component has minimum degree >= 2.
Graph strip_lines(const Graph& g);

/// m - n + c.
std::size_t circuit_rank(const Graph& g);

/// Real-cycle number. Computed by stripping lines and summing ex/2 + 1 over the
/// remaining components; throws std::logic_error if that disagrees with the
/// circuit rank.
std::size_t tau(const Graph& g);

/// floor(ex(G)/2) + 1 for a connected graph.
std::size_t tau_upper_bound(const Graph& g);

}  // namespace rcvc
