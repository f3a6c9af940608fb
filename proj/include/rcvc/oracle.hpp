#pragma once

#include <cstddef>
#include <vector>

#include "rcvc/graph.hpp"

// Brute-force ground truth. Nothing here shares code with the solver paths it
// is used to check; every routine is exhaustive and guarded by a size limit.
namespace rcvc::oracle {

inline constexpr std::size_t kMaxBruteForceVertices = 26;
inline constexpr std::size_t kMaxCycles = 100000;

struct CoverResult {
    std::size_t size = 0;
    VertexSet cover;
};

/// Cycle as a vertex sequence; the closing edge back to front() is implicit.
using Cycle = std::vector<VertexId>;

/// An ordered real-cycle list: cycles[i] owns fresh_edge[i], an edge that no
/// earlier cycle contains.
struct CycleList {
    std::vector<Cycle> cycles;
    std::vector<Edge> fresh_edge;
};

struct RealCycleResult {
    std::size_t count = 0;
    CycleList witness;
};

bool is_vertex_cover(const Graph& g, const VertexSet& cover);

/// Minimum vertex cover by Gray-code enumeration of all 2^n vertex subsets.
CoverResult min_vc_bruteforce(const Graph& g);

/// Every simple cycle once, starting at its smallest vertex and oriented so
/// that the second vertex is smaller than the last. Sorted lexicographically.
std::vector<Cycle> enumerate_simple_cycles(const Graph& g, std::size_t max_cycles = kMaxCycles);

/// Edges of a cycle, normalized u < v, sorted.
std::vector<Edge> cycle_edges(const Cycle& c);

/// Maximum real-cycle list by memoized search over covered-edge sets.
/// Graphs with more than 64 edges or 400 simple cycles are refused with
/// ResourceLimit.
RealCycleResult max_real_cycle_bruteforce(const Graph& g);

/// Walks `order` once and keeps each cycle that still owns an uncovered edge.
CycleList greedy_real_cycles(const std::vector<Cycle>& order);

/// True when `list` satisfies the real-cycle ordering condition and every
/// recorded fresh edge is really fresh.
bool is_real_cycle_list(const CycleList& list);

}  // namespace rcvc::oracle
