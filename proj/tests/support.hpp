#pragma once

#include <cstdint>
#include <vector>

#include "rcvc/generators.hpp"
#include "rcvc/graph.hpp"

namespace rcvc::testing {

inline Graph graph_of(std::initializer_list<Edge> edges) {
    std::vector<Edge> list(edges);
    return Graph::from_edges(list);
}

/// Random graph on ids 0..n-1 with degrees capped at `max_degree`.
inline Graph random_graph(gen::Rng& rng, std::size_t n, std::size_t max_degree) {
    std::size_t target = gen::uniform_below(rng, max_degree * n / 2 + 1);
    return gen::bounded_degree(n, max_degree, target, rng);
}

/// n uniform in [lo, hi].
inline std::size_t pick(gen::Rng& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(gen::uniform_below(rng, hi - lo + 1));
}

/// Adjacency symmetry and degree/edge bookkeeping.
inline bool consistent(const Graph& g) {
    std::size_t degree_sum = 0;
    for (VertexId u : g.vertices()) {
        degree_sum += g.degree(u);
        for (VertexId w : g.neighbors(u))
            if (w == u || !g.contains(w) || !g.has_edge(w, u)) return false;
    }
    return degree_sum == 2 * g.num_edges();
}

}  // namespace rcvc::testing
