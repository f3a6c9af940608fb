#include "rcvc/structure.hpp"

#include <stdexcept>
#include <string>

#include "rcvc/errors.hpp"

namespace rcvc {

std::size_t extra_degree(const Graph& g, VertexId v) {
    std::size_t d = g.degree(v);
    return d > 2 ? d - 2 : 0;
}

std::size_t extra_degree_graph(const Graph& g) {
    std::size_t total = 0;
    for (VertexId v : g.vertices()) total += extra_degree(g, v);
    return total;
}

LineSegment trace_line(const Graph& g, VertexId start) {
    require(g.degree(start) == 1, "trace_line: start must have degree 1");
    LineSegment line;
    line.path.push_back(start);
    VertexId prev = start;
    VertexId cur = g.neighbors(start)[0];
    while (g.degree(cur) == 2) {
        line.path.push_back(cur);
        auto nb = g.neighbors(cur);
        VertexId next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    line.path.push_back(cur);
    line.terminal = cur;
    return line;
}

Graph strip_lines(const Graph& g) {
    Graph out = g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v : out.vertices()) {
            if (!out.contains(v)) continue;
            std::size_t d = out.degree(v);
            if (d == 0) {
                out.remove_vertex(v);
                changed = true;
            } else if (d == 1) {
                LineSegment line = trace_line(out, v);
                if (out.degree(line.terminal) >= 3) line.path.pop_back();
                out.remove_vertices(line.path);
                changed = true;
            }
        }
    }
    return out;
}

std::size_t circuit_rank(const Graph& g) {
    return g.num_edges() + g.num_components() - g.num_vertices();
}

std::size_t tau(const Graph& g) {
    Graph core = strip_lines(g);
    std::size_t total = 0;
    for (const VertexSet& component : core.connected_components()) {
        std::size_t ex = 0;
        for (VertexId v : component) ex += extra_degree(core, v);
        if (ex % 2 != 0) throw std::logic_error("tau: odd extra-degree on a stripped component");
        total += ex / 2 + 1;
    }
    std::size_t rank = circuit_rank(g);
    if (total != rank)
        throw std::logic_error("tau: structural count " + std::to_string(total) + " != circuit rank " +
                               std::to_string(rank));
    return total;
}

std::size_t tau_upper_bound(const Graph& g) {
    require(g.is_connected(), "tau_upper_bound: graph must be connected");
    return extra_degree_graph(g) / 2 + 1;
}

}  // namespace rcvc
