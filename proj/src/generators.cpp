#include "rcvc/generators.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <string>

#include "rcvc/errors.hpp"

namespace rcvc::gen {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    require(bound > 0, "uniform_below: bound must be positive");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    while (true) {
        std::uint64_t r = rng();
        if (r < limit) return r % bound;
    }
}

namespace {

Graph with_vertices(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<VertexId> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<VertexId>(i);
    return Graph::from_edges(edges, ids);
}

}  // namespace

Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({VertexId(i), VertexId(i + 1)});
    return with_vertices(n, edges);
}

Graph cycle(std::size_t n) {
    require(n >= 3, "cycle: need at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) edges.push_back({VertexId(i), VertexId((i + 1) % n)});
    return with_vertices(n, edges);
}

Graph star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, VertexId(i)});
    return with_vertices(leaves + 1, edges);
}

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({VertexId(i), VertexId(j)});
    return with_vertices(n, edges);
}

Graph petersen() {
    std::vector<Edge> edges;
    for (VertexId i = 0; i < 5; ++i) {
        edges.push_back({i, VertexId((i + 1) % 5)});          // outer 5-cycle
        edges.push_back({i, VertexId(i + 5)});                // spokes
        edges.push_back({VertexId(i + 5), VertexId((i + 2) % 5 + 5)});  // inner pentagram
    }
    return with_vertices(10, edges);
}

Graph cubic(std::size_t n, Rng& rng) {
    require(n >= 4 && n % 2 == 0, "cubic: n must be even and at least 4");
    std::vector<VertexId> points(3 * n);
    for (std::size_t attempt = 0; attempt < 10000; ++attempt) {
        for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<VertexId>(i / 3);
        for (std::size_t i = points.size() - 1; i > 0; --i) std::swap(points[i], points[uniform_below(rng, i + 1)]);
        std::set<std::pair<VertexId, VertexId>> seen;
        std::vector<Edge> edges;
        bool ok = true;
        for (std::size_t i = 0; ok && i < points.size(); i += 2) {
            VertexId a = std::min(points[i], points[i + 1]);
            VertexId b = std::max(points[i], points[i + 1]);
            ok = a != b && seen.insert({a, b}).second;
            edges.push_back({a, b});
        }
        if (ok) return with_vertices(n, edges);
    }
    throw ResourceLimit("cubic: too many rejected pairings for n = " + std::to_string(n));
}

Graph bounded_degree(std::size_t n, std::size_t max_degree, std::size_t target_edges, Rng& rng) {
    Graph g = with_vertices(n, {});
    if (n < 2) return g;
    const std::size_t proposals = 100 * n + 100;
    for (std::size_t i = 0; i < proposals && g.num_edges() < target_edges; ++i) {
        auto u = static_cast<VertexId>(uniform_below(rng, n));
        auto v = static_cast<VertexId>(uniform_below(rng, n));
        if (u == v || g.degree(u) >= max_degree || g.degree(v) >= max_degree) continue;
        g.add_edge(u, v);
    }
    return g;
}

Graph maxdeg3(std::size_t n, Rng& rng) { return bounded_degree(n, 3, 5 * n / 4, rng); }

Graph tree(std::size_t n, Rng& rng) {
    if (n <= 2) return path(n);
    std::vector<std::size_t> code(n - 2);
    for (auto& c : code) c = uniform_below(rng, n);
    std::vector<std::size_t> degree(n, 1);
    for (std::size_t c : code) ++degree[c];
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> leaves;
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);
    std::vector<Edge> edges;
    for (std::size_t c : code) {
        std::size_t leaf = leaves.top();
        leaves.pop();
        edges.push_back({VertexId(leaf), VertexId(c)});
        if (--degree[c] == 1) leaves.push(c);
    }
    std::size_t a = leaves.top();
    leaves.pop();
    edges.push_back({VertexId(a), VertexId(leaves.top())});
    return with_vertices(n, edges);
}

Graph gnp(std::size_t n, double p, Rng& rng) {
    std::vector<Edge> edges;
    const bool all = p >= 1.0;
    const std::uint64_t threshold = all || p <= 0.0 ? 0 : static_cast<std::uint64_t>(p * 18446744073709551616.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (all || rng() < threshold) edges.push_back({VertexId(i), VertexId(j)});
    return with_vertices(n, edges);
}

}  // namespace rcvc::gen
