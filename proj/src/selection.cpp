#include "rcvc/selection.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>

#include "rcvc/errors.hpp"
#include "rcvc/reductions.hpp"

namespace rcvc {

const char* to_string(RuleTag tag) {
    switch (tag) {
        case RuleTag::HighDegree: return "HighDegree>=5";
        case RuleTag::Degree4: return "Degree4";
        case RuleTag::Degree3Regular: return "Degree3Regular";
    }
    return "?";
}

EstimateVector estimate_vector(const Graph& g, VertexId v) {
    const std::size_t d = g.degree(v);
    require(d >= 3, "estimate_vector: vertex degree must be at least 3");
    const auto nbrs = g.neighbors(v);
    long long sum = 0;
    long long inner = 0;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        sum += static_cast<long long>(g.degree(nbrs[i]));
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (g.has_edge(nbrs[i], nbrs[j])) ++inner;
    }
    const auto dd = static_cast<long long>(d);
    long long exclude = sum - 2 * dd + 1 - std::max(0LL, inner - (dd - 2));
    return {d - 1, static_cast<std::size_t>(std::max(0LL, exclude))};
}

std::size_t shortest_cycle_through(const Graph& g, VertexId v) {
    // BFS from v, labelling every vertex with the child of v it hangs under. A
    // non-tree edge between different branches closes a cycle through v.
    const std::size_t slots = g.slot_count();
    constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(slots, unseen), branch(slots, unseen), parent(slots, unseen);
    const std::size_t root = g.slot_of(v);
    dist[root] = 0;
    std::queue<std::size_t> queue;
    for (VertexId w : g.neighbors(v)) {
        std::size_t s = g.slot_of(w);
        dist[s] = 1;
        branch[s] = s;
        parent[s] = root;
        queue.push(s);
    }
    std::size_t best = 0;
    while (!queue.empty()) {
        std::size_t s = queue.front();
        queue.pop();
        for (VertexId w : g.neighbors(g.id_at(s))) {
            std::size_t t = g.slot_of(w);
            if (t == root || t == parent[s]) continue;
            if (dist[t] == unseen) {
                dist[t] = dist[s] + 1;
                branch[t] = branch[s];
                parent[t] = s;
                queue.push(t);
            } else if (branch[t] != branch[s]) {
                std::size_t len = dist[s] + dist[t] + 1;
                if (best == 0 || len < best) best = len;
            }
        }
    }
    return best;
}

namespace {

struct Candidate {
    VertexId v;
    EstimateVector estimate;
    VertexSet satellites;
};

Candidate make_candidate(const Graph& g, VertexId v) { return {v, estimate_vector(g, v), satellites(g, v)}; }

BranchPlan to_plan(Candidate c, RuleTag rule, std::string note) {
    return {c.v, std::move(c.satellites), rule, std::move(note), c.estimate};
}

}  // namespace

BranchPlan select(const Graph& g) {
    require(!g.empty(), "select: graph is empty");
    require(g.min_degree() >= 3, "select: reductions must leave minimum degree >= 3");

    const VertexSet vs = g.vertices();
    const std::size_t top = g.max_degree();

    if (top >= 5) {
        for (VertexId v : vs)
            if (g.degree(v) == top)
                return to_plan(make_candidate(g, v), RuleTag::HighDegree, "maximum degree " + std::to_string(top));
    }

    if (top == 4) {
        std::optional<Candidate> best;
        bool best_has_satellites = false;
        for (VertexId v : vs) {
            if (g.degree(v) != 4) continue;
            Candidate c = make_candidate(g, v);
            bool has_sat = !c.satellites.empty();
            if (!best || (has_sat && !best_has_satellites) ||
                (has_sat == best_has_satellites && c.estimate.exclude > best->estimate.exclude)) {
                best_has_satellites = has_sat;
                best = std::move(c);
            }
        }
        return to_plan(std::move(*best), RuleTag::Degree4,
                       best_has_satellites ? "degree 4 with coupled satellites" : "degree 4, largest exclude estimate");
    }

    std::optional<Candidate> best;
    std::size_t best_girth = 0;
    for (VertexId v : vs) {
        Candidate c = make_candidate(g, v);
        std::size_t girth = shortest_cycle_through(g, v);
        bool better = !best || c.estimate.exclude > best->estimate.exclude ||
                      (c.estimate.exclude == best->estimate.exclude && girth != 0 &&
                       (best_girth == 0 || girth < best_girth));
        if (better) {
            best_girth = girth;
            best = std::move(c);
        }
    }
    return to_plan(std::move(*best), RuleTag::Degree3Regular,
                   "3-regular, shortest cycle " + std::to_string(best_girth));
}

}  // namespace rcvc
