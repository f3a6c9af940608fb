#include "rcvc/reductions.hpp"

#include <algorithm>
#include <set>

#include "rcvc/errors.hpp"

namespace rcvc {

using namespace trace_entry;

void ReductionTrace::push(TraceEntry entry, std::size_t k_cost) {
    entries_.push_back(std::move(entry));
    k_delta_ += k_cost;
}

std::size_t ReductionTrace::pending_couples(VertexId center) const {
    auto it = couples_.find(center);
    return it == couples_.end() ? 0 : it->second;
}

void ReductionTrace::resolve_couples(VertexId center) { couples_.erase(center); }

void ReductionTrace::add_couple(VertexId center) { ++couples_[center]; }

void ReductionTrace::append(const ReductionTrace& later) {
    entries_.insert(entries_.end(), later.entries_.begin(), later.entries_.end());
    k_delta_ += later.k_delta_;
    for (const auto& [center, count] : later.couples_) couples_[center] += count;
}

void include_vertex(Graph& g, ReductionTrace& trace, VertexId v) {
    g.remove_vertex(v);
    trace.push(Include{v}, 1 + trace.pending_couples(v));
    trace.resolve_couples(v);
}

void delete_isolated(Graph& g, ReductionTrace& trace, VertexId v) {
    require(g.degree(v) == 0, "delete_isolated: vertex has edges");
    g.remove_vertex(v);
    trace.push(DeleteIsolated{v}, 0);
    trace.resolve_couples(v);
}

void couple_satellite(Graph& g, ReductionTrace& trace, VertexId center, VertexId satellite) {
    require(center != satellite && !g.has_edge(center, satellite), "couple_satellite: vertices are adjacent");
    g.remove_vertex(satellite);
    trace.push(SatelliteCouple{center, satellite}, 0);
    trace.add_couple(center);
}

namespace {

void push_neighborhood(const Graph& g, VertexId v, std::set<VertexId>& work) {
    work.insert(v);
    for (VertexId w : g.neighbors(v)) work.insert(w);
}

}  // namespace

void fold_degree2(Graph& g, VertexId u, ReductionTrace& trace) {
    require(g.degree(u) == 2, "fold_degree2: vertex must have degree 2");
    const VertexId s = g.neighbors(u)[0];
    const VertexId r = g.neighbors(u)[1];
    if (g.has_edge(s, r)) {
        include_vertex(g, trace, s);
        include_vertex(g, trace, r);
        delete_isolated(g, trace, u);
        return;
    }
    g.remove_vertex(u);
    g.contract_pair(r, s);
    trace.push(FoldDeg2{u, s, r, r}, 1);
}

void reduce_low_degree(Graph& g, ReductionTrace& trace) {
    std::set<VertexId> work;
    for (VertexId v : g.vertices()) work.insert(v);
    while (!work.empty()) {
        VertexId v = *work.begin();
        work.erase(work.begin());
        if (!g.contains(v)) continue;
        switch (g.degree(v)) {
            case 0:
                delete_isolated(g, trace, v);
                break;
            case 1: {
                VertexId w = g.neighbors(v)[0];
                push_neighborhood(g, w, work);
                include_vertex(g, trace, w);
                break;
            }
            case 2: {
                VertexId s = g.neighbors(v)[0];
                VertexId r = g.neighbors(v)[1];
                push_neighborhood(g, s, work);
                push_neighborhood(g, r, work);
                fold_degree2(g, v, trace);
                break;
            }
            default:
                break;
        }
    }
}

bool dominated_vertex(Graph& g, ReductionTrace& trace) {
    for (VertexId v : g.vertices()) {
        const VertexSet closed_v = g.closed_neighborhood(v);
        for (VertexId u : g.neighbors(v)) {
            if (g.degree(u) < g.degree(v)) continue;
            const VertexSet closed_u = g.closed_neighborhood(u);
            if (std::includes(closed_u.begin(), closed_u.end(), closed_v.begin(), closed_v.end())) {
                include_vertex(g, trace, u);
                return true;
            }
        }
    }
    return false;
}

VertexSet satellites(const Graph& g, VertexId u) {
    const auto nu = g.neighbors(u);
    std::set<VertexId> candidates;
    for (VertexId w : nu)
        for (VertexId z : g.neighbors(w))
            if (z != u && !g.has_edge(u, z)) candidates.insert(z);

    VertexSet out;
    for (VertexId z : candidates) {
        const auto nz = g.neighbors(z);
        if (!std::includes(nu.begin(), nu.end(), nz.begin(), nz.end())) continue;
        // |N(u) \ N(z)| <= 1 is what makes the coupling sound: in a minimum
        // cover holding u, at least two neighbors of u are outside the cover.
        if (nu.size() - nz.size() <= 1) out.push_back(z);
    }
    return out;
}

bool struction(Graph& g, VertexId u, ReductionTrace& trace) {
    if (!g.contains(u) || g.degree(u) != 3) return false;
    const VertexSet nbrs(g.neighbors(u).begin(), g.neighbors(u).end());

    std::vector<std::pair<std::size_t, std::size_t>> anti;
    std::size_t inner = 0;
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            if (g.has_edge(nbrs[i], nbrs[j]))
                ++inner;
            else
                anti.emplace_back(i, j);
        }
    if (inner == 0 || anti.empty()) return false;

    const VertexSet closed = g.closed_neighborhood(u);
    auto external = [&](VertexId x) {
        VertexSet out;
        for (VertexId y : g.neighbors(x))
            if (!std::binary_search(closed.begin(), closed.end(), y)) out.push_back(y);
        return out;
    };
    std::vector<VertexSet> outside;
    for (VertexId x : nbrs) outside.push_back(external(x));

    Struction record{u, nbrs, {}};
    std::vector<std::pair<std::size_t, std::size_t>> pair_of;
    for (auto [i, j] : anti) {
        VertexId id = g.add_vertex();
        record.created.push_back({id, nbrs[i], nbrs[j]});
        pair_of.emplace_back(i, j);
    }
    for (std::size_t a = 0; a < record.created.size(); ++a) {
        VertexId id = record.created[a].id;
        for (VertexId y : set_union(outside[pair_of[a].first], outside[pair_of[a].second])) g.add_edge(id, y);
        for (std::size_t b = a + 1; b < record.created.size(); ++b) {
            bool same_first = pair_of[a].first == pair_of[b].first;
            if (!same_first || g.has_edge(nbrs[pair_of[a].second], nbrs[pair_of[b].second]))
                g.add_edge(id, record.created[b].id);
        }
    }
    g.remove_vertices(closed);
    // |cover(G)| = |cover(G')| + deg(u) - #anti-edges.
    trace.push(std::move(record), nbrs.size() - anti.size());
    return true;
}

bool struction_any(Graph& g, ReductionTrace& trace) {
    for (VertexId v : g.vertices())
        if (g.degree(v) == 3 && struction(g, v, trace)) return true;
    return false;
}

void reduce_to_fixpoint(Graph& g, ReductionTrace& trace, const ReduceOptions& options) {
    while (true) {
        reduce_low_degree(g, trace);
        if (options.domination && dominated_vertex(g, trace)) continue;
        if (options.struction && struction_any(g, trace)) continue;
        break;
    }
}

namespace {

struct Lifter {
    VertexSet& cover;

    bool has(VertexId v) const { return std::binary_search(cover.begin(), cover.end(), v); }
    void add(VertexId v) { set_insert(cover, v); }

    void operator()(const Include& e) { add(e.v); }
    void operator()(const DeleteIsolated&) {}
    void operator()(const FoldDeg2& e) {
        if (has(e.kept))
            add(e.s);
        else
            add(e.u);
    }
    void operator()(const SatelliteCouple& e) {
        if (has(e.center)) add(e.satellite);
    }
    void operator()(const Struction& e) {
        std::vector<const StructionNode*> independent;
        for (const StructionNode& node : e.created) {
            if (has(node.id))
                cover.erase(std::lower_bound(cover.begin(), cover.end(), node.id));
            else
                independent.push_back(&node);
        }
        if (independent.empty()) {
            for (VertexId x : e.neighbors) add(x);
            return;
        }
        VertexSet kept{independent.front()->first};
        for (const StructionNode* node : independent) {
            if (node->first != independent.front()->first)
                throw ContractViolation("lift_cover: struction vertices outside the cover are adjacent");
            set_insert(kept, node->second);
        }
        add(e.center);
        for (VertexId x : e.neighbors)
            if (!std::binary_search(kept.begin(), kept.end(), x)) add(x);
    }
};

}  // namespace

VertexSet lift_cover(const ReductionTrace& trace, const VertexSet& reduced_cover) {
    VertexSet cover = reduced_cover;
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    Lifter lifter{cover};
    const auto& entries = trace.entries();
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) std::visit(lifter, *it);
    return cover;
}

VertexSet lift_cover(const ReductionTrace& trace, const Graph& reduced, const VertexSet& reduced_cover) {
    VertexSet sorted = reduced_cover;
    std::sort(sorted.begin(), sorted.end());
    for (const Edge& e : reduced.edges())
        if (!std::binary_search(sorted.begin(), sorted.end(), e.u) &&
            !std::binary_search(sorted.begin(), sorted.end(), e.v))
            throw ContractViolation("lift_cover: reduced cover misses an edge");
    return lift_cover(trace, sorted);
}

}  // namespace rcvc
