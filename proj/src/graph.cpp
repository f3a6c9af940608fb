#include "rcvc/graph.hpp"

#include <algorithm>

#include "rcvc/errors.hpp"

namespace rcvc {

namespace {

bool sorted_contains(const std::vector<VertexId>& list, VertexId v) {
    return std::binary_search(list.begin(), list.end(), v);
}

bool sorted_insert(std::vector<VertexId>& list, VertexId v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it != list.end() && *it == v) return false;
    list.insert(it, v);
    return true;
}

}  // namespace

Graph Graph::from_edges(std::span<const Edge> edges, std::span<const VertexId> extra_vertices) {
    std::vector<VertexId> ids(extra_vertices.begin(), extra_vertices.end());
    for (const Edge& e : edges) {
        if (e.u == e.v) throw ParseError(0, "self-loop on vertex " + std::to_string(e.u));
        ids.push_back(e.u);
        ids.push_back(e.v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    Graph g;
    g.ids_.reserve(ids.size());
    for (VertexId v : ids) g.append_slot(v);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

std::size_t Graph::append_slot(VertexId v) {
    ids_.push_back(v);
    alive_.push_back(1);
    adj_.emplace_back();
    ++live_;
    next_id_ = v + 1;
    return ids_.size() - 1;
}

VertexId Graph::add_vertex() {
    VertexId v = next_id_;
    append_slot(v);
    return v;
}

std::size_t Graph::slot_of(VertexId v) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) return ids_.size();
    return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t Graph::checked_slot(VertexId v) const {
    std::size_t s = slot_of(v);
    if (s == ids_.size() || !alive_[s]) throw ContractViolation("vertex " + std::to_string(v) + " is not live");
    return s;
}

bool Graph::contains(VertexId v) const noexcept {
    std::size_t s = slot_of(v);
    return s < ids_.size() && alive_[s];
}

bool Graph::add_edge(VertexId u, VertexId v) {
    require(u != v, "self-loops are not allowed");
    std::size_t su = checked_slot(u);
    std::size_t sv = checked_slot(v);
    if (!sorted_insert(adj_[su], v)) return false;
    sorted_insert(adj_[sv], u);
    ++edges_;
    return true;
}

void Graph::unlink(std::size_t slot, VertexId neighbor) {
    auto& list = adj_[slot];
    auto it = std::lower_bound(list.begin(), list.end(), neighbor);
    if (it != list.end() && *it == neighbor) list.erase(it);
}

void Graph::remove_edge(VertexId u, VertexId v) {
    std::size_t su = checked_slot(u);
    std::size_t sv = checked_slot(v);
    require(sorted_contains(adj_[su], v), "remove_edge: no such edge");
    unlink(su, v);
    unlink(sv, u);
    --edges_;
}

void Graph::remove_vertex(VertexId v) {
    std::size_t s = checked_slot(v);
    for (VertexId w : adj_[s]) unlink(slot_of(w), v);
    edges_ -= adj_[s].size();
    adj_[s].clear();
    adj_[s].shrink_to_fit();
    alive_[s] = 0;
    --live_;
}

void Graph::remove_vertices(std::span<const VertexId> vs) {
    for (VertexId v : vs)
        if (contains(v)) remove_vertex(v);
}

void Graph::contract_pair(VertexId keep, VertexId absorb) {
    require(keep != absorb, "contract_pair: identical vertices");
    checked_slot(keep);
    std::size_t sa = checked_slot(absorb);
    std::vector<VertexId> moved = adj_[sa];
    remove_vertex(absorb);
    for (VertexId w : moved)
        if (w != keep) add_edge(keep, w);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    return sorted_contains(adj_[checked_slot(u)], v);
}

std::size_t Graph::degree(VertexId v) const { return adj_[checked_slot(v)].size(); }

std::span<const VertexId> Graph::neighbors(VertexId v) const { return adj_[checked_slot(v)]; }

VertexSet Graph::closed_neighborhood(VertexId v) const {
    VertexSet out(neighbors(v).begin(), neighbors(v).end());
    set_insert(out, v);
    return out;
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (std::size_t s = 0; s < ids_.size(); ++s)
        if (alive_[s]) best = std::max(best, adj_[s].size());
    return best;
}

std::size_t Graph::min_degree() const {
    std::size_t best = 0;
    bool first = true;
    for (std::size_t s = 0; s < ids_.size(); ++s) {
        if (!alive_[s]) continue;
        if (first || adj_[s].size() < best) best = adj_[s].size();
        first = false;
    }
    return best;
}

VertexSet Graph::vertices() const {
    VertexSet out;
    out.reserve(live_);
    for (std::size_t s = 0; s < ids_.size(); ++s)
        if (alive_[s]) out.push_back(ids_[s]);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (std::size_t s = 0; s < ids_.size(); ++s) {
        if (!alive_[s]) continue;
        for (VertexId w : adj_[s])
            if (ids_[s] < w) out.push_back({ids_[s], w});
    }
    return out;
}

std::vector<VertexSet> Graph::connected_components() const {
    std::vector<VertexSet> out;
    std::vector<std::uint8_t> seen(ids_.size(), 0);
    std::vector<std::size_t> stack;
    for (std::size_t root = 0; root < ids_.size(); ++root) {
        if (!alive_[root] || seen[root]) continue;
        VertexSet component;
        seen[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            std::size_t s = stack.back();
            stack.pop_back();
            component.push_back(ids_[s]);
            for (VertexId w : adj_[s]) {
                std::size_t t = slot_of(w);
                if (!seen[t]) {
                    seen[t] = 1;
                    stack.push_back(t);
                }
            }
        }
        std::sort(component.begin(), component.end());
        out.push_back(std::move(component));
    }
    return out;
}

std::size_t Graph::num_components() const { return connected_components().size(); }

bool Graph::is_connected() const { return num_components() <= 1; }

bool Graph::is_forest() const { return edges_ + num_components() == live_; }

Graph Graph::induced_subgraph(std::span<const VertexId> keep) const {
    Graph g;
    VertexSet sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (VertexId v : sorted) {
        checked_slot(v);
        g.append_slot(v);
    }
    for (VertexId v : sorted)
        for (VertexId w : neighbors(v))
            if (v < w && std::binary_search(sorted.begin(), sorted.end(), w)) g.add_edge(v, w);
    // Fresh ids in the subgraph must not collide with ids this graph has used.
    g.next_id_ = std::max(g.next_id_, next_id_);
    return g;
}

bool operator==(const Graph& a, const Graph& b) {
    return a.vertices() == b.vertices() && a.edges() == b.edges();
}

void set_insert(VertexSet& set, VertexId v) { sorted_insert(set, v); }

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace rcvc
