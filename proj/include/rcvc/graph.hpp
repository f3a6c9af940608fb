#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rcvc {

using VertexId = std::uint32_t;
using VertexSet = std::vector<VertexId>;  // kept sorted and duplicate-free

struct Edge {
    VertexId u;
    VertexId v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with stable vertex ids.
///
/// Vertices live in slots ordered by ascending id; fresh vertices always get an
/// id larger than any id the instance has ever held, so the slot order stays
/// sorted and an id is never handed out twice. Neighbor lists are sorted id
/// vectors. Parallel edges and self-loops never exist: contraction drops them.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges collapse to one; a
    /// self-loop throws ParseError (line 0). `extra_vertices` adds isolated ids.
    static Graph from_edges(std::span<const Edge> edges, std::span<const VertexId> extra_vertices = {});

    /// Adds an isolated vertex with a fresh id and returns it.
    VertexId add_vertex();
    /// Adds {u, v}; returns false when the edge already existed.
    bool add_edge(VertexId u, VertexId v);
    void remove_edge(VertexId u, VertexId v);
    void remove_vertex(VertexId v);
    void remove_vertices(std::span<const VertexId> vs);
    /// Re-homes every edge of `absorb` onto `keep`, then deletes `absorb`.
    void contract_pair(VertexId keep, VertexId absorb);

    bool contains(VertexId v) const noexcept;
    bool has_edge(VertexId u, VertexId v) const;
    std::size_t degree(VertexId v) const;
    std::span<const VertexId> neighbors(VertexId v) const;
    VertexSet closed_neighborhood(VertexId v) const;

    std::size_t num_vertices() const noexcept { return live_; }
    std::size_t num_edges() const noexcept { return edges_; }
    bool empty() const noexcept { return live_ == 0; }
    std::size_t max_degree() const;
    std::size_t min_degree() const;

    /// Live ids in ascending order.
    VertexSet vertices() const;
    /// Every edge once, with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    std::vector<VertexSet> connected_components() const;
    std::size_t num_components() const;
    bool is_connected() const;
    bool is_forest() const;

    /// Copy restricted to `keep`; ids are preserved.
    Graph induced_subgraph(std::span<const VertexId> keep) const;

    // Dense slot view for linear-time algorithms. Slots of dead vertices stay
    // allocated; `slot_alive` filters them.
    std::size_t slot_count() const noexcept { return ids_.size(); }
    std::size_t slot_of(VertexId v) const;
    VertexId id_at(std::size_t slot) const noexcept { return ids_[slot]; }
    bool slot_alive(std::size_t slot) const noexcept { return alive_[slot] != 0; }

    /// Smallest id a future add_vertex() may return.
    VertexId next_id() const noexcept { return next_id_; }

private:
    std::size_t checked_slot(VertexId v) const;
    std::size_t append_slot(VertexId v);
    void unlink(std::size_t slot, VertexId neighbor);

    std::vector<VertexId> ids_;
    std::vector<std::uint8_t> alive_;
    std::vector<std::vector<VertexId>> adj_;
    std::size_t live_ = 0;
    std::size_t edges_ = 0;
    VertexId next_id_ = 0;
};

bool operator==(const Graph& a, const Graph& b);

/// Merges a sorted set in place.
void set_insert(VertexSet& set, VertexId v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);

}  // namespace rcvc
