#pragma once

#include <cstddef>
#include <map>
#include <variant>
#include <vector>

#include "rcvc/graph.hpp"

namespace rcvc {

namespace trace_entry {

struct Include {
    VertexId v;
};

struct DeleteIsolated {
    VertexId v;
};

// u had degree 2 with non-adjacent neighbors s and r; s was merged into `kept`
// (== r) and u was deleted.
struct FoldDeg2 {
    VertexId u, s, r, kept;
};

// `satellite` was deleted; it joins the cover exactly when `center` does.
struct SatelliteCouple {
    VertexId center, satellite;
};

struct StructionNode {
    VertexId id;      // vertex created in the reduced graph
    VertexId first;   // smaller-index neighbor of the pair
    VertexId second;  // larger-index neighbor of the pair
};

// N[center] was replaced by one vertex per non-adjacent pair of neighbors.
struct Struction {
    VertexId center;
    VertexSet neighbors;
    std::vector<StructionNode> created;
};

}  // namespace trace_entry

using TraceEntry = std::variant<trace_entry::Include, trace_entry::DeleteIsolated, trace_entry::FoldDeg2,
                                trace_entry::SatelliteCouple, trace_entry::Struction>;

/// Journal of reductions applied to one graph.
///
/// Replaying the entries backwards turns a cover of the reduced graph into a
/// cover of the original one of size |reduced cover| + k_delta(). Satellite
/// couples contribute to k_delta() when their center is included through the
/// trace; a center that is still live adds its satellites on top of that if it
/// ends up in the reduced cover.
class ReductionTrace {
public:
    const std::vector<TraceEntry>& entries() const noexcept { return entries_; }
    std::size_t k_delta() const noexcept { return k_delta_; }
    bool empty() const noexcept { return entries_.empty(); }

    void push(TraceEntry entry, std::size_t k_cost);
    /// Number of unresolved satellites hanging off `center`.
    std::size_t pending_couples(VertexId center) const;
    void resolve_couples(VertexId center);
    void add_couple(VertexId center);

    /// Appends every entry of `later` after the entries of this trace.
    void append(const ReductionTrace& later);

private:
    std::vector<TraceEntry> entries_;
    std::size_t k_delta_ = 0;
    std::map<VertexId, std::size_t> couples_;
};

struct ReduceOptions {
    bool domination = true;
    bool struction = false;
};

// Primitive journaled edits.
void include_vertex(Graph& g, ReductionTrace& trace, VertexId v);
void delete_isolated(Graph& g, ReductionTrace& trace, VertexId v);
void couple_satellite(Graph& g, ReductionTrace& trace, VertexId center, VertexId satellite);

/// Degree-0 deletion, degree-1 inclusion and degree-2 folding to a fixpoint.
/// Afterwards the graph is empty or every vertex has degree >= 3.
void reduce_low_degree(Graph& g, ReductionTrace& trace);

/// Folds degree-2 vertex u. Adjacent neighbors are both included (k += 2);
/// otherwise the first neighbor is merged into the second (k += 1).
void fold_degree2(Graph& g, VertexId u, ReductionTrace& trace);

/// Includes the first u (by ascending ids of v, then u) having a neighbor v
/// with N[v] ⊆ N[u]. Returns whether a vertex was included.
bool dominated_vertex(Graph& g, ReductionTrace& trace);

/// Vertices z, not adjacent to u, with N(z) ⊆ N(u) and |N(u) \ N(z)| <= 1.
/// Some minimum cover contains all of them exactly when it contains u.
VertexSet satellites(const Graph& g, VertexId u);

/// Struction on a degree-3 vertex whose neighborhood has at least one edge and
/// at least one non-edge. Returns false (graph untouched) otherwise.
bool struction(Graph& g, VertexId u, ReductionTrace& trace);

/// First degree-3 vertex struction applies to, if any, is transformed.
bool struction_any(Graph& g, ReductionTrace& trace);

/// Runs reduce_low_degree, domination and (optionally) struction until none
/// of them applies.
void reduce_to_fixpoint(Graph& g, ReductionTrace& trace, const ReduceOptions& options = {});

/// Maps a cover of the reduced graph back through the trace.
VertexSet lift_cover(const ReductionTrace& trace, const VertexSet& reduced_cover);

/// As above, but first checks that `reduced_cover` covers `reduced`.
VertexSet lift_cover(const ReductionTrace& trace, const Graph& reduced, const VertexSet& reduced_cover);

}  // namespace rcvc
