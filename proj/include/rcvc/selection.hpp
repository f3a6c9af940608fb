#pragma once

#include <cstddef>
#include <string>

#include "rcvc/graph.hpp"

namespace rcvc {

enum class RuleTag { HighDegree, Degree4, Degree3Regular };

const char* to_string(RuleTag tag);

/// Lower bounds on the circuit-rank drop of the two children of a branch:
/// `include` for G - v, `exclude` for G - N[v]. Each bound is certified only
/// when that child stays connected.
struct EstimateVector {
    std::size_t include = 0;
    std::size_t exclude = 0;
    friend bool operator==(const EstimateVector&, const EstimateVector&) = default;
};

struct BranchPlan {
    VertexId vertex = 0;
    VertexSet satellites;
    RuleTag rule = RuleTag::Degree3Regular;
    std::string note;
    EstimateVector estimate;
};

/// include = deg(v) - 1;
/// exclude = Σ_{w∈N(v)} deg(w) - 2·deg(v) + 1, lowered by the number of edges
/// inside N(v) beyond deg(v) - 2, clamped at zero.
EstimateVector estimate_vector(const Graph& g, VertexId v);

/// Length of a shortest cycle through v, or 0 when v lies on no cycle.
std::size_t shortest_cycle_through(const Graph& g, VertexId v);

/// Picks the branch vertex of a reduced graph (nonempty, min degree >= 3).
///
/// Priority: the highest degree >= 5 (then min id); otherwise a degree-4
/// vertex, preferring ones with satellites, then the largest exclude estimate;
/// otherwise (3-regular) the largest exclude estimate, then the shortest cycle
/// through the vertex, then min id.
BranchPlan select(const Graph& g);

}  // namespace rcvc
