#pragma once

#include <cstddef>

#include "rcvc/graph.hpp"

namespace rcvc {

struct ForestCover {
    std::size_t size = 0;
    VertexSet cover;
};

/// Minimum vertex cover of a forest in O(n log n) (the log is id lookup):
/// repeatedly put the parent of a leaf into the cover and drop its star.
/// Leaves are taken first-in first-out, seeded in ascending id order.
/// Throws ContractViolation when `g` has a cycle.
ForestCover min_vc_forest(const Graph& g);

}  // namespace rcvc
