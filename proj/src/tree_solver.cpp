#include "rcvc/tree_solver.hpp"

#include <algorithm>
#include <deque>

#include "rcvc/errors.hpp"

namespace rcvc {

ForestCover min_vc_forest(const Graph& g) {
    require(g.is_forest(), "min_vc_forest: graph has a cycle");

    const std::size_t slots = g.slot_count();
    std::vector<std::size_t> degree(slots, 0);
    std::vector<std::uint8_t> gone(slots, 1);
    std::deque<std::size_t> leaves;
    for (std::size_t s = 0; s < slots; ++s) {
        if (!g.slot_alive(s)) continue;
        gone[s] = 0;
        degree[s] = g.degree(g.id_at(s));
        if (degree[s] == 1) leaves.push_back(s);
    }

    ForestCover result;
    while (!leaves.empty()) {
        std::size_t leaf = leaves.front();
        leaves.pop_front();
        if (gone[leaf] || degree[leaf] != 1) continue;

        std::size_t parent = slots;
        for (VertexId w : g.neighbors(g.id_at(leaf))) {
            std::size_t t = g.slot_of(w);
            if (!gone[t]) {
                parent = t;
                break;
            }
        }
        result.cover.push_back(g.id_at(parent));
        gone[parent] = 1;
        gone[leaf] = 1;
        for (VertexId w : g.neighbors(g.id_at(parent))) {
            std::size_t t = g.slot_of(w);
            if (gone[t]) continue;
            if (--degree[t] == 1) leaves.push_back(t);
        }
    }
    std::sort(result.cover.begin(), result.cover.end());
    result.size = result.cover.size();
    return result;
}

}  // namespace rcvc
