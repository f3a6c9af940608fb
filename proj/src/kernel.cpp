#include "rcvc/kernel.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "rcvc/errors.hpp"

namespace rcvc {

BipartiteMatching::BipartiteMatching(std::size_t left, std::size_t right,
                                     std::vector<std::vector<std::size_t>> adjacency)
    : left_(left),
      right_(right),
      adj_(std::move(adjacency)),
      mate_left_(left, npos),
      mate_right_(right, npos),
      dist_(left, 0),
      cursor_(left, 0) {
    require(adj_.size() == left_, "BipartiteMatching: adjacency size mismatch");
    while (bfs()) {
        std::fill(cursor_.begin(), cursor_.end(), 0);
        for (std::size_t l = 0; l < left_; ++l)
            if (mate_left_[l] == npos && dfs(l)) ++size_;
    }
}

bool BipartiteMatching::bfs() {
    constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
    std::queue<std::size_t> queue;
    for (std::size_t l = 0; l < left_; ++l) {
        if (mate_left_[l] == npos) {
            dist_[l] = 0;
            queue.push(l);
        } else {
            dist_[l] = inf;
        }
    }
    bool found = false;
    while (!queue.empty()) {
        std::size_t l = queue.front();
        queue.pop();
        for (std::size_t r : adj_[l]) {
            std::size_t next = mate_right_[r];
            if (next == npos) {
                found = true;
            } else if (dist_[next] == inf) {
                dist_[next] = dist_[l] + 1;
                queue.push(next);
            }
        }
    }
    return found;
}

bool BipartiteMatching::dfs(std::size_t l) {
    for (std::size_t& i = cursor_[l]; i < adj_[l].size(); ++i) {
        std::size_t r = adj_[l][i];
        std::size_t next = mate_right_[r];
        if (next == npos || (dist_[next] == dist_[l] + 1 && dfs(next))) {
            mate_left_[l] = r;
            mate_right_[r] = l;
            ++i;
            return true;
        }
    }
    dist_[l] = std::numeric_limits<std::size_t>::max();
    return false;
}

void BipartiteMatching::minimum_cover(std::vector<std::uint8_t>& left_in, std::vector<std::uint8_t>& right_in) const {
    // Z = vertices reachable from free left vertices by alternating paths;
    // the cover is (L \ Z) ∪ (R ∩ Z).
    std::vector<std::uint8_t> left_seen(left_, 0), right_seen(right_, 0);
    std::queue<std::size_t> queue;
    for (std::size_t l = 0; l < left_; ++l)
        if (mate_left_[l] == npos) {
            left_seen[l] = 1;
            queue.push(l);
        }
    while (!queue.empty()) {
        std::size_t l = queue.front();
        queue.pop();
        for (std::size_t r : adj_[l]) {
            if (right_seen[r] || mate_left_[l] == r) continue;
            right_seen[r] = 1;
            std::size_t next = mate_right_[r];
            if (next != npos && !left_seen[next]) {
                left_seen[next] = 1;
                queue.push(next);
            }
        }
    }
    left_in.assign(left_, 0);
    right_in.assign(right_, 0);
    for (std::size_t l = 0; l < left_; ++l) left_in[l] = !left_seen[l];
    for (std::size_t r = 0; r < right_; ++r) right_in[r] = right_seen[r];
}

namespace {

struct DoubleCover {
    VertexSet ids;
    BipartiteMatching matching;
};

DoubleCover double_cover(const Graph& g) {
    VertexSet ids = g.vertices();
    std::vector<std::vector<std::size_t>> adj(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (VertexId w : g.neighbors(ids[i]))
            adj[i].push_back(static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), w) - ids.begin()));
    std::size_t n = ids.size();
    return {std::move(ids), BipartiteMatching(n, n, std::move(adj))};
}

}  // namespace

NTPartition lp_partition(const Graph& g) {
    DoubleCover dc = double_cover(g);
    std::vector<std::uint8_t> left_in, right_in;
    dc.matching.minimum_cover(left_in, right_in);
    NTPartition part;
    for (std::size_t i = 0; i < dc.ids.size(); ++i) {
        switch (left_in[i] + right_in[i]) {
            case 0: part.zeros.push_back(dc.ids[i]); break;
            case 1: part.halves.push_back(dc.ids[i]); break;
            default: part.ones.push_back(dc.ids[i]); break;
        }
    }
    return part;
}

std::size_t lp_value_doubled(const Graph& g) { return double_cover(g).matching.size(); }

std::size_t lp_lower_bound(const Graph& g) { return (lp_value_doubled(g) + 1) / 2; }

KernelResult nt_kernelize(const Graph& g, long long k) {
    require(k >= 0, "nt_kernelize: k must be non-negative");
    KernelResult result;
    result.partition = lp_partition(g);
    result.kernel = g;
    for (VertexId v : result.partition.ones) include_vertex(result.kernel, result.trace, v);
    for (VertexId v : result.partition.zeros) delete_isolated(result.kernel, result.trace, v);
    result.k_residual = k - static_cast<long long>(result.partition.ones.size());

    const auto kernel_size = static_cast<long long>(result.kernel.num_vertices());
    if (result.k_residual < 0 || kernel_size > 2 * result.k_residual)
        result.verdict = KernelVerdict::No;
    else if (result.kernel.num_edges() == 0)
        result.verdict = KernelVerdict::Yes;
    else
        result.verdict = KernelVerdict::Open;
    return result;
}

}  // namespace rcvc
