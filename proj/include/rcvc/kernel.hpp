#pragma once

#include <cstddef>
#include <vector>

#include "rcvc/graph.hpp"
#include "rcvc/reductions.hpp"

namespace rcvc {

/// Maximum matching in a bipartite graph given as left-side adjacency lists
/// (Hopcroft-Karp, O(m sqrt(n))).
class BipartiteMatching {
public:
    BipartiteMatching(std::size_t left, std::size_t right, std::vector<std::vector<std::size_t>> adjacency);

    std::size_t size() const noexcept { return size_; }
    /// Partner of a left vertex, or npos.
    std::size_t mate_of_left(std::size_t l) const { return mate_left_[l]; }
    std::size_t mate_of_right(std::size_t r) const { return mate_right_[r]; }

    /// König's construction: a minimum vertex cover of the bipartite graph,
    /// as membership flags for the left and right sides.
    void minimum_cover(std::vector<std::uint8_t>& left_in, std::vector<std::uint8_t>& right_in) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    bool bfs();
    bool dfs(std::size_t l);

    std::size_t left_, right_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> mate_left_, mate_right_, dist_, cursor_;
    std::size_t size_ = 0;
};

/// Half-integral LP solution of vertex cover, split by value.
struct NTPartition {
    VertexSet ones;
    VertexSet zeros;
    VertexSet halves;
};

/// Optimal half-integral LP solution via the bipartite double cover.
NTPartition lp_partition(const Graph& g);

/// Twice the LP optimum (an integer, since the LP is half-integral).
std::size_t lp_value_doubled(const Graph& g);

/// ceil(LP optimum): a lower bound on the minimum vertex cover.
std::size_t lp_lower_bound(const Graph& g);

enum class KernelVerdict { Yes, No, Open };

struct KernelResult {
    Graph kernel;
    long long k_residual = 0;
    NTPartition partition;
    ReductionTrace trace;
    KernelVerdict verdict = KernelVerdict::Open;
};

/// Nemhauser-Trotter kernel: ones go into the cover, zeros are dropped, the
/// kernel is induced by the halves. The verdict is No when k_residual < 0 or
/// the kernel has more than 2 * k_residual vertices, Yes when the kernel is
/// edgeless and k_residual >= 0, Open otherwise.
KernelResult nt_kernelize(const Graph& g, long long k);

}  // namespace rcvc
