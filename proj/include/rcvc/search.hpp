#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "rcvc/graph.hpp"

namespace rcvc {

struct SearchOptions {
    bool domination = true;
    bool struction = false;
    /// LP (half-integral relaxation) lower-bound pruning. Unset means: off for
    /// decision runs, on for minimization.
    std::optional<bool> lp_bound;
    bool kernelize = true;
    /// Re-kernelize every this many branching levels; 0 = root only.
    std::size_t interleave_depth = 8;
    std::uint64_t node_budget = 100'000'000;
    /// Recompute the real-cycle number around every branch and record whether
    /// the monotonicity and drop properties held.
    bool instrument = true;
    unsigned threads = 1;
};

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t branch_nodes = 0;
    std::size_t max_depth = 0;
    std::uint64_t tree_leaf_count = 0;
    std::uint64_t k_exhausted_leaves = 0;
    std::uint64_t lp_pruned = 0;
    std::uint64_t kernel_no = 0;
    std::size_t tau_root = 0;
    std::uint64_t tau_checks = 0;
    bool tau_trajectory_ok = true;  // τ(child) <= τ(parent) at every branch
    bool tau_drop_ok = true;        // τ(G) - τ(G - v) = deg(v) - 1 when G - v is connected
    bool estimate_ok = true;        // measured drops never fell below the plan's estimate
    std::chrono::nanoseconds wallclock{0};

    void merge(const SearchStats& other);
    /// Equality ignoring wallclock.
    bool same_counters(const SearchStats& other) const;
};

struct Verdict {
    bool yes = false;
    VertexSet cover;  // empty unless yes
    long long k = 0;
    SearchStats stats;
};

struct MinimumCover {
    std::size_t size = 0;
    VertexSet cover;
    SearchStats stats;
};

/// Decides whether `g` has a vertex cover of size <= k and returns one if so.
Verdict vc_decide(const Graph& g, long long k, const SearchOptions& options = {});

/// Minimum vertex cover by branch-and-bound; components are solved
/// independently and their minima added.
MinimumCover vc_minimum(const Graph& g, const SearchOptions& options = {});

/// Observed search effort next to the c^k reference envelopes. Never asserts.
struct BudgetReport {
    std::uint64_t nodes_expanded = 0;
    long long k = 0;
    double envelope_1_15855 = 1.0;
    double envelope_1_1504 = 1.0;
    std::optional<double> log_nodes_per_k;  // ln(nodes)/k, unset for k == 0
};

BudgetReport check_node_budget(const SearchStats& stats, long long k);

}  // namespace rcvc
