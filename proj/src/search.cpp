#include "rcvc/search.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>

#include "rcvc/analysis.hpp"
#include "rcvc/errors.hpp"
#include "rcvc/kernel.hpp"
#include "rcvc/reductions.hpp"
#include "rcvc/selection.hpp"
#include "rcvc/structure.hpp"
#include "rcvc/tree_solver.hpp"

namespace rcvc {

void SearchStats::merge(const SearchStats& other) {
    nodes_expanded += other.nodes_expanded;
    branch_nodes += other.branch_nodes;
    max_depth = std::max(max_depth, other.max_depth);
    tree_leaf_count += other.tree_leaf_count;
    k_exhausted_leaves += other.k_exhausted_leaves;
    lp_pruned += other.lp_pruned;
    kernel_no += other.kernel_no;
    tau_checks += other.tau_checks;
    tau_trajectory_ok = tau_trajectory_ok && other.tau_trajectory_ok;
    tau_drop_ok = tau_drop_ok && other.tau_drop_ok;
    estimate_ok = estimate_ok && other.estimate_ok;
}

bool SearchStats::same_counters(const SearchStats& o) const {
    return nodes_expanded == o.nodes_expanded && branch_nodes == o.branch_nodes && max_depth == o.max_depth &&
           tree_leaf_count == o.tree_leaf_count && k_exhausted_leaves == o.k_exhausted_leaves &&
           lp_pruned == o.lp_pruned && kernel_no == o.kernel_no && tau_root == o.tau_root &&
           tau_checks == o.tau_checks && tau_trajectory_ok == o.tau_trajectory_ok &&
           tau_drop_ok == o.tau_drop_ok && estimate_ok == o.estimate_ok;
}

namespace {

enum class Mode { Decide, Minimize };

using Cover = std::optional<VertexSet>;

class Search {
public:
    Search(const SearchOptions& options, bool lp_bound) : options_(options), lp_bound_(lp_bound) {
        std::size_t levels = 0;
        while ((1u << levels) < std::max(1u, options_.threads)) ++levels;
        spawn_levels_ = levels;
    }

    SearchStats& stats() { return stats_; }

    Cover solve(Graph g, long long budget, Mode mode, std::size_t depth, std::optional<std::size_t> parent_tau) {
        if (++stats_.nodes_expanded > options_.node_budget)
            throw ResourceLimit("search: node budget of " + std::to_string(options_.node_budget) + " exceeded");
        stats_.max_depth = std::max(stats_.max_depth, depth);
        if (options_.instrument && parent_tau) {
            ++stats_.tau_checks;
            if (tau(g) > *parent_tau) stats_.tau_trajectory_ok = false;
        }

        if (budget < 0) {
            ++stats_.k_exhausted_leaves;
            return std::nullopt;
        }
        if (g.num_edges() == 0) return VertexSet{};
        if (budget == 0) {
            ++stats_.k_exhausted_leaves;
            return std::nullopt;
        }
        if (g.is_forest()) {
            ++stats_.tree_leaf_count;
            ForestCover fc = min_vc_forest(g);
            if (static_cast<long long>(fc.size) > budget) return std::nullopt;
            return std::move(fc.cover);
        }

        ReductionTrace trace;
        const long long entry_budget = budget;
        if (options_.kernelize &&
            (depth == 0 || (options_.interleave_depth > 0 && depth % options_.interleave_depth == 0))) {
            KernelResult kr = nt_kernelize(g, budget);
            if (kr.verdict == KernelVerdict::No) {
                ++stats_.kernel_no;
                return std::nullopt;
            }
            g = std::move(kr.kernel);
            trace = std::move(kr.trace);
        }
        reduce_to_fixpoint(g, trace, {options_.domination, options_.struction});
        budget = entry_budget - static_cast<long long>(trace.k_delta());
        if (budget < 0) {
            ++stats_.k_exhausted_leaves;
            return std::nullopt;
        }
        if (g.num_edges() == 0) return lift_cover(trace, VertexSet{});
        if (budget == 0) {
            ++stats_.k_exhausted_leaves;
            return std::nullopt;
        }
        if (lp_bound_ && static_cast<long long>(lp_lower_bound(g)) > budget) {
            ++stats_.lp_pruned;
            return std::nullopt;
        }

        std::vector<VertexSet> components = g.connected_components();
        Cover reduced = components.size() > 1 ? solve_components(g, components, budget, mode, depth)
                                              : branch(g, budget, mode, depth);
        if (!reduced) return std::nullopt;
        return lift_cover(trace, *reduced);
    }

private:
    Cover solve_components(const Graph& g, std::vector<VertexSet>& components, long long budget, Mode mode,
                           std::size_t depth) {
        std::stable_sort(components.begin(), components.end(),
                         [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
        std::optional<std::size_t> parent;
        if (options_.instrument) parent.emplace(tau(g));
        std::vector<Graph> parts;
        std::vector<long long> lower;
        for (const VertexSet& c : components) {
            parts.push_back(g.induced_subgraph(c));
            // A component left by the reductions has an edge, so it needs a vertex.
            lower.push_back(lp_bound_ ? static_cast<long long>(lp_lower_bound(parts.back())) : 1);
        }

        VertexSet cover;
        long long used = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            long long others = 0;
            for (std::size_t j = i + 1; j < parts.size(); ++j) others += lower[j];
            Mode part_mode = (i + 1 == parts.size()) ? mode : Mode::Minimize;
            Cover part = solve(std::move(parts[i]), budget - used - others, part_mode, depth, parent);
            if (!part) return std::nullopt;
            used += static_cast<long long>(part->size());
            cover = set_union(cover, *part);
        }
        return cover;
    }

    void instrument_branch(const Graph& g, const BranchPlan& plan, std::size_t branch_tau) {
        Graph without_v = g;
        without_v.remove_vertex(plan.vertex);
        if (!without_v.empty() && without_v.is_connected()) {
            ++stats_.tau_checks;
            std::size_t drop = branch_tau - tau(without_v);
            if (drop != g.degree(plan.vertex) - 1) stats_.tau_drop_ok = false;
            if (drop < plan.estimate.include) stats_.estimate_ok = false;
        }
        Graph without_closed = g;
        without_closed.remove_vertices(g.closed_neighborhood(plan.vertex));
        if (!without_closed.empty() && without_closed.is_connected()) {
            ++stats_.tau_checks;
            std::size_t after = tau(without_closed);
            if (after > branch_tau || branch_tau - after < plan.estimate.exclude) stats_.estimate_ok = false;
        }
    }

    Cover branch(const Graph& g, long long budget, Mode mode, std::size_t depth) {
        ++stats_.branch_nodes;
        const BranchPlan plan = select(g);
        std::optional<std::size_t> branch_tau;
        if (options_.instrument) {
            branch_tau = tau(g);
            instrument_branch(g, plan, *branch_tau);
        }

        Graph take = g;
        ReductionTrace take_trace;
        for (VertexId z : plan.satellites) couple_satellite(take, take_trace, plan.vertex, z);
        include_vertex(take, take_trace, plan.vertex);

        Graph skip = g;
        ReductionTrace skip_trace;
        for (VertexId z : plan.satellites) couple_satellite(skip, skip_trace, plan.vertex, z);
        for (VertexId w : g.neighbors(plan.vertex)) include_vertex(skip, skip_trace, w);
        delete_isolated(skip, skip_trace, plan.vertex);

        const auto take_cost = static_cast<long long>(take_trace.k_delta());
        const auto skip_cost = static_cast<long long>(skip_trace.k_delta());

        if (depth < spawn_levels_) return branch_parallel(std::move(take), take_trace, std::move(skip), skip_trace,
                                                          budget, mode, depth, branch_tau);

        Cover first = solve(std::move(take), budget - take_cost, mode, depth + 1, branch_tau);
        if (first) {
            VertexSet lifted = lift_cover(take_trace, *first);
            if (mode == Mode::Decide) return lifted;
            budget = static_cast<long long>(lifted.size()) - 1;
            Cover second = solve(std::move(skip), budget - skip_cost, mode, depth + 1, branch_tau);
            if (second) return lift_cover(skip_trace, *second);
            return lifted;
        }
        Cover second = solve(std::move(skip), budget - skip_cost, mode, depth + 1, branch_tau);
        if (!second) return std::nullopt;
        return lift_cover(skip_trace, *second);
    }

    // Both children run to completion with the same budget, so the merged
    // counters do not depend on scheduling.
    Cover branch_parallel(Graph take, const ReductionTrace& take_trace, Graph skip, const ReductionTrace& skip_trace,
                          long long budget, Mode mode, std::size_t depth, std::optional<std::size_t> branch_tau) {
        Search left(options_, lp_bound_);
        left.spawn_levels_ = spawn_levels_;
        Search right(options_, lp_bound_);
        right.spawn_levels_ = spawn_levels_;
        const auto take_budget = budget - static_cast<long long>(take_trace.k_delta());
        const auto skip_budget = budget - static_cast<long long>(skip_trace.k_delta());

        auto pending = std::async(std::launch::async, [&] {
            return left.solve(std::move(take), take_budget, mode, depth + 1, branch_tau);
        });
        Cover second = right.solve(std::move(skip), skip_budget, mode, depth + 1, branch_tau);
        Cover first = pending.get();
        stats_.merge(left.stats_);
        stats_.merge(right.stats_);

        std::optional<VertexSet> a = first ? std::optional(lift_cover(take_trace, *first)) : std::nullopt;
        std::optional<VertexSet> b = second ? std::optional(lift_cover(skip_trace, *second)) : std::nullopt;
        if (a && b) return b->size() < a->size() ? b : a;
        return a ? a : b;
    }

    SearchOptions options_;
    bool lp_bound_;
    std::size_t spawn_levels_ = 0;
    SearchStats stats_;
};

}  // namespace

Verdict vc_decide(const Graph& g, long long k, const SearchOptions& options) {
    require(k >= 0, "vc_decide: k must be non-negative");
    const auto start = std::chrono::steady_clock::now();
    Search search(options, options.lp_bound.value_or(false));
    if (options.instrument) search.stats().tau_root = tau(g);
    Cover cover = search.solve(g, k, Mode::Decide, 0, std::nullopt);

    Verdict verdict;
    verdict.k = k;
    verdict.yes = cover.has_value();
    if (cover) verdict.cover = std::move(*cover);
    verdict.stats = search.stats();
    verdict.stats.wallclock = std::chrono::steady_clock::now() - start;
    return verdict;
}

MinimumCover vc_minimum(const Graph& g, const SearchOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    Search search(options, options.lp_bound.value_or(true));
    if (options.instrument) search.stats().tau_root = tau(g);
    Cover cover = search.solve(g, static_cast<long long>(g.num_vertices()), Mode::Minimize, 0, std::nullopt);
    if (!cover) throw std::logic_error("vc_minimum: no cover within n vertices");

    MinimumCover result;
    result.size = cover->size();
    result.cover = std::move(*cover);
    result.stats = search.stats();
    result.stats.wallclock = std::chrono::steady_clock::now() - start;
    return result;
}

BudgetReport check_node_budget(const SearchStats& stats, long long k) {
    BudgetReport report;
    report.nodes_expanded = stats.nodes_expanded;
    report.k = k;
    report.envelope_1_15855 = std::pow(kWorstBranchingNumber, static_cast<double>(k));
    report.envelope_1_1504 = std::pow(kInterleavedBase, static_cast<double>(k));
    if (k > 0) report.log_nodes_per_k = std::log(static_cast<double>(std::max<std::uint64_t>(1, stats.nodes_expanded))) / k;
    return report;
}

}  // namespace rcvc
