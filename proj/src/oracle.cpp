#include "rcvc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>

#include "rcvc/errors.hpp"

namespace rcvc::oracle {

bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
    for (const Edge& e : g.edges())
        if (!std::binary_search(cover.begin(), cover.end(), e.u) &&
            !std::binary_search(cover.begin(), cover.end(), e.v))
            return false;
    return true;
}

CoverResult min_vc_bruteforce(const Graph& g) {
    const VertexSet ids = g.vertices();
    const std::size_t n = ids.size();
    if (n > kMaxBruteForceVertices)
        throw ResourceLimit("min_vc_bruteforce: " + std::to_string(n) + " vertices exceeds the limit of " +
                            std::to_string(kMaxBruteForceVertices));

    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        auto iu = std::lower_bound(ids.begin(), ids.end(), e.u) - ids.begin();
        auto iv = std::lower_bound(ids.begin(), ids.end(), e.v) - ids.begin();
        adj[iu] |= 1u << iv;
        adj[iv] |= 1u << iu;
    }

    // Walk every subset S in Gray-code order while tracking the number of
    // edges with both ends in S. S is independent iff that count is zero; the
    // complement of a largest independent set is a minimum cover.
    std::uint32_t set = 0;
    std::size_t inside = 0;
    std::uint32_t best_set = 0;
    int best_size = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t step = 1; step < total; ++step) {
        int bit = std::countr_zero(step);
        std::uint32_t mask = 1u << bit;
        std::size_t touching = static_cast<std::size_t>(std::popcount(adj[bit] & set));
        if (set & mask) {
            set &= ~mask;
            inside -= touching;
        } else {
            set |= mask;
            inside += touching;
        }
        if (inside == 0) {
            int size = std::popcount(set);
            if (size > best_size) {
                best_size = size;
                best_set = set;
            }
        }
    }

    CoverResult result;
    for (std::size_t i = 0; i < n; ++i)
        if (!(best_set & (1u << i))) result.cover.push_back(ids[i]);
    result.size = result.cover.size();
    return result;
}

std::vector<Cycle> enumerate_simple_cycles(const Graph& g, std::size_t max_cycles) {
    std::vector<Cycle> out;
    std::vector<VertexId> path;
    std::map<VertexId, bool> on_path;

    // Depth-first extension from each start s through vertices larger than s;
    // closing back to s yields each cycle twice (once per direction), and the
    // orientation test keeps one.
    for (VertexId s : g.vertices()) {
        path.assign(1, s);
        on_path.clear();
        on_path[s] = true;
        std::vector<std::size_t> cursor(1, 0);
        while (!path.empty()) {
            VertexId top = path.back();
            auto nb = g.neighbors(top);
            std::size_t& i = cursor.back();
            if (i == nb.size()) {
                on_path[top] = false;
                path.pop_back();
                cursor.pop_back();
                continue;
            }
            VertexId w = nb[i++];
            if (w == s) {
                if (path.size() >= 3 && path[1] < path.back()) {
                    out.push_back(path);
                    if (out.size() > max_cycles)
                        throw ResourceLimit("enumerate_simple_cycles: more than " + std::to_string(max_cycles) +
                                            " cycles");
                }
            } else if (w > s && !on_path[w]) {
                on_path[w] = true;
                path.push_back(w);
                cursor.push_back(0);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> cycle_edges(const Cycle& c) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        VertexId a = c[i];
        VertexId b = c[(i + 1) % c.size()];
        out.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(out.begin(), out.end(), [](const Edge& x, const Edge& y) {
        return x.u != y.u ? x.u < y.u : x.v < y.v;
    });
    return out;
}

namespace {

constexpr std::size_t kMaxRealCycleEdges = 64;
constexpr std::size_t kMaxRealCycleCycles = 400;
constexpr std::size_t kMaxMemoStates = 4000000;

// best(S) is the longest list that can follow a prefix covering edge set S.
// It can only shrink as S grows (a cycle fresh against a larger set is fresh
// against a smaller one), so a cycle whose fresh part strictly contains
// another cycle's fresh part never needs to be tried.
struct RealCycleSearch {
    std::vector<std::uint64_t> masks;
    std::unordered_map<std::uint64_t, std::pair<std::size_t, int>> memo;  // best count, first choice

    std::size_t best(std::uint64_t covered) {
        if (auto it = memo.find(covered); it != memo.end()) return it->second.first;
        if (memo.size() >= kMaxMemoStates) throw ResourceLimit("max_real_cycle_bruteforce: state limit exceeded");

        std::vector<std::pair<std::uint64_t, int>> fresh;
        for (std::size_t i = 0; i < masks.size(); ++i)
            if (std::uint64_t f = masks[i] & ~covered) fresh.emplace_back(f, static_cast<int>(i));
        std::stable_sort(fresh.begin(), fresh.end(), [](const auto& a, const auto& b) {
            return std::popcount(a.first) < std::popcount(b.first);
        });
        std::vector<std::pair<std::uint64_t, int>> minimal;
        for (const auto& candidate : fresh) {
            bool dominated = std::any_of(minimal.begin(), minimal.end(), [&](const auto& kept) {
                return (kept.first & ~candidate.first) == 0;
            });
            if (!dominated) minimal.push_back(candidate);
        }

        std::size_t value = 0;
        int choice = -1;
        for (const auto& [f, i] : minimal) {
            std::size_t candidate = 1 + best(covered | f);
            if (candidate > value) {
                value = candidate;
                choice = i;
            }
        }
        memo.emplace(covered, std::make_pair(value, choice));
        return value;
    }
};

}  // namespace

RealCycleResult max_real_cycle_bruteforce(const Graph& g) {
    std::vector<Edge> all_edges = g.edges();
    if (all_edges.size() > kMaxRealCycleEdges)
        throw ResourceLimit("max_real_cycle_bruteforce: too many edges for bitmask search");
    std::vector<Cycle> cycles = enumerate_simple_cycles(g, kMaxRealCycleCycles);

    auto edge_index = [&](const Edge& e) {
        return std::find(all_edges.begin(), all_edges.end(), e) - all_edges.begin();
    };

    RealCycleSearch search;
    for (const Cycle& c : cycles) {
        std::uint64_t mask = 0;
        for (const Edge& e : cycle_edges(c)) mask |= std::uint64_t{1} << edge_index(e);
        search.masks.push_back(mask);
    }

    RealCycleResult result;
    result.count = search.best(0);
    std::uint64_t covered = 0;
    while (true) {
        int choice = search.memo.at(covered).second;
        if (choice < 0) break;
        std::uint64_t fresh = search.masks[choice] & ~covered;
        result.witness.cycles.push_back(cycles[choice]);
        result.witness.fresh_edge.push_back(all_edges[std::countr_zero(fresh)]);
        covered |= search.masks[choice];
    }
    return result;
}

CycleList greedy_real_cycles(const std::vector<Cycle>& order) {
    CycleList list;
    std::vector<Edge> covered;
    auto is_covered = [&](const Edge& e) { return std::find(covered.begin(), covered.end(), e) != covered.end(); };
    for (const Cycle& c : order) {
        std::vector<Edge> es = cycle_edges(c);
        auto fresh = std::find_if(es.begin(), es.end(), [&](const Edge& e) { return !is_covered(e); });
        if (fresh == es.end()) continue;
        list.cycles.push_back(c);
        list.fresh_edge.push_back(*fresh);
        for (const Edge& e : es)
            if (!is_covered(e)) covered.push_back(e);
    }
    return list;
}

bool is_real_cycle_list(const CycleList& list) {
    if (list.cycles.size() != list.fresh_edge.size()) return false;
    std::vector<Edge> covered;
    for (std::size_t i = 0; i < list.cycles.size(); ++i) {
        const Cycle& c = list.cycles[i];
        Cycle sorted = c;
        std::sort(sorted.begin(), sorted.end());
        if (c.size() < 3 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
        std::vector<Edge> es = cycle_edges(c);
        const Edge& fresh = list.fresh_edge[i];
        if (std::find(es.begin(), es.end(), fresh) == es.end()) return false;
        if (std::find(covered.begin(), covered.end(), fresh) != covered.end()) return false;
        covered.insert(covered.end(), es.begin(), es.end());
    }
    return true;
}

}  // namespace rcvc::oracle
