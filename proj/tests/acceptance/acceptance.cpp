// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.
// Usage: rcvc_acceptance [report.json]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../support.hpp"
#include "rcvc/analysis.hpp"
#include "rcvc/cli.hpp"
#include "rcvc/dimacs.hpp"
#include "rcvc/errors.hpp"
#include "rcvc/generators.hpp"
#include "rcvc/kernel.hpp"
#include "rcvc/oracle.hpp"
#include "rcvc/reductions.hpp"
#include "rcvc/search.hpp"
#include "rcvc/structure.hpp"
#include "rcvc/tree_solver.hpp"

using namespace rcvc;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void expect(bool condition, const std::string& what) {
        if (!condition && pass) {
            pass = false;
            detail = what;
        }
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

// Independent acyclicity check (union-find), not Graph::is_forest.
bool acyclic(const Graph& g) {
    std::map<VertexId, VertexId> parent;
    for (VertexId v : g.vertices()) parent[v] = v;
    auto find = [&](VertexId v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const Edge& e : g.edges()) {
        VertexId x = find(e.u), y = find(e.v);
        if (x == y) return false;
        parent[x] = y;
    }
    return true;
}

Outcome criterion1() {
    Outcome o;
    branching_number({3, 7});  // warm-up
    const auto start = Clock::now();
    const double x = branching_number({3, 7});
    const double ms = seconds_since(start) * 1e3;
    o.expect(std::abs(x - 1.15855) <= 1e-4, fmt("root %.7f", x));
    o.expect(ms < 1.0, fmt("took %.3f ms", ms));
    o.detail = o.pass ? fmt("root %.7f (tolerance 1e-4), %.4f ms (limit 1 ms)", x, ms) : o.detail;
    return o;
}

Outcome criterion2() {
    Outcome o;
    const double a = branching_number({5, 9, 12});
    const double b = branching_number({22, 19, 6, 5});
    o.expect(std::abs(a - 1.1451) <= 1e-3, fmt("(5,9,12) -> %.7f", a));
    o.expect(std::abs(b - 1.1574) <= 1e-3, fmt("(22,19,6,5) -> %.7f", b));
    if (o.pass) o.detail = fmt("(5,9,12) -> %.7f, (22,19,6,5) -> %.7f (tolerance 1e-3)", a, b);
    return o;
}

Outcome criterion3() {
    Outcome o;
    InterleaveResult r = interleave_base(1.15855, 16);
    o.expect(std::abs(r.alpha - 0.04799) <= 1e-4, fmt("alpha %.7f", r.alpha));
    o.expect(std::abs(r.effective_base - 1.1504) <= 1e-3, fmt("effective base %.7f", r.effective_base));
    if (o.pass) o.detail = fmt("alpha %.7f (tol 1e-4), effective base %.7f (tol 1e-3)", r.alpha, r.effective_base);
    return o;
}

Outcome criterion4() {
    Outcome o;
    cli::RunConfig config;
    config.command = cli::Command::Analyze;
    std::istringstream in;
    std::ostringstream out, err;
    o.expect(cli::run(config, in, out, err) == cli::kOk, "analyze failed: " + err.str());
    if (!o.pass) return o;
    json doc = json::parse(out.str());
    std::size_t count = 0;
    for (const json& item : doc["catalog"]) {
        const double x = item["number"].get<double>();
        o.expect(std::isfinite(x) && x > 1.0, item["case"].get<std::string>() + " -> " + std::to_string(x));
        ++count;
    }
    o.expect(count == case_catalog().size(), "catalog size mismatch");
    if (o.pass) o.detail = std::to_string(count) + " vectors, every branching number finite and > 1";
    return o;
}

Outcome criterion5() {
    Outcome o;
    Graph p = gen::petersen();
    const std::size_t t = tau(p), ex = extra_degree_graph(p), rank = circuit_rank(p);
    o.expect(t == 6 && ex / 2 + 1 == 6 && rank == 6,
             fmt("tau %.0f, ex/2+1 %.0f, circuit rank %.0f", double(t), double(ex / 2 + 1), double(rank)));
    if (o.pass) o.detail = "tau = ex/2 + 1 = circuit rank = 6";
    return o;
}

Outcome criterion6() {
    Outcome o;
    gen::Rng rng(6006);
    std::size_t open = 0, yes = 0, no = 0;
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = testing::pick(rng, 2, 60);
        Graph g = gen::maxdeg3(n, rng);
        // budgets around the LP bound, where all three verdicts occur
        const long long k = std::max<long long>(0, static_cast<long long>(lp_lower_bound(g)) - 1 +
                                                       static_cast<long long>(testing::pick(rng, 0, 4)));
        KernelResult r = nt_kernelize(g, k);
        if (r.verdict == KernelVerdict::No) {
            ++no;
            continue;
        }
        (r.verdict == KernelVerdict::Yes ? yes : open)++;
        o.expect(static_cast<long long>(r.kernel.num_vertices()) <= 2 * r.k_residual,
                 "kernel of " + std::to_string(r.kernel.num_vertices()) + " vertices with k_residual " +
                     std::to_string(r.k_residual));
    }
    if (o.pass)
        o.detail = "300 graphs (" + std::to_string(open) + " open, " + std::to_string(yes) + " yes, " +
                   std::to_string(no) + " no): kernel size <= 2 k_residual";
    return o;
}

Outcome criterion7() {
    Outcome o;
    gen::Rng rng(7007);
    const auto start = Clock::now();
    std::size_t lemma2 = 0;
    for (int i = 0; i < 1200; ++i) {
        Graph g = testing::random_graph(rng, testing::pick(rng, 1, 40), testing::pick(rng, 2, 7));
        const std::size_t t = tau(g);
        const std::size_t m = g.num_edges(), n = g.num_vertices(), c = g.num_components();
        o.expect(t + n == m + c, "tau != m - n + c");
        o.expect(tau(strip_lines(g)) == t, "strip_lines changed tau");
        o.expect((t == 0) == acyclic(g), "tau = 0 disagrees with acyclicity");
        for (const VertexSet& comp : g.connected_components()) {
            Graph part = g.induced_subgraph(comp);
            o.expect(tau(part) <= extra_degree_graph(part) / 2 + 1, "tau above floor(ex/2) + 1");
            if (comp.size() < 2) continue;
            // one new edge inside a connected graph raises tau by exactly one
            VertexId u = comp[gen::uniform_below(rng, comp.size())];
            VertexId v = comp[gen::uniform_below(rng, comp.size())];
            if (u == v || part.has_edge(u, v)) continue;
            std::size_t before = tau(part);
            part.add_edge(u, v);
            o.expect(tau(part) == before + 1, "edge addition did not raise tau by 1");
            ++lemma2;
        }
    }
    const double s = seconds_since(start);
    o.expect(s < 10.0, fmt("took %.2f s", s));
    if (o.pass) o.detail = fmt("1200 graphs, %.0f edge additions, %.2f s (limit 10 s)", double(lemma2), s);
    return o;
}

Outcome criterion8() {
    Outcome o;
    gen::Rng rng(8008);
    std::size_t admitted = 0, rejected = 0;
    for (int i = 0; i < 400; ++i) {
        Graph g = testing::random_graph(rng, testing::pick(rng, 1, 12), testing::pick(rng, 2, 6));
        try {
            oracle::RealCycleResult r = oracle::max_real_cycle_bruteforce(g);
            ++admitted;
            o.expect(r.count == tau(g), "max real-cycle list " + std::to_string(r.count) + " vs tau " +
                                            std::to_string(tau(g)));
            o.expect(oracle::is_real_cycle_list(r.witness) && r.witness.cycles.size() == r.count, "bad witness");
        } catch (const ResourceLimit&) {
            ++rejected;
        }
    }
    o.expect(admitted >= 300, "only " + std::to_string(admitted) + " graphs admitted");
    if (o.pass)
        o.detail = std::to_string(admitted) + " graphs admitted (" + std::to_string(rejected) +
                   " over the guard): maximum real-cycle list = tau";
    return o;
}

Outcome criterion9() {
    Outcome o;
    gen::Rng rng(9009);
    const auto start = Clock::now();
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = testing::pick(rng, 1, 20);
        Graph g = i % 2 == 0 ? gen::maxdeg3(n, rng) : testing::random_graph(rng, n, 5);
        MinimumCover m = vc_minimum(g);
        const std::size_t opt = oracle::min_vc_bruteforce(g).size;
        o.expect(m.size == opt, "graph " + std::to_string(i) + ": " + std::to_string(m.size) + " vs oracle " +
                                    std::to_string(opt));
        o.expect(m.cover.size() == m.size && oracle::is_vertex_cover(g, m.cover), "invalid certificate");
    }
    const double s = seconds_since(start);
    o.expect(s < 60.0, fmt("took %.2f s", s));
    if (o.pass) o.detail = fmt("500 graphs (max degree 3 and 5), all optimal, %.2f s (limit 60 s)", s);
    return o;
}

Outcome criterion10() {
    Outcome o;
    gen::Rng rng(10010);
    std::size_t folds = 0, dominations = 0, structions = 0;
    auto verify = [&](const Graph& original, const Graph& reduced, const ReductionTrace& trace, const char* rule) {
        oracle::CoverResult inner = oracle::min_vc_bruteforce(reduced);
        const std::size_t opt = oracle::min_vc_bruteforce(original).size;
        o.expect(inner.size + trace.k_delta() == opt, std::string(rule) + ": optimum not preserved");
        VertexSet lifted = lift_cover(trace, reduced, inner.cover);
        o.expect(lifted.size() == opt && oracle::is_vertex_cover(original, lifted),
                 std::string(rule) + ": lifted cover wrong");
    };
    for (int i = 0; i < 500; ++i) {
        Graph g = testing::random_graph(rng, testing::pick(rng, 1, 18), testing::pick(rng, 2, 6));
        for (VertexId v : g.vertices()) {
            if (g.degree(v) == 2) {
                Graph h = g;
                ReductionTrace t;
                fold_degree2(h, v, t);
                verify(g, h, t, "fold");
                ++folds;
                break;
            }
        }
        {
            Graph h = g;
            ReductionTrace t;
            if (dominated_vertex(h, t)) {
                verify(g, h, t, "domination");
                ++dominations;
            }
        }
        for (VertexId v : g.vertices()) {
            Graph h = g;
            ReductionTrace t;
            if (struction(h, v, t)) {
                verify(g, h, t, "struction");
                ++structions;
                break;
            }
        }
        for (bool with_struction : {false, true}) {
            Graph h = g;
            ReductionTrace t;
            reduce_to_fixpoint(h, t, {true, with_struction});
            verify(g, h, t, with_struction ? "fixpoint+struction" : "fixpoint");
        }
    }
    if (o.pass)
        o.detail = "500 graphs: " + std::to_string(folds) + " folds, " + std::to_string(dominations) +
                   " dominations, " + std::to_string(structions) + " structions, 1000 fixpoint runs exact";
    return o;
}

Outcome criterion11() {
    Outcome o;
    gen::Rng rng(11011);
    for (int i = 0; i < 500; ++i) {
        Graph t = gen::tree(testing::pick(rng, 1, 16), rng);
        ForestCover fc = min_vc_forest(t);
        o.expect(fc.size == oracle::min_vc_bruteforce(t).size && oracle::is_vertex_cover(t, fc.cover),
                 "tree " + std::to_string(i) + " differs from oracle");
    }
    Graph big = gen::tree(100000, rng);
    const auto start = Clock::now();
    ForestCover fc = min_vc_forest(big);
    const double s = seconds_since(start);
    o.expect(oracle::is_vertex_cover(big, fc.cover), "large tree cover invalid");
    o.expect(s < 1.0, fmt("n = 1e5 took %.3f s", s));
    if (o.pass) o.detail = fmt("500 trees n <= 16 match oracle; n = 1e5 in %.3f s (limit 1 s)", s);
    return o;
}

std::string minimize_json(const std::string& dimacs) {
    cli::RunConfig config;
    config.command = cli::Command::Minimize;
    std::istringstream in(dimacs);
    std::ostringstream out, err;
    cli::run(config, in, out, err);
    json doc = json::parse(out.str());
    doc["stats"].erase("wallclock_ms");
    return doc.dump();
}

Outcome criterion12() {
    Outcome o;
    gen::Rng rng(12012);
    std::uint64_t checks = 0;
    for (int i = 0; i < 300; ++i) {
        Graph g = i % 3 == 0 ? gen::cubic(2 * testing::pick(rng, 5, 15), rng)
                             : testing::random_graph(rng, testing::pick(rng, 6, 30), testing::pick(rng, 3, 6));
        MinimumCover m = vc_minimum(g);
        Verdict v = vc_decide(g, static_cast<long long>(m.size));
        for (const SearchStats* s : {&m.stats, &v.stats}) {
            o.expect(s->tau_trajectory_ok, "tau increased along a branch");
            o.expect(s->tau_drop_ok, "tau drop differs from d - 1");
            checks += s->tau_checks;
        }
        if (i % 10 == 0) {
            const std::string dimacs = write_dimacs(g);
            o.expect(minimize_json(dimacs) == minimize_json(dimacs), "rerun output differs");
        }
    }
    if (o.pass)
        o.detail = std::to_string(checks) + " tau checks on 300 graphs; reruns byte-identical (wallclock excluded)";
    return o;
}

Outcome criterion13(const std::string& report_path) {
    Outcome o;
    gen::Rng rng(13013);
    json rows = json::array();
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = std::vector<std::size_t>{20, 30, 40}[i % 3];
        Graph g = gen::cubic(n, rng);
        const long long k = static_cast<long long>(vc_minimum(g).size);
        Verdict v = vc_decide(g, k);
        BudgetReport r = check_node_budget(v.stats, k);
        worst = std::max(worst, *r.log_nodes_per_k);
        rows.push_back({{"n", n},
                        {"k", k},
                        {"nodes_expanded", r.nodes_expanded},
                        {"envelope_1_15855", r.envelope_1_15855},
                        {"envelope_1_1504", r.envelope_1_1504},
                        {"log_nodes_per_k", *r.log_nodes_per_k}});
    }
    std::ofstream(report_path) << json{{"instances", rows}}.dump(2) << '\n';
    o.detail = fmt("50 cubic graphs reported to file; max ln(nodes)/k = %.4f vs ln 1.15855 = %.4f (not enforced)",
                   worst, std::log(1.15855));
    o.detail += " -> " + report_path;
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string report = argc > 1 ? argv[1] : "envelope_report.json";
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"branching number (3,7)", criterion1},
        {"branching numbers (5,9,12) and (22,19,6,5)", criterion2},
        {"interleaved base", criterion3},
        {"analyze catalog", criterion4},
        {"tau of the Petersen graph", criterion5},
        {"NT kernel size", criterion6},
        {"structure properties", criterion7},
        {"real-cycle oracle equals tau", criterion8},
        {"solver equals oracle", criterion9},
        {"reduction soundness", criterion10},
        {"tree solver", criterion11},
        {"search invariants", criterion12},
        {"envelope report", [&] { return criterion13(report); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
