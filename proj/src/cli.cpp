#include "rcvc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "rcvc/analysis.hpp"
#include "rcvc/dimacs.hpp"
#include "rcvc/errors.hpp"
#include "rcvc/generators.hpp"
#include "rcvc/kernel.hpp"
#include "rcvc/oracle.hpp"
#include "rcvc/search.hpp"
#include "rcvc/structure.hpp"

namespace rcvc::cli {

using json = nlohmann::ordered_json;

const char* to_string(Command command) {
    switch (command) {
        case Command::Solve: return "solve";
        case Command::Minimize: return "minimize";
        case Command::Kernelize: return "kernelize";
        case Command::Tau: return "tau";
        case Command::Analyze: return "analyze";
        case Command::Gen: return "gen";
        case Command::Verify: return "verify";
        case Command::Oracle: return "oracle";
    }
    return "?";
}

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json base_document(Command command) {
    json doc;
    doc["schema_version"] = 1;
    doc["command"] = to_string(command);
    doc["answer"] = nullptr;
    doc["cover"] = nullptr;
    doc["size"] = nullptr;
    doc["k"] = nullptr;
    doc["stats"] = nullptr;
    doc["warnings"] = json::array();
    return doc;
}

json stats_json(const SearchStats& stats, long long k) {
    BudgetReport report = check_node_budget(stats, k);
    json s;
    s["nodes_expanded"] = stats.nodes_expanded;
    s["branch_nodes"] = stats.branch_nodes;
    s["max_depth"] = stats.max_depth;
    s["tau_root"] = stats.tau_root;
    s["tree_leaf_count"] = stats.tree_leaf_count;
    s["k_exhausted_leaves"] = stats.k_exhausted_leaves;
    s["lp_pruned"] = stats.lp_pruned;
    s["kernel_no"] = stats.kernel_no;
    s["tau_trajectory_ok"] = stats.tau_trajectory_ok;
    s["tau_drop_ok"] = stats.tau_drop_ok;
    s["envelope_1_15855"] = report.envelope_1_15855;
    s["envelope_1_1504"] = report.envelope_1_1504;
    s["log_nodes_per_k"] = report.log_nodes_per_k ? json(*report.log_nodes_per_k) : json(nullptr);
    s["wallclock_ms"] = std::chrono::duration<double, std::milli>(stats.wallclock).count();
    return s;
}

SearchOptions search_options(const RunConfig& config) {
    require(config.node_budget >= 1, "node budget must be at least 1");
    SearchOptions options;
    options.struction = config.struction;
    options.lp_bound = config.lp_bound;
    options.interleave_depth = config.interleave_depth;
    options.node_budget = config.node_budget;
    options.threads = std::max(1u, config.threads);
    return options;
}

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return read_file(path);
}

DimacsGraph load_graph(const RunConfig& config, std::istream& in, json& doc) {
    DimacsGraph parsed = parse_dimacs(read_input(config.input_path, in));
    if (parsed.duplicate_edges > 0)
        doc["warnings"].push_back("deduplicated " + std::to_string(parsed.duplicate_edges) + " repeated edge line(s)");
    return parsed;
}

long long required_k(const RunConfig& config) {
    if (!config.k) throw UsageError(std::string(to_string(config.command)) + " requires --k");
    if (*config.k < 0) throw UsageError("--k must be non-negative");
    return *config.k;
}

json cmd_solve(const RunConfig& config, std::istream& in) {
    json doc = base_document(config.command);
    const long long k = required_k(config);
    DimacsGraph dg = load_graph(config, in, doc);
    Verdict v = vc_decide(dg.graph, k, search_options(config));
    doc["answer"] = v.yes ? "YES" : "NO";
    if (v.yes) {
        doc["cover"] = v.cover;
        doc["size"] = v.cover.size();
    }
    doc["k"] = k;
    doc["stats"] = stats_json(v.stats, k);
    return doc;
}

json cmd_minimize(const RunConfig& config, std::istream& in) {
    json doc = base_document(config.command);
    DimacsGraph dg = load_graph(config, in, doc);
    MinimumCover m = vc_minimum(dg.graph, search_options(config));
    doc["answer"] = "OPTIMAL";
    doc["cover"] = m.cover;
    doc["size"] = m.size;
    doc["k"] = m.size;
    doc["stats"] = stats_json(m.stats, static_cast<long long>(m.size));
    return doc;
}

json cmd_oracle(const RunConfig& config, std::istream& in) {
    json doc = base_document(config.command);
    DimacsGraph dg = load_graph(config, in, doc);
    oracle::CoverResult r = oracle::min_vc_bruteforce(dg.graph);
    doc["answer"] = "OPTIMAL";
    doc["cover"] = r.cover;
    doc["size"] = r.size;
    doc["k"] = r.size;
    return doc;
}

json cmd_verify(const RunConfig& config, std::istream& in) {
    json doc = base_document(config.command);
    if (config.cover_path.empty()) throw UsageError("verify requires --cover");
    DimacsGraph dg = load_graph(config, in, doc);
    VertexSet cover = parse_cover(read_file(config.cover_path));
    bool known = std::all_of(cover.begin(), cover.end(), [&](VertexId v) { return dg.graph.contains(v); });
    bool valid = known && oracle::is_vertex_cover(dg.graph, cover);
    if (!known) doc["warnings"].push_back("cover names a vertex outside 1..N");
    doc["answer"] = valid ? "VALID" : "INVALID";
    doc["valid"] = valid;
    doc["cover"] = cover;
    doc["size"] = cover.size();
    return doc;
}

json cmd_tau(const RunConfig& config, std::istream& in) {
    json doc = base_document(config.command);
    DimacsGraph dg = load_graph(config, in, doc);
    const Graph& g = dg.graph;
    doc["answer"] = "OK";
    doc["tau"] = tau(g);
    doc["ex"] = extra_degree_graph(g);
    doc["circuit_rank"] = circuit_rank(g);
    doc["components"] = g.num_components();
    doc["tau_upper_bound"] = g.is_connected() ? json(tau_upper_bound(g)) : json(nullptr);
    return doc;
}

json cmd_kernelize(const RunConfig& config, std::istream& in) {
    json doc = base_document(config.command);
    const long long k = required_k(config);
    DimacsGraph dg = load_graph(config, in, doc);
    KernelResult kr = nt_kernelize(dg.graph, k);
    switch (kr.verdict) {
        case KernelVerdict::Yes: doc["answer"] = "YES"; break;
        case KernelVerdict::No: doc["answer"] = "NO"; break;
        case KernelVerdict::Open: doc["answer"] = "OPEN"; break;
    }
    doc["k"] = k;
    doc["k_residual"] = kr.k_residual;
    doc["partition"] = {{"ones", kr.partition.ones},
                        {"zeros", kr.partition.zeros},
                        {"halves", kr.partition.halves}};
    doc["kernel"] = {{"dimacs", write_dimacs(kr.kernel)}, {"labels", kr.kernel.vertices()}};
    return doc;
}

json cmd_analyze() {
    json doc = base_document(Command::Analyze);
    json catalog = json::array();
    for (const CatalogEntry& entry : case_catalog()) {
        BranchingVector tau_vector = entry.vector.to_tau_units();
        json item;
        item["case"] = entry.case_id;
        item["description"] = entry.description;
        item["printed_units"] = to_string(entry.vector.units);
        item["printed_vector"] = entry.vector.components;
        item["vector"] = tau_vector.components;
        item["number"] = branching_number(tau_vector);
        item["subgraphs"] = entry.subgraph_classes;
        catalog.push_back(std::move(item));
    }
    InterleaveResult ir = interleave_base(kWorstBranchingNumber, kKernelGrowth);
    doc["answer"] = "OK";
    doc["catalog"] = std::move(catalog);
    doc["interleave"] = {{"base", kWorstBranchingNumber},
                         {"kernel_growth", kKernelGrowth},
                         {"alpha", ir.alpha},
                         {"effective_base", ir.effective_base}};
    return doc;
}

Graph generate(const RunConfig& config) {
    gen::Rng rng(config.seed);
    if (config.model == "cubic") return gen::cubic(config.n, rng);
    if (config.model == "maxdeg3")
        return config.edges ? gen::bounded_degree(config.n, 3, *config.edges, rng) : gen::maxdeg3(config.n, rng);
    if (config.model == "tree") return gen::tree(config.n, rng);
    if (config.model == "cycle") return gen::cycle(config.n);
    throw UsageError("unknown model '" + config.model + "' (expected cubic|maxdeg3|tree|cycle)");
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        json doc;
        switch (config.command) {
            case Command::Solve: doc = cmd_solve(config, in); break;
            case Command::Minimize: doc = cmd_minimize(config, in); break;
            case Command::Oracle: doc = cmd_oracle(config, in); break;
            case Command::Verify: doc = cmd_verify(config, in); break;
            case Command::Tau: doc = cmd_tau(config, in); break;
            case Command::Kernelize: doc = cmd_kernelize(config, in); break;
            case Command::Analyze: doc = cmd_analyze(); break;
            case Command::Gen: {
                std::string dimacs = write_dimacs(generate(config));
                if (config.output_path.empty()) {
                    out << dimacs;
                    return kOk;
                }
                std::ofstream file(config.output_path, std::ios::binary);
                if (!file) throw UsageError("cannot write " + config.output_path);
                file << dimacs;
                doc = base_document(config.command);
                doc["answer"] = "OK";
                doc["model"] = config.model;
                doc["n"] = config.n;
                doc["seed"] = config.seed;
                doc["output"] = config.output_path;
                break;
            }
        }
        out << doc.dump(2) << '\n';
        return kOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << '\n';
        return kUsage;
    } catch (const ContractViolation& e) {
        err << "usage: " << e.what() << '\n';
        return kUsage;
    } catch (const std::runtime_error& e) {
        // Unreadable input files land here.
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace rcvc::cli
