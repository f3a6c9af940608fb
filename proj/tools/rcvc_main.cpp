#include <iostream>

#include <CLI11.hpp>

#include "rcvc/cli.hpp"

using rcvc::cli::Command;
using rcvc::cli::RunConfig;

namespace {

void add_graph_input(CLI::App* sub, RunConfig& config) {
    sub->add_option("input,--input", config.input_path, "DIMACS graph file ('-' for stdin)");
}

void add_search_flags(CLI::App* sub, RunConfig& config) {
    sub->add_flag("--struction,!--no-struction", config.struction, "enable the struction reduction");
    sub->add_option("--lp-bound", config.lp_bound, "LP lower-bound pruning (true/false)");
    sub->add_option("--interleave-depth", config.interleave_depth, "re-kernelize every d levels, 0 = root only")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--node-budget", config.node_budget, "abort after this many search nodes")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", config.threads, "worker threads for the top branching levels")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact vertex cover by real-cycle-driven branch and reduce"};
    app.require_subcommand(1);
    RunConfig config;

    auto* solve = app.add_subcommand("solve", "decide whether a cover of size <= k exists");
    add_graph_input(solve, config);
    solve->add_option("--k", config.k, "cover budget")->required();
    add_search_flags(solve, config);

    auto* minimize = app.add_subcommand("minimize", "minimum vertex cover");
    add_graph_input(minimize, config);
    add_search_flags(minimize, config);

    auto* kernelize = app.add_subcommand("kernelize", "Nemhauser-Trotter kernel");
    add_graph_input(kernelize, config);
    kernelize->add_option("--k", config.k, "cover budget")->required();

    auto* tau = app.add_subcommand("tau", "real-cycle number, extra-degree and circuit rank");
    add_graph_input(tau, config);

    app.add_subcommand("analyze", "branching numbers of the case catalog");

    auto* gen = app.add_subcommand("gen", "random instance as DIMACS");
    gen->add_option("--model", config.model, "cubic|maxdeg3|tree|cycle")
        ->check(CLI::IsMember({"cubic", "maxdeg3", "tree", "cycle"}));
    gen->add_option("--n", config.n, "number of vertices")->required();
    gen->add_option("--seed", config.seed, "64-bit seed");
    gen->add_option("--edges", config.edges, "target edge count (maxdeg3 only)");
    gen->add_option("--out", config.output_path, "write DIMACS here and a JSON summary to stdout");

    auto* verify = app.add_subcommand("verify", "check a cover file against a graph");
    add_graph_input(verify, config);
    verify->add_option("--cover", config.cover_path, "one 1-based vertex id per line")->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force minimum cover (n <= 26)");
    add_graph_input(oracle, config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return rcvc::cli::kUsage;
    }

    const std::pair<CLI::App*, Command> table[] = {
        {solve, Command::Solve},   {minimize, Command::Minimize}, {kernelize, Command::Kernelize},
        {tau, Command::Tau},       {gen, Command::Gen},           {verify, Command::Verify},
        {oracle, Command::Oracle},
    };
    config.command = Command::Analyze;
    for (const auto& [sub, command] : table)
        if (sub->parsed()) config.command = command;

    return rcvc::cli::run(config, std::cin, std::cout, std::cerr);
}
