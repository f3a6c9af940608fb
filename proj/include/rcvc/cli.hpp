#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace rcvc::cli {

enum class Command { Solve, Minimize, Kernelize, Tau, Analyze, Gen, Verify, Oracle };

const char* to_string(Command command);

enum ExitCode : int { kOk = 0, kUsage = 2, kParse = 3, kResource = 4 };

struct RunConfig {
    Command command = Command::Minimize;
    std::string input_path = "-";  // "-" reads standard input
    std::optional<long long> k;

    bool struction = false;
    std::optional<bool> lp_bound;  // default: on for minimize, off for solve
    std::size_t interleave_depth = 8;
    std::uint64_t node_budget = 100'000'000;
    std::uint64_t seed = 1;
    unsigned threads = 1;

    // gen
    std::string model = "cubic";
    std::size_t n = 0;
    std::optional<std::size_t> edges;
    std::string output_path;  // empty: DIMACS goes to standard output

    // verify
    std::string cover_path;
};

/// Executes one command. Results go to `out` as a single JSON document
/// (except `gen` without an output path, which writes DIMACS); diagnostics go
/// to `err`. Returns the process exit code.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rcvc::cli
