#include "rcvc/dimacs.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "rcvc/errors.hpp"

namespace rcvc {

namespace {

constexpr std::size_t kMaxVertices = std::size_t{1} << 30;

std::vector<std::string_view> split_spaces(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

std::size_t parse_number(std::string_view token, std::size_t line_no, const char* what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line_no, std::string("expected a non-negative integer for ") + what + ", got '" +
                                      std::string(token) + "'");
    return value;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        f(++line_no, line);
        pos = end + 1;
    }
}

}  // namespace

DimacsGraph parse_dimacs(std::string_view text) {
    DimacsGraph out;
    bool have_header = false;
    std::size_t header_line = 0;
    std::size_t last_line = 0;
    std::size_t edge_lines = 0;
    std::vector<Edge> edges;

    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        last_line = line_no;
        auto tokens = split_spaces(line);
        if (tokens.empty() || tokens[0] == "c") return;
        if (tokens[0] == "p") {
            if (have_header) throw ParseError(line_no, "duplicate 'p' header");
            if (tokens.size() != 4 || tokens[1] != "edge") throw ParseError(line_no, "header must be 'p edge N M'");
            out.declared_vertices = parse_number(tokens[2], line_no, "N");
            out.declared_edges = parse_number(tokens[3], line_no, "M");
            if (out.declared_vertices > kMaxVertices)
                throw ParseError(line_no, "at most " + std::to_string(kMaxVertices) + " vertices are supported");
            have_header = true;
            header_line = line_no;
            return;
        }
        if (tokens[0] == "e") {
            if (!have_header) throw ParseError(line_no, "edge line before the 'p' header");
            if (tokens.size() != 3) throw ParseError(line_no, "edge line must be 'e u v'");
            std::size_t u = parse_number(tokens[1], line_no, "u");
            std::size_t v = parse_number(tokens[2], line_no, "v");
            for (std::size_t x : {u, v})
                if (x < 1 || x > out.declared_vertices)
                    throw ParseError(line_no, "vertex " + std::to_string(x) + " outside 1.." +
                                                  std::to_string(out.declared_vertices));
            if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
            edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
            ++edge_lines;
            return;
        }
        throw ParseError(line_no, "unknown line type '" + std::string(tokens[0]) + "'");
    });

    if (!have_header) throw ParseError(std::max<std::size_t>(1, last_line), "missing 'p edge N M' header");
    if (edge_lines != out.declared_edges)
        throw ParseError(header_line, "header declares " + std::to_string(out.declared_edges) + " edges, found " +
                                std::to_string(edge_lines));

    std::vector<VertexId> all(out.declared_vertices);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<VertexId>(i + 1);
    out.graph = Graph::from_edges(edges, all);
    out.duplicate_edges = edges.size() - out.graph.num_edges();
    return out;
}

std::string write_dimacs(const Graph& g) {
    const VertexSet ids = g.vertices();
    auto label = [&](VertexId v) { return std::lower_bound(ids.begin(), ids.end(), v) - ids.begin() + 1; };
    std::ostringstream os;
    os << "p edge " << ids.size() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) os << "e " << label(e.u) << ' ' << label(e.v) << '\n';
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

VertexSet parse_cover(std::string_view text) {
    VertexSet out;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        auto tokens = split_spaces(line);
        if (tokens.empty()) return;
        if (tokens.size() != 1) throw ParseError(line_no, "cover lines hold exactly one vertex id");
        std::size_t v = parse_number(tokens[0], line_no, "vertex id");
        if (v < 1 || v > kMaxVertices) throw ParseError(line_no, "vertex id out of range");
        out.push_back(static_cast<VertexId>(v));
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string write_cover(const VertexSet& cover) {
    std::string out;
    for (VertexId v : cover) out += std::to_string(v) + '\n';
    return out;
}

}  // namespace rcvc
