#include "annirec/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace annirec {

namespace {

struct PendingEdge {
    int u, v, line;
};

bool parse_int(const std::string& token, long long& out) {
    if (token.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(token, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == token.size();
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) tokens.push_back(tok);
    return tokens;
}

int checked_vertex(long long raw, long long lo, long long hi, int line, const char* what) {
    if (raw < lo || raw > hi)
        throw parse_error(std::string(what) + " " + std::to_string(raw) + " outside declared range [" +
                              std::to_string(lo) + ", " + std::to_string(hi) + "]",
                          line);
    return static_cast<int>(raw);
}

Graph parse_dimacs(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1;
    std::vector<PendingEdge> pending;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "c") continue;
        if (tokens[0] == "p") {
            if (n >= 0) throw parse_error("duplicate problem line", line_no);
            long long m_declared = 0;
            if (tokens.size() != 4 || tokens[1] != "edge" || !parse_int(tokens[2], n) ||
                !parse_int(tokens[3], m_declared))
                throw parse_error("expected \"p edge <n> <m>\"", line_no);
            if (n <= 0) throw parse_error("graph must have at least one vertex", line_no);
            continue;
        }
        if (tokens[0] == "e") {
            if (n < 0) throw parse_error("edge before problem line", line_no);
            long long u = 0, v = 0;
            if (tokens.size() != 3 || !parse_int(tokens[1], u) || !parse_int(tokens[2], v))
                throw parse_error("expected \"e <u> <v>\"", line_no);
            if (u == v) throw parse_error("self-loop at vertex " + std::to_string(u), line_no);
            // DIMACS is 1-based externally; internal ids are 0-based.
            pending.push_back({checked_vertex(u, 1, n, line_no, "vertex") - 1,
                               checked_vertex(v, 1, n, line_no, "vertex") - 1, line_no});
            continue;
        }
        throw parse_error("unrecognized line type \"" + tokens[0] + "\"", line_no);
    }
    if (n < 0) throw parse_error("missing problem line", line_no == 0 ? 1 : line_no);
    Graph g(static_cast<int>(n));
    for (const auto& e : pending) g.add_edge(e.u, e.v);
    return g;
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long declared_n = -1;
    long long max_seen = -1;
    std::vector<PendingEdge> pending;
    bool first_content_line = true;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (first_content_line && tokens[0] == "n") {
            if (tokens.size() != 2 || !parse_int(tokens[1], declared_n))
                throw parse_error("expected \"n <count>\"", line_no);
            if (declared_n <= 0) throw parse_error("graph must have at least one vertex", line_no);
            first_content_line = false;
            continue;
        }
        first_content_line = false;
        long long u = 0, v = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v))
            throw parse_error("expected \"u v\"", line_no);
        if (u == v) throw parse_error("self-loop at vertex " + std::to_string(u), line_no);
        long long hi = declared_n >= 0 ? declared_n - 1 : std::numeric_limits<int>::max() - 1;
        PendingEdge e{checked_vertex(u, 0, hi, line_no, "vertex"),
                      checked_vertex(v, 0, hi, line_no, "vertex"), line_no};
        max_seen = std::max({max_seen, u, v});
        pending.push_back(e);
    }
    long long n = declared_n >= 0 ? declared_n : max_seen + 1;
    if (n <= 0) throw parse_error("input declares no vertices", line_no == 0 ? 1 : line_no);
    Graph g(static_cast<int>(n));
    for (const auto& e : pending) g.add_edge(e.u, e.v);
    return g;
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
    return format == GraphFormat::dimacs ? parse_dimacs(in) : parse_edge_list(in);
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    std::istringstream iss(text);
    return parse_graph(iss, format);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph generate_random_graph(int n, double edge_probability, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    Graph g(n);
    std::mt19937_64 rng(seed);
    // Uniform double in [0, 1) from the top 53 bits; kept explicit so the
    // stream is identical across standard library implementations.
    constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<double>(rng() >> 11) * kScale < edge_probability) g.add_edge(u, v);
    return g;
}

}  // namespace annirec
