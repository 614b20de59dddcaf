#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace annirec {

// Input could not be parsed; line numbers are 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, int line);
    int line() const noexcept { return line_; }

private:
    int line_;
};

// An internal invariant was violated. Always a bug, never bad input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A configured resource limit stopped the computation.
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Finite simple undirected graph on vertices 0..n-1.
// Neighbor lists are kept sorted ascending; self-loops and parallel
// edges are rejected at insertion. Queries are read-only and safe to
// call concurrently once the graph is built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
    std::int64_t edge_count() const noexcept { return m_; }

    // Inserts the edge {u,v}; duplicates are collapsed silently.
    // Throws std::invalid_argument on self-loops, std::out_of_range on
    // bad endpoints.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;

    // All edges as (u,v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const;

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    std::int64_t m_ = 0;
};

// Non-decreasing degree sequence with 64-bit prefix sums,
// prefix_sums[i] = degrees[0] + ... + degrees[i-1], prefix_sums[n] = 2m.
struct DegreeSequence {
    std::vector<int> degrees;
    std::vector<std::int64_t> prefix_sums;
};

DegreeSequence degree_sequence(const Graph& g);

// Annihilation number a = max{ a in 1..n : d_1 + ... + d_a <= m } plus
// the derived integer 2k = 2a - n + 1 (k = a - (n-1)/2, which may be a
// half-integer; 2k never is).
struct AnnihilationSummary {
    int n = 0;
    std::int64_t m = 0;
    int a = 0;
    int two_k = 0;
};

// Throws std::invalid_argument for the empty graph (n = 0).
AnnihilationSummary annihilation_number(const Graph& g);

// Result of deleting one vertex: the smaller graph plus the label maps
// between old and new vertex ids.
struct VertexDeletion {
    Graph graph;                  // n-1 vertices
    int deleted = -1;             // r, in old labels
    std::vector<int> old_to_new;  // size n, -1 at the deleted vertex

    int to_old(int new_vertex) const {
        return new_vertex < deleted ? new_vertex : new_vertex + 1;
    }
};

VertexDeletion delete_vertex(const Graph& g, int r);

// True iff no edge of g has both endpoints in s. Throws
// std::out_of_range if s contains a vertex outside g.
bool verify_independent_set(const Graph& g, const std::vector<int>& s);

enum class GraphFormat { dimacs, edge_list };

// Parses either DIMACS edge format ("p edge <n> <m>", "e <u> <v>",
// 1-based) or a plain edge list ("u v" per line, 0-based, optional
// leading "n <count>" line). Duplicate edges collapse; self-loops and
// n = 0 inputs are rejected.
Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph(const std::string& text, GraphFormat format);

// Edge-list serialization: "n <count>" followed by one sorted "u v"
// line per edge. parse_graph(serialize_edge_list(g)) == g.
std::string serialize_edge_list(const Graph& g);

// Erdos-Renyi G(n, p) sample. The same (n, p, seed) yields the same
// graph on every platform (mt19937_64 stream, fixed pair order).
Graph generate_random_graph(int n, double edge_probability, std::uint64_t seed);

}  // namespace annirec
