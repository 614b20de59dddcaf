#include "annirec/graph.hpp"

#include <algorithm>
#include <cassert>

namespace annirec {

parse_error::parse_error(const std::string& message, int line)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    adj_.resize(static_cast<std::size_t>(n));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(vertex_count()) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    auto& nu = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return;  // duplicate, collapse
    nu.insert(it, v);
    auto& nv = adj_[static_cast<std::size_t>(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& shorter = degree(u) <= degree(v) ? adj_[static_cast<std::size_t>(u)]
                                                 : adj_[static_cast<std::size_t>(v)];
    int target = degree(u) <= degree(v) ? v : u;
    return std::binary_search(shorter.begin(), shorter.end(), target);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) result.emplace_back(u, v);
    return result;
}

bool Graph::operator==(const Graph& other) const {
    return adj_ == other.adj_;
}

DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence seq;
    int n = g.vertex_count();
    seq.degrees.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) seq.degrees.push_back(g.degree(v));
    std::sort(seq.degrees.begin(), seq.degrees.end());
    seq.prefix_sums.resize(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i)
        seq.prefix_sums[static_cast<std::size_t>(i) + 1] =
            seq.prefix_sums[static_cast<std::size_t>(i)] + seq.degrees[static_cast<std::size_t>(i)];
    return seq;
}

AnnihilationSummary annihilation_number(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("annihilation number undefined for the empty graph");
    DegreeSequence seq = degree_sequence(g);
    std::int64_t m = g.edge_count();
    assert(seq.prefix_sums[static_cast<std::size_t>(n)] == 2 * m);

    int a = 0;
    for (int i = 1; i <= n; ++i) {
        if (seq.prefix_sums[static_cast<std::size_t>(i)] <= m) a = i;
        else break;
    }
    if (a == 0) throw internal_error("no admissible annihilation prefix; degree data corrupt");

    AnnihilationSummary summary;
    summary.n = n;
    summary.m = m;
    summary.a = a;
    summary.two_k = 2 * a - n + 1;
    assert(m == 0 ? a == n : (a <= n - 1 && summary.two_k >= 0));
    return summary;
}

VertexDeletion delete_vertex(const Graph& g, int r) {
    int n = g.vertex_count();
    if (r < 0 || r >= n)
        throw std::out_of_range("cannot delete vertex " + std::to_string(r) + " from graph on " +
                                std::to_string(n) + " vertices");
    VertexDeletion result;
    result.deleted = r;
    result.old_to_new.assign(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v)
        if (v != r) result.old_to_new[static_cast<std::size_t>(v)] = v < r ? v : v - 1;
    result.graph = Graph(n - 1);
    for (int u = 0; u < n; ++u) {
        if (u == r) continue;
        for (int v : g.neighbors(u)) {
            if (v == r || v < u) continue;
            result.graph.add_edge(result.old_to_new[static_cast<std::size_t>(u)],
                                  result.old_to_new[static_cast<std::size_t>(v)]);
        }
    }
    return result;
}

bool verify_independent_set(const Graph& g, const std::vector<int>& s) {
    std::vector<char> member(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count())
            throw std::out_of_range("set vertex " + std::to_string(v) + " outside graph");
        member[static_cast<std::size_t>(v)] = 1;
    }
    for (int v : s)
        for (int w : g.neighbors(v))
            if (member[static_cast<std::size_t>(w)]) return false;
    return true;
}

}  // namespace annirec
