#pragma once

#include "annirec/graph.hpp"

// Named small graphs used as fixed points across the test suites.
namespace fixtures {

inline annirec::Graph empty_graph(int n) { return annirec::Graph(n); }

inline annirec::Graph path_graph(int n) {
    annirec::Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline annirec::Graph cycle_graph(int n) {
    annirec::Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

inline annirec::Graph complete_graph(int n) {
    annirec::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline annirec::Graph star_graph(int leaves) {
    annirec::Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

inline annirec::Graph complete_bipartite(int a, int b) {
    annirec::Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

// Outer 5-cycle 0..4, spokes to 5..9, inner pentagram.
inline annirec::Graph petersen_graph() {
    annirec::Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

}  // namespace fixtures
