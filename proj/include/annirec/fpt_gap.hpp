#pragma once

#include <cstdint>

#include "annirec/graph.hpp"

namespace annirec {

// Outcome of the relaxed question alpha(G) >= a(G) - ell, together with
// the parameters that justified it. p = n - a + ell - mu measures the
// vertex-cover target's excess over the matching lower bound; whenever
// it leaves [0, 3*ell + 1] the answer is no without any search.
struct GapDecision {
    bool answer = false;
    int a = 0;
    int mu = 0;
    int p = 0;
    bool cutoff_applied = false;
};

// Knobs for the bounded-search-tree vertex cover decision. node_limit
// caps branch expansions; 0 means unlimited, exceeding a nonzero limit
// throws resource_limit_error.
struct VertexCoverOptions {
    std::uint64_t node_limit = 0;
};

// True iff g has a vertex cover of at most t vertices. Exact decision
// by branching on a max-degree vertex after degree-0/1 elimination and
// forced high-degree picks; residual degree-2 components are closed
// form. Throws std::invalid_argument for t < 0.
bool vertex_cover_at_most(const Graph& g, int t, const VertexCoverOptions& options = {});

// Decides alpha(G) >= a(G) - ell through tau(G) <= n - a + ell.
GapDecision decide_gap(const Graph& g, int ell, const VertexCoverOptions& options = {});

}  // namespace annirec
