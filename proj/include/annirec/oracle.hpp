#pragma once

#include <vector>

#include "annirec/graph.hpp"

namespace annirec {
namespace oracle {

// Hard size gates, enforced before any exponential enumeration starts.
struct OracleLimits {
    int max_vertices_alpha = 24;
    int max_vertices_mu = 14;
};

// Exact independence number by branch and bound over vertex masks.
// Throws resource_limit_error above the size gate.
int brute_alpha(const Graph& g, const OracleLimits& limits = {});

// One maximum independent set, deterministic for a fixed graph.
std::vector<int> brute_alpha_set(const Graph& g, const OracleLimits& limits = {});

// Vertex cover number, n - brute_alpha(g).
int brute_tau(const Graph& g, const OracleLimits& limits = {});

// Exact matching number by exhaustive first-free-vertex search.
int brute_mu(const Graph& g, const OracleLimits& limits = {});

}  // namespace oracle
}  // namespace annirec
