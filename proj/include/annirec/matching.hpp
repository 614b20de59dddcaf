#pragma once

#include <utility>
#include <vector>

#include "annirec/graph.hpp"

namespace annirec {

// Set of pairwise-disjoint edges with O(1) saturation lookup.
class Matching {
public:
    Matching() = default;
    explicit Matching(int n) : mate_(static_cast<std::size_t>(n), -1) {}

    int host_vertex_count() const noexcept { return static_cast<int>(mate_.size()); }
    int size() const noexcept { return size_; }

    // Partner of v, or -1 when v is unsaturated.
    int mate(int v) const { return mate_.at(static_cast<std::size_t>(v)); }
    bool saturates(int v) const { return mate(v) != -1; }

    // Adds {u,v}; throws std::invalid_argument if either endpoint is
    // already saturated or u == v.
    void add(int u, int v);

    // Matched edges as (u,v) with u < v, sorted by u.
    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<int> mate_;
    int size_ = 0;
};

// Maximum-cardinality matching via blossom-contracting augmenting-path
// search. Vertices and neighbors are scanned in ascending id, so the
// result is a pure function of the graph.
Matching maximum_matching(const Graph& g);

// Augments a valid seed matching of g to maximum cardinality with the
// same deterministic search. maximum_matching(g) equals
// complete_matching(g, greedy seed).
Matching complete_matching(const Graph& g, Matching seed);

// |maximum_matching(g)|.
int matching_number(const Graph& g);

// Vertices with no mate, ascending. Throws std::invalid_argument if m
// is not a matching of g.
std::vector<int> unsaturated_vertices(const Graph& g, const Matching& m);

}  // namespace annirec
