#include "annirec/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace annirec {
namespace oracle {

namespace {

void enforce_limit(const Graph& g, int limit, const char* what) {
    // 32 is the hard mask width; OracleLimits may only tighten it.
    if (g.vertex_count() > limit || g.vertex_count() > 32)
        throw resource_limit_error(std::string(what) + " oracle limited to " +
                                   std::to_string(std::min(limit, 32)) + " vertices, got " +
                                   std::to_string(g.vertex_count()));
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> masks(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbors(v)) masks[static_cast<std::size_t>(v)] |= 1u << w;
    return masks;
}

// Branch on the max-degree candidate: either exclude it or take it and
// drop its closed neighborhood. Degree <= 1 candidates are always taken.
class AlphaSearch {
public:
    explicit AlphaSearch(const Graph& g) : adj_(adjacency_masks(g)) {}

    int run(std::uint32_t candidates, std::vector<int>* witness) {
        best_ = 0;
        best_set_ = 0;
        explore(candidates, 0, 0);
        if (witness) {
            witness->clear();
            for (int v = 0; v < static_cast<int>(adj_.size()); ++v)
                if (best_set_ & (1u << v)) witness->push_back(v);
        }
        return best_;
    }

private:
    void explore(std::uint32_t candidates, int chosen_count, std::uint32_t chosen) {
        if (chosen_count + std::popcount(candidates) <= best_) return;  // bound
        if (candidates == 0) {
            best_ = chosen_count;
            best_set_ = chosen;
            return;
        }
        int v = -1, v_deg = -1;
        for (std::uint32_t rest = candidates; rest != 0; rest &= rest - 1) {
            int u = std::countr_zero(rest);
            int deg = std::popcount(adj_[static_cast<std::size_t>(u)] & candidates);
            if (deg > v_deg) {
                v = u;
                v_deg = deg;
            }
        }
        std::uint32_t take = candidates & ~(adj_[static_cast<std::size_t>(v)] | (1u << v));
        if (v_deg <= 1) {  // taking a degree-<=1 vertex is never wrong
            explore(take, chosen_count + 1, chosen | (1u << v));
            return;
        }
        explore(take, chosen_count + 1, chosen | (1u << v));
        explore(candidates & ~(1u << v), chosen_count, chosen);
    }

    std::vector<std::uint32_t> adj_;
    int best_ = 0;
    std::uint32_t best_set_ = 0;
};

// Smallest free vertex is either left unmatched or matched to each free
// neighbor in turn.
class MuSearch {
public:
    explicit MuSearch(const Graph& g) : g_(g), free_(static_cast<std::size_t>(g.vertex_count()), 1) {}

    int run() {
        best_ = 0;
        explore(0, 0);
        return best_;
    }

private:
    void explore(int from, int size) {
        if (size > best_) best_ = size;
        int v = from;
        while (v < g_.vertex_count() && !free_[static_cast<std::size_t>(v)]) ++v;
        if (v >= g_.vertex_count()) return;
        // Vertices from v onward contribute at most one pair each two.
        if (size + (g_.vertex_count() - v) / 2 <= best_) return;
        free_[static_cast<std::size_t>(v)] = 0;
        for (int w : g_.neighbors(v)) {
            if (!free_[static_cast<std::size_t>(w)]) continue;
            free_[static_cast<std::size_t>(w)] = 0;
            explore(v + 1, size + 1);
            free_[static_cast<std::size_t>(w)] = 1;
        }
        explore(v + 1, size);  // leave v unmatched
        free_[static_cast<std::size_t>(v)] = 1;
    }

    const Graph& g_;
    std::vector<char> free_;
    int best_ = 0;
};

}  // namespace

int brute_alpha(const Graph& g, const OracleLimits& limits) {
    enforce_limit(g, limits.max_vertices_alpha, "independence");
    if (g.vertex_count() == 0) return 0;
    std::uint32_t all = g.vertex_count() == 32 ? ~0u : (1u << g.vertex_count()) - 1;
    return AlphaSearch(g).run(all, nullptr);
}

std::vector<int> brute_alpha_set(const Graph& g, const OracleLimits& limits) {
    enforce_limit(g, limits.max_vertices_alpha, "independence");
    std::vector<int> witness;
    if (g.vertex_count() == 0) return witness;
    std::uint32_t all = g.vertex_count() == 32 ? ~0u : (1u << g.vertex_count()) - 1;
    AlphaSearch(g).run(all, &witness);
    return witness;
}

int brute_tau(const Graph& g, const OracleLimits& limits) {
    enforce_limit(g, limits.max_vertices_alpha, "vertex cover");
    return g.vertex_count() - brute_alpha(g, limits);
}

int brute_mu(const Graph& g, const OracleLimits& limits) {
    enforce_limit(g, limits.max_vertices_mu, "matching");
    return MuSearch(g).run();
}

}  // namespace oracle
}  // namespace annirec
