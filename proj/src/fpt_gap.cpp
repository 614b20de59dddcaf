#include "annirec/fpt_gap.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

#include "annirec/matching.hpp"

namespace annirec {

namespace {

// Decision search over a lazily shrinking copy of the graph. Vertices
// taken into the cover or isolated are flagged removed; degrees are
// kept current so reductions stay O(deg) per step.
class CoverSearch {
public:
    CoverSearch(const Graph& g, std::uint64_t node_limit)
        : g_(g),
          node_limit_(node_limit),
          removed_(static_cast<std::size_t>(g.vertex_count()), 0),
          degree_(static_cast<std::size_t>(g.vertex_count())) {
        for (int v = 0; v < g.vertex_count(); ++v)
            degree_[static_cast<std::size_t>(v)] = g.degree(v);
    }

    bool covered_within(int budget) { return search(budget); }

private:
    // Removes v from the residual graph, recording it for rollback.
    void remove(int v, std::vector<int>& trail) {
        removed_[static_cast<std::size_t>(v)] = 1;
        for (int w : g_.neighbors(v))
            if (!removed_[static_cast<std::size_t>(w)]) --degree_[static_cast<std::size_t>(w)];
        trail.push_back(v);
    }

    void rollback(std::vector<int>& trail, std::size_t mark) {
        while (trail.size() > mark) {
            int v = trail.back();
            trail.pop_back();
            removed_[static_cast<std::size_t>(v)] = 0;
            for (int w : g_.neighbors(v))
                if (!removed_[static_cast<std::size_t>(w)]) ++degree_[static_cast<std::size_t>(w)];
        }
    }

    int alive_neighbor(int v) const {
        for (int w : g_.neighbors(v))
            if (!removed_[static_cast<std::size_t>(w)]) return w;
        return -1;
    }

    // Size of a greedily built maximal matching on the residual graph;
    // a lower bound on its vertex cover number.
    int matching_lower_bound() const {
        std::vector<char> used(removed_);
        int size = 0;
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            for (int w : g_.neighbors(v)) {
                if (w > v && !used[static_cast<std::size_t>(w)]) {
                    used[static_cast<std::size_t>(v)] = 1;
                    used[static_cast<std::size_t>(w)] = 1;
                    ++size;
                    break;
                }
            }
        }
        return size;
    }

    // Residual cover number once every degree is exactly 2: disjoint
    // cycles, ceil(len / 2) each.
    int cycle_cover_cost() const {
        std::vector<char> seen(removed_);
        int total = 0;
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (seen[static_cast<std::size_t>(v)] || degree_[static_cast<std::size_t>(v)] == 0)
                continue;
            int length = 0;
            int prev = -1, cur = v;
            do {
                seen[static_cast<std::size_t>(cur)] = 1;
                ++length;
                int next = -1;
                for (int w : g_.neighbors(cur)) {
                    if (removed_[static_cast<std::size_t>(w)] || w == prev) continue;
                    next = w;
                    break;
                }
                prev = cur;
                cur = next;
            } while (cur != -1 && cur != v);
            total += (length + 1) / 2;
        }
        return total;
    }

    bool search(int budget) {
        if (node_limit_ != 0 && ++nodes_ > node_limit_)
            throw resource_limit_error("vertex cover search exceeded " +
                                       std::to_string(node_limit_) + " nodes");

        std::vector<int> trail;
        int remaining = budget;

        // Reductions: a vertex of degree > budget is forced into the
        // cover; a degree-1 vertex is dominated by its neighbor.
        bool changed = true;
        while (changed && remaining >= 0) {
            changed = false;
            for (int v = 0; v < g_.vertex_count(); ++v) {
                if (removed_[static_cast<std::size_t>(v)]) continue;
                int d = degree_[static_cast<std::size_t>(v)];
                if (d > remaining) {
                    remove(v, trail);
                    --remaining;
                    changed = true;
                    break;
                }
                if (d == 1) {
                    remove(alive_neighbor(v), trail);
                    --remaining;
                    changed = true;
                    break;
                }
            }
        }

        bool result;
        if (remaining < 0) {
            result = false;
        } else {
            int max_degree = 0, branch_vertex = -1;
            std::int64_t residual_edges = 0;
            for (int v = 0; v < g_.vertex_count(); ++v) {
                if (removed_[static_cast<std::size_t>(v)]) continue;
                int d = degree_[static_cast<std::size_t>(v)];
                residual_edges += d;
                if (d > max_degree) {
                    max_degree = d;
                    branch_vertex = v;
                }
            }
            residual_edges /= 2;

            if (residual_edges == 0) {
                result = true;
            } else if (remaining == 0 ||
                       residual_edges > static_cast<std::int64_t>(remaining) * max_degree ||
                       matching_lower_bound() > remaining) {
                result = false;
            } else if (max_degree == 2) {
                result = cycle_cover_cost() <= remaining;
            } else {
                // Either the branch vertex or its whole neighborhood is
                // in every cover.
                std::size_t mark = trail.size();
                remove(branch_vertex, trail);
                result = search(remaining - 1);
                rollback(trail, mark);
                if (!result) {
                    int taken = 0;
                    for (int w : g_.neighbors(branch_vertex)) {
                        if (removed_[static_cast<std::size_t>(w)]) continue;
                        remove(w, trail);
                        ++taken;
                    }
                    remove(branch_vertex, trail);  // now isolated
                    result = search(remaining - taken);
                }
            }
        }

        rollback(trail, 0);
        return result;
    }

    const Graph& g_;
    std::uint64_t node_limit_;
    std::uint64_t nodes_ = 0;
    std::vector<char> removed_;
    std::vector<int> degree_;
};

}  // namespace

bool vertex_cover_at_most(const Graph& g, int t, const VertexCoverOptions& options) {
    if (t < 0) throw std::invalid_argument("cover budget must be non-negative");
    if (t >= g.vertex_count()) return true;
    return CoverSearch(g, options.node_limit).covered_within(t);
}

GapDecision decide_gap(const Graph& g, int ell, const VertexCoverOptions& options) {
    if (g.vertex_count() == 0) throw std::invalid_argument("gap decision needs at least one vertex");
    if (ell < 0) throw std::invalid_argument("ell must be non-negative");

    AnnihilationSummary summary = annihilation_number(g);
    GapDecision decision;
    decision.a = summary.a;
    decision.mu = matching_number(g);
    decision.p = summary.n - summary.a + ell - decision.mu;

    if (decision.p < 0) {
        // Target cover size sits below the matching lower bound tau >= mu.
        decision.answer = false;
        decision.cutoff_applied = true;
        return decision;
    }
    if (decision.p > 3 * ell + 1) {
        decision.answer = false;
        decision.cutoff_applied = true;
        return decision;
    }

    int target = summary.n - summary.a + ell;
    assert(target == decision.mu + decision.p);
    decision.answer = vertex_cover_at_most(g, target, options);
    return decision;
}

}  // namespace annirec
