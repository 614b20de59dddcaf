#include "annirec/matching.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace annirec {

void Matching::add(int u, int v) {
    if (u == v) throw std::invalid_argument("matching edge cannot be a loop");
    if (u < 0 || v < 0 || u >= host_vertex_count() || v >= host_vertex_count())
        throw std::invalid_argument("matching edge endpoint out of range");
    if (mate_[static_cast<std::size_t>(u)] != -1 || mate_[static_cast<std::size_t>(v)] != -1)
        throw std::invalid_argument("matching edges must be pairwise disjoint");
    mate_[static_cast<std::size_t>(u)] = v;
    mate_[static_cast<std::size_t>(v)] = u;
    ++size_;
}

std::vector<std::pair<int, int>> Matching::edges() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(static_cast<std::size_t>(size_));
    for (int v = 0; v < host_vertex_count(); ++v) {
        int w = mate_[static_cast<std::size_t>(v)];
        if (w > v) result.emplace_back(v, w);
    }
    return result;
}

namespace {

// Edmonds' blossom algorithm, array-based. One BFS per unsaturated
// root; odd cycles are contracted by rebasing every cycle vertex onto
// the common ancestor. O(n) per contraction, O(n^3) overall.
class BlossomSearch {
public:
    explicit BlossomSearch(const Graph& g, std::vector<int>& mate)
        : g_(g),
          mate_(mate),
          n_(g.vertex_count()),
          parent_(static_cast<std::size_t>(n_)),
          base_(static_cast<std::size_t>(n_)),
          queued_(static_cast<std::size_t>(n_)),
          on_ancestor_path_(static_cast<std::size_t>(n_)),
          in_blossom_(static_cast<std::size_t>(n_)) {}

    // Looks for an augmenting path from root; flips it when found.
    bool augment_from(int root) {
        std::fill(parent_.begin(), parent_.end(), -1);
        std::fill(queued_.begin(), queued_.end(), 0);
        std::iota(base_.begin(), base_.end(), 0);
        queue_.clear();
        push(root);

        for (std::size_t head = 0; head < queue_.size(); ++head) {
            int v = queue_[head];
            for (int to : g_.neighbors(v)) {
                if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
                    mate_[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (mate_[static_cast<std::size_t>(to)] != -1 &&
                     parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(to)])] != -1)) {
                    contract_blossom(v, to);
                } else if (parent_[static_cast<std::size_t>(to)] == -1) {
                    parent_[static_cast<std::size_t>(to)] = v;
                    int next = mate_[static_cast<std::size_t>(to)];
                    if (next == -1) {
                        flip_path(to);
                        return true;
                    }
                    push(next);
                }
            }
        }
        return false;
    }

private:
    void push(int v) {
        if (!queued_[static_cast<std::size_t>(v)]) {
            queued_[static_cast<std::size_t>(v)] = 1;
            queue_.push_back(v);
        }
    }

    int lowest_common_base(int a, int b) {
        std::fill(on_ancestor_path_.begin(), on_ancestor_path_.end(), 0);
        int v = a;
        while (true) {
            v = base_[static_cast<std::size_t>(v)];
            on_ancestor_path_[static_cast<std::size_t>(v)] = 1;
            if (mate_[static_cast<std::size_t>(v)] == -1) break;  // reached the root
            v = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(v)])];
        }
        v = b;
        while (!on_ancestor_path_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])])
            v = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(v)])];
        return base_[static_cast<std::size_t>(v)];
    }

    void mark_path(int v, int stem, int child) {
        while (base_[static_cast<std::size_t>(v)] != stem) {
            int mv = mate_[static_cast<std::size_t>(v)];
            in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
            in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = 1;
            parent_[static_cast<std::size_t>(v)] = child;
            child = mv;
            v = parent_[static_cast<std::size_t>(mv)];
        }
    }

    void contract_blossom(int v, int to) {
        int stem = lowest_common_base(v, to);
        std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
        mark_path(v, stem, to);
        mark_path(to, stem, v);
        for (int i = 0; i < n_; ++i) {
            if (in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
                base_[static_cast<std::size_t>(i)] = stem;
                push(i);
            }
        }
    }

    // Alternate mate/parent links back from the exposed endpoint.
    void flip_path(int v) {
        while (v != -1) {
            int pv = parent_[static_cast<std::size_t>(v)];
            int next = mate_[static_cast<std::size_t>(pv)];
            mate_[static_cast<std::size_t>(v)] = pv;
            mate_[static_cast<std::size_t>(pv)] = v;
            v = next;
        }
    }

    const Graph& g_;
    std::vector<int>& mate_;
    int n_;
    std::vector<int> parent_, base_;
    std::vector<char> queued_, on_ancestor_path_, in_blossom_;
    std::vector<int> queue_;
};

void validate_against(const Graph& g, const Matching& m) {
    if (m.host_vertex_count() != g.vertex_count())
        throw std::invalid_argument("matching host size " + std::to_string(m.host_vertex_count()) +
                                    " does not match graph on " + std::to_string(g.vertex_count()) +
                                    " vertices");
    for (int v = 0; v < g.vertex_count(); ++v) {
        int w = m.mate(v);
        if (w == -1) continue;
        if (m.mate(w) != v) throw std::invalid_argument("mate map is not an involution");
        if (!g.has_edge(v, w))
            throw std::invalid_argument("matching edge {" + std::to_string(v) + "," +
                                        std::to_string(w) + "} is not an edge of the graph");
    }
}

Matching from_mate_vector(int n, const std::vector<int>& mate) {
    Matching result(n);
    for (int v = 0; v < n; ++v)
        if (mate[static_cast<std::size_t>(v)] > v) result.add(v, mate[static_cast<std::size_t>(v)]);
    return result;
}

}  // namespace

Matching complete_matching(const Graph& g, Matching seed) {
    validate_against(g, seed);
    int n = g.vertex_count();
    std::vector<int> mate(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) mate[static_cast<std::size_t>(v)] = seed.mate(v);

    BlossomSearch search(g, mate);
    for (int v = 0; v < n; ++v)
        if (mate[static_cast<std::size_t>(v)] == -1) search.augment_from(v);
    return from_mate_vector(n, mate);
}

Matching maximum_matching(const Graph& g) {
    int n = g.vertex_count();
    Matching greedy(n);
    for (int v = 0; v < n; ++v) {
        if (greedy.saturates(v)) continue;
        for (int w : g.neighbors(v)) {
            if (!greedy.saturates(w)) {
                greedy.add(v, w);
                break;
            }
        }
    }
    return complete_matching(g, std::move(greedy));
}

int matching_number(const Graph& g) { return maximum_matching(g).size(); }

std::vector<int> unsaturated_vertices(const Graph& g, const Matching& m) {
    validate_against(g, m);
    std::vector<int> result;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!m.saturates(v)) result.push_back(v);
    return result;
}

}  // namespace annirec
