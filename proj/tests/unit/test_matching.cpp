#include <doctest.h>

#include <functional>

#include "annirec/matching.hpp"
#include "annirec/oracle.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"

using namespace annirec;

namespace {

// A matching is valid when every edge exists in the host and no two
// edges touch; Matching::add enforces disjointness, so only host
// membership needs a second look here.
void check_valid(const Graph& g, const Matching& m) {
    for (auto [u, v] : m.edges()) CHECK(g.has_edge(u, v));
}

// Exhaustive search for a simple path between two unsaturated vertices
// that alternates unmatched/matched edges. Exponential, small graphs
// only; exists iff the matching is not maximum.
bool augmenting_path_exists(const Graph& g, const Matching& m) {
    int n = g.vertex_count();
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::function<bool(int, bool)> extend = [&](int v, bool need_matched) -> bool {
        on_path[static_cast<std::size_t>(v)] = 1;
        bool found = false;
        for (int w : g.neighbors(v)) {
            if (on_path[static_cast<std::size_t>(w)]) continue;
            if ((m.mate(v) == w) != need_matched) continue;
            if (!need_matched && !m.saturates(w)) {
                found = true;
                break;
            }
            if (extend(w, !need_matched)) {
                found = true;
                break;
            }
        }
        on_path[static_cast<std::size_t>(v)] = 0;
        return found;
    };
    for (int v = 0; v < n; ++v)
        if (!m.saturates(v) && extend(v, false)) return true;
    return false;
}

}  // namespace

TEST_SUITE("matching container") {
    TEST_CASE("mate map is an involution") {
        Matching m(4);
        m.add(0, 2);
        CHECK(m.mate(0) == 2);
        CHECK(m.mate(2) == 0);
        CHECK(m.mate(1) == -1);
        CHECK(m.saturates(0));
        CHECK_FALSE(m.saturates(3));
        CHECK(m.size() == 1);
        CHECK_THROWS_AS(m.add(2, 3), std::invalid_argument);
        CHECK_THROWS_AS(m.add(1, 1), std::invalid_argument);
        CHECK_THROWS_AS(m.add(1, 7), std::invalid_argument);
    }
}

TEST_SUITE("maximum matching") {
    TEST_CASE("single edge") {
        Graph g(2);
        g.add_edge(0, 1);
        CHECK(maximum_matching(g).size() == 1);
    }

    TEST_CASE("named graphs") {
        CHECK(maximum_matching(fixtures::cycle_graph(5)).size() == 2);
        CHECK(maximum_matching(fixtures::petersen_graph()).size() == 5);
        CHECK(matching_number(fixtures::complete_graph(4)) == 2);
        CHECK(matching_number(fixtures::path_graph(4)) == 2);
        CHECK(matching_number(fixtures::empty_graph(4)) == 0);
    }

    TEST_CASE("odd components force blossom handling") {
        // Two triangles joined by a bridge: mu = 3.
        Graph g(6);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 0);
        g.add_edge(3, 4);
        g.add_edge(4, 5);
        g.add_edge(5, 3);
        g.add_edge(2, 3);
        CHECK(matching_number(g) == 3);
        CHECK(matching_number(fixtures::complete_bipartite(3, 5)) == 3);
    }

    TEST_CASE("agrees with the brute-force oracle on the sweep") {
        for (int n = 1; n <= 7; ++n)
            for (const Graph& g : corpus::all_graphs(n)) {
                Matching m = maximum_matching(g);
                check_valid(g, m);
                CHECK(m.size() == oracle::brute_mu(g));
            }
    }

    TEST_CASE("agrees with the brute-force oracle on random graphs up to 14") {
        for (std::uint64_t seed = 0; seed < 160; ++seed) {
            int n = 1 + static_cast<int>(seed % 14);
            Graph g = generate_random_graph(n, 0.1 + 0.2 * static_cast<double>(seed % 5),
                                            9000 + seed);
            Matching m = maximum_matching(g);
            check_valid(g, m);
            CHECK(m.size() == oracle::brute_mu(g));
        }
    }

    TEST_CASE("deterministic result") {
        Graph g = generate_random_graph(12, 0.3, 42);
        Matching a = maximum_matching(g);
        Matching b = maximum_matching(g);
        CHECK(a.edges() == b.edges());
    }

    TEST_CASE("no augmenting path survives") {
        for (std::uint64_t seed = 0; seed < 70; ++seed) {
            int n = 2 + static_cast<int>(seed % 8);
            Graph g = generate_random_graph(n, 0.45, 5500 + seed);
            Matching m = maximum_matching(g);
            CHECK_FALSE(augmenting_path_exists(g, m));
            // Dropping an edge must re-open one; keeps the checker honest.
            if (m.size() > 0) {
                Matching weakened(n);
                auto edges = m.edges();
                for (std::size_t i = 1; i < edges.size(); ++i)
                    weakened.add(edges[i].first, edges[i].second);
                CHECK(augmenting_path_exists(g, weakened));
            }
        }
    }
}

TEST_SUITE("seeded completion") {
    TEST_CASE("completes an arbitrary valid seed to maximum size") {
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            int n = 2 + static_cast<int>(seed % 11);
            Graph g = generate_random_graph(n, 0.4, 333 + seed);
            // Seed: every third edge that still fits.
            Matching partial(n);
            int counter = 0;
            for (auto [u, v] : g.edges())
                if (counter++ % 3 == 0 && !partial.saturates(u) && !partial.saturates(v))
                    partial.add(u, v);
            Matching completed = complete_matching(g, partial);
            check_valid(g, completed);
            CHECK(completed.size() == oracle::brute_mu(g));
        }
    }

    TEST_CASE("rejects seeds that do not live in the graph") {
        Graph g = fixtures::path_graph(4);
        Matching wrong_size(3);
        CHECK_THROWS_AS(complete_matching(g, wrong_size), std::invalid_argument);
        Matching not_an_edge(4);
        not_an_edge.add(0, 3);
        CHECK_THROWS_AS(complete_matching(g, not_an_edge), std::invalid_argument);
    }
}

TEST_SUITE("unsaturated vertices") {
    TEST_CASE("examples") {
        Graph single(2);
        single.add_edge(0, 1);
        CHECK(unsaturated_vertices(single, maximum_matching(single)).empty());

        Graph p3 = fixtures::path_graph(3);
        Matching m(3);
        m.add(0, 1);
        CHECK(unsaturated_vertices(p3, m) == std::vector<int>{2});

        Graph c5 = fixtures::cycle_graph(5);
        CHECK(unsaturated_vertices(c5, maximum_matching(c5)).size() == 1);
    }

    TEST_CASE("count and independence on random graphs") {
        for (std::uint64_t seed = 0; seed < 80; ++seed) {
            int n = 1 + static_cast<int>(seed % 12);
            Graph g = generate_random_graph(n, 0.5, 71 + seed);
            Matching m = maximum_matching(g);
            auto exposed = unsaturated_vertices(g, m);
            CHECK(static_cast<int>(exposed.size()) == n - 2 * m.size());
            // Two unsaturated neighbors would admit an augmenting edge.
            CHECK(verify_independent_set(g, exposed));
        }
    }

    TEST_CASE("validates the matching against the graph") {
        Graph p4 = fixtures::path_graph(4);
        Matching foreign(4);
        foreign.add(0, 2);
        CHECK_THROWS_AS(unsaturated_vertices(p4, foreign), std::invalid_argument);
    }
}
