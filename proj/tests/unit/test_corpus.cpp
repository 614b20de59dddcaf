#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "support/corpus.hpp"
#include "support/fixtures.hpp"

namespace {

// Independent route: canonicalize every labeled graph by minimizing
// over all n! permutations and count the distinct results. Exponential
// twice over, so n stays tiny.
int labeled_class_count(int n, bool connected_only) {
    int pairs = n * (n - 1) / 2;
    std::set<std::uint32_t> canon;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        auto edge_bit = [&](const std::vector<int>& perm, int i, int j) -> std::uint32_t {
            int u = perm[static_cast<std::size_t>(i)], v = perm[static_cast<std::size_t>(j)];
            if (u > v) std::swap(u, v);
            int idx = 0, bit = 0;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b, ++idx)
                    if (a == u && b == v) bit = idx;
            return (mask >> bit) & 1u;
        };
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::uint32_t best = ~0u;
        do {
            std::uint32_t code = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) code = (code << 1) | edge_bit(perm, i, j);
            best = std::min(best, code);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (connected_only) {
            annirec::Graph g(n);
            int idx = 0;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b, ++idx)
                    if ((mask >> idx) & 1u) g.add_edge(a, b);
            if (!corpus::is_connected(g)) continue;
        }
        canon.insert(best);
    }
    return static_cast<int>(canon.size());
}

}  // namespace

TEST_SUITE("graph sweep") {
    TEST_CASE("class counts match the labeled enumeration for tiny n") {
        for (int n = 1; n <= 5; ++n) {
            CHECK(static_cast<int>(corpus::all_graphs(n).size()) == labeled_class_count(n, false));
            CHECK(static_cast<int>(corpus::connected_graphs(n).size()) ==
                  labeled_class_count(n, true));
        }
    }

    TEST_CASE("class counts match the published sequences up to 6") {
        const int all[7] = {0, 1, 2, 4, 11, 34, 156};
        const int connected[7] = {0, 1, 1, 2, 6, 21, 112};
        for (int n = 1; n <= 6; ++n) {
            CHECK(static_cast<int>(corpus::all_graphs(n).size()) == all[n]);
            CHECK(static_cast<int>(corpus::connected_graphs(n).size()) == connected[n]);
        }
    }

    TEST_CASE("members have the advertised vertex count and connectivity") {
        for (int n = 1; n <= 6; ++n) {
            for (const auto& g : corpus::all_graphs(n)) CHECK(g.vertex_count() == n);
            for (const auto& g : corpus::connected_graphs(n)) CHECK(corpus::is_connected(g));
        }
        CHECK(corpus::is_connected(fixtures::petersen_graph()));
        CHECK_FALSE(corpus::is_connected(fixtures::empty_graph(2)));
    }

    TEST_CASE("random batch shape and determinism") {
        auto batch = corpus::random_batch(3, 5, 2);
        CHECK(batch.size() == 3 * 5 * 2);
        auto again = corpus::random_batch(3, 5, 2);
        for (std::size_t i = 0; i < batch.size(); ++i) CHECK(batch[i] == again[i]);
        CHECK(corpus::cell_seed(4, 1, 0) == corpus::cell_seed(4, 1, 0));
        CHECK(corpus::cell_seed(4, 1, 0) != corpus::cell_seed(4, 1, 1));
    }
}
