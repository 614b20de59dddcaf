#include "annirec/recognition.hpp"

#include <algorithm>
#include <string>

namespace annirec {

int required_matching_size(const AnnihilationSummary& summary) {
    if (summary.m == 0)
        throw std::invalid_argument("no candidate matching size for an edgeless graph");
    // a - 2k = a - (2a - n + 1) = n - 1 - a.
    return summary.n - 1 - summary.a;
}

RecognitionContext make_recognition_context(const Graph& g_minus_r, Matching n_matching,
                                            int deleted_vertex) {
    RecognitionContext ctx;
    ctx.deleted_vertex = deleted_vertex;
    ctx.pairs = n_matching.edges();  // (min, max) per pair, sorted by first
    ctx.i0 = unsaturated_vertices(g_minus_r, n_matching);
    ctx.n_matching = std::move(n_matching);
    if (!verify_independent_set(g_minus_r, ctx.i0))
        throw internal_error("unsaturated set of a maximum matching is not independent");
    return ctx;
}

TwoSatFormula build_recognition_formula(const Graph& g_minus_r, const RecognitionContext& ctx) {
    int n = g_minus_r.vertex_count();
    if (ctx.i0.size() + 2 * ctx.pairs.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("context does not partition the vertices of G-r");

    // pair_index / is_u over G-r vertices; -1 marks I0 members.
    std::vector<int> pair_index(static_cast<std::size_t>(n), -1);
    std::vector<char> is_u(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < static_cast<int>(ctx.pairs.size()); ++i) {
        auto [u, v] = ctx.pairs[static_cast<std::size_t>(i)];
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::invalid_argument("matched pair endpoints out of range");
        if (pair_index[static_cast<std::size_t>(u)] != -1 ||
            pair_index[static_cast<std::size_t>(v)] != -1)
            throw std::invalid_argument("matched pairs share an endpoint");
        pair_index[static_cast<std::size_t>(u)] = i;
        pair_index[static_cast<std::size_t>(v)] = i;
        is_u[static_cast<std::size_t>(u)] = 1;
    }
    std::vector<char> in_i0(static_cast<std::size_t>(n), 0);
    for (int v : ctx.i0) {
        if (v < 0 || v >= n || pair_index[static_cast<std::size_t>(v)] != -1)
            throw std::invalid_argument("I0 overlaps the matched pairs");
        in_i0[static_cast<std::size_t>(v)] = 1;
    }

    if (!verify_independent_set(g_minus_r, ctx.i0))
        throw internal_error("unsaturated set of a maximum matching is not independent");

    TwoSatFormula f(static_cast<int>(ctx.pairs.size()));

    // Selecting an endpoint adjacent to I0 would break independence, so
    // the opposite endpoint is forced.
    for (int i = 0; i < static_cast<int>(ctx.pairs.size()); ++i) {
        auto [u, v] = ctx.pairs[static_cast<std::size_t>(i)];
        bool u_blocked = std::any_of(g_minus_r.neighbors(u).begin(), g_minus_r.neighbors(u).end(),
                                     [&](int w) { return in_i0[static_cast<std::size_t>(w)]; });
        bool v_blocked = std::any_of(g_minus_r.neighbors(v).begin(), g_minus_r.neighbors(v).end(),
                                     [&](int w) { return in_i0[static_cast<std::size_t>(w)]; });
        if (v_blocked) f.add_unit(pos(i));
        if (u_blocked) f.add_unit(neg(i));
    }

    // One clause per edge between endpoints of distinct pairs: the two
    // endpoints must not both be selected. Selecting u_i is literal x_i,
    // selecting v_i is literal !x_i, so the exclusion clause carries the
    // negation of each endpoint's selection literal.
    for (int x = 0; x < n; ++x) {
        int i = pair_index[static_cast<std::size_t>(x)];
        if (i < 0) continue;
        for (int y : g_minus_r.neighbors(x)) {
            if (y <= x) continue;
            int j = pair_index[static_cast<std::size_t>(y)];
            if (j < 0 || j == i) continue;
            Literal a = is_u[static_cast<std::size_t>(x)] ? neg(i) : pos(i);
            Literal b = is_u[static_cast<std::size_t>(y)] ? neg(j) : pos(j);
            f.add_clause(a, b);
        }
    }
    return f;
}

Certificate extract_certificate(const Graph& g, const RecognitionContext& ctx,
                                const Assignment& asg, const VertexDeletion& deletion) {
    Certificate cert;
    cert.independent_set.reserve(ctx.i0.size() + ctx.pairs.size());
    for (int v : ctx.i0) cert.independent_set.push_back(deletion.to_old(v));
    for (int i = 0; i < static_cast<int>(ctx.pairs.size()); ++i) {
        auto [u, v] = ctx.pairs[static_cast<std::size_t>(i)];
        cert.independent_set.push_back(deletion.to_old(asg.value(i) ? u : v));
    }
    std::sort(cert.independent_set.begin(), cert.independent_set.end());
    cert.target_size = static_cast<int>(cert.independent_set.size());
    if (!verify_independent_set(g, cert.independent_set))
        throw internal_error("extracted certificate is not independent");
    return cert;
}

std::optional<Certificate> recognize_equal(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("recognition needs at least one vertex");
    if (g.edge_count() == 0) {  // alpha = a = n, every vertex qualifies
        Certificate cert;
        cert.independent_set.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) cert.independent_set[static_cast<std::size_t>(v)] = v;
        cert.target_size = n;
        return cert;
    }

    AnnihilationSummary summary = annihilation_number(g);
    int required = required_matching_size(summary);
    Matching base = maximum_matching(g);

    for (int r = 0; r < n; ++r) {
        VertexDeletion deletion = delete_vertex(g, r);

        // Seed with the global matching minus r's pair; its size already
        // lower-bounds mu(G-r), so oversized candidates drop out before
        // any augmenting search runs.
        Matching seed(n - 1);
        for (auto [u, v] : base.edges()) {
            if (u == r || v == r) continue;
            seed.add(deletion.old_to_new[static_cast<std::size_t>(u)],
                     deletion.old_to_new[static_cast<std::size_t>(v)]);
        }
        if (seed.size() > required) continue;

        Matching n_matching = complete_matching(deletion.graph, std::move(seed));
        if (n_matching.size() != required) continue;

        RecognitionContext ctx =
            make_recognition_context(deletion.graph, std::move(n_matching), r);
        TwoSatFormula f = build_recognition_formula(deletion.graph, ctx);
        if (auto asg = solve(f)) {
            Certificate cert = extract_certificate(g, ctx, *asg, deletion);
            if (cert.target_size != summary.a)
                throw internal_error("certificate size " + std::to_string(cert.target_size) +
                                     " does not match annihilation number " +
                                     std::to_string(summary.a));
            return cert;
        }
    }
    return std::nullopt;
}

}  // namespace annirec
