#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "annirec/graph.hpp"
#include "annirec/matching.hpp"
#include "annirec/twosat.hpp"

namespace annirec {

// Per-candidate state of the equality test: the deleted vertex r, a
// maximum matching of G-r split into ordered pairs (u_i, v_i), and the
// unsaturated set I0. Variable i of the 2-SAT formula selects u_i
// (true) or v_i (false) into the independent set; I0 is always in.
// All vertex ids live in G-r labels.
struct RecognitionContext {
    int deleted_vertex = -1;               // r, in original labels
    Matching n_matching;                    // on G-r
    std::vector<std::pair<int, int>> pairs;  // (u_i, v_i), u_i < v_i, sorted by u_i
    std::vector<int> i0;                     // unsaturated vertices, ascending
};

// Maximum independent set witnessing alpha(G) = a(G), in original
// vertex labels.
struct Certificate {
    std::vector<int> independent_set;
    int target_size = 0;
};

// Matching size a maximum matching of G-r must hit for r to stay a
// candidate: n - 1 - a (equivalently a - 2k). Throws
// std::invalid_argument when m = 0, where no vertex is ever deleted.
int required_matching_size(const AnnihilationSummary& summary);

// Builds the context for one candidate r from a maximum matching of
// G-r. Throws internal_error if the unsaturated set is not independent,
// which can only happen when the matching is not maximum.
RecognitionContext make_recognition_context(const Graph& g_minus_r, Matching n_matching,
                                            int deleted_vertex);

// The clause set over |pairs| variables:
//   unit  x_i       when v_i has a neighbor in I0,
//   unit !x_i       when u_i has a neighbor in I0,
//   u_i ~ u_j  =>  (!x_i or !x_j)      for i != j,
//   u_i ~ v_j  =>  (!x_i or  x_j),
//   v_i ~ u_j  =>  ( x_i or !x_j),
//   v_i ~ v_j  =>  ( x_i or  x_j),
// and nothing else. Satisfying models are exactly the selections that
// extend I0 to an independent set of size |I0| + |pairs|.
TwoSatFormula build_recognition_formula(const Graph& g_minus_r, const RecognitionContext& ctx);

// I' = I0 + {u_i : x_i true} + {v_i : x_i false}, lifted to original
// labels through the deletion map and verified against g. Throws
// internal_error if the verification fails (solver or construction bug).
Certificate extract_certificate(const Graph& g, const RecognitionContext& ctx,
                                const Assignment& asg, const VertexDeletion& deletion);

// Decides alpha(G) = a(G). Returns the first certificate over candidates
// r = 0, 1, ... (ascending), or nullopt when no candidate admits one.
// A graph without edges is always a yes with every vertex in the set.
std::optional<Certificate> recognize_equal(const Graph& g);

}  // namespace annirec
