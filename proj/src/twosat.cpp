#include "annirec/twosat.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <string>

namespace annirec {

TwoSatFormula::TwoSatFormula(int variable_count) : variable_count_(variable_count) {
    if (variable_count < 0) throw std::invalid_argument("variable count must be non-negative");
}

void TwoSatFormula::add_clause(Literal a, Literal b) {
    for (Literal lit : {a, b})
        if (lit.var < 0 || lit.var >= variable_count_)
            throw std::out_of_range("literal variable " + std::to_string(lit.var) +
                                    " out of range [0, " + std::to_string(variable_count_) + ")");
    clauses_.emplace_back(a, b);
}

bool TwoSatFormula::satisfied_by(const Assignment& asg) const {
    for (const auto& [a, b] : clauses_)
        if (!asg.value(a) && !asg.value(b)) return false;
    return true;
}

std::string TwoSatFormula::to_dimacs_cnf() const {
    std::ostringstream out;
    out << "p cnf " << variable_count_ << " " << clauses_.size() << "\n";
    auto dimacs = [](Literal l) { return l.positive ? l.var + 1 : -(l.var + 1); };
    for (const auto& [a, b] : clauses_) out << dimacs(a) << " " << dimacs(b) << " 0\n";
    return out.str();
}

namespace {

// Implication-graph node of a literal: positive literals at 2v, negated
// at 2v+1.
int node_of(Literal l) { return 2 * l.var + (l.positive ? 0 : 1); }

Literal negate(Literal l) { return {l.var, !l.positive}; }

// Tarjan with an explicit stack; formulas built from large graphs would
// blow the call stack otherwise. Component ids are assigned in
// completion order, so lower id = closer to a sink of the condensation.
class SccFinder {
public:
    explicit SccFinder(const std::vector<std::vector<int>>& adj)
        : adj_(adj),
          index_(adj.size(), -1),
          lowlink_(adj.size(), 0),
          component_(adj.size(), -1),
          on_stack_(adj.size(), 0) {}

    std::vector<int> run() {
        for (int v = 0; v < static_cast<int>(adj_.size()); ++v)
            if (index_[static_cast<std::size_t>(v)] == -1) strong_connect(v);
        return component_;
    }

private:
    struct Frame {
        int node;
        std::size_t next_edge;
    };

    void strong_connect(int root) {
        std::vector<Frame> frames;
        frames.push_back({root, 0});
        begin_visit(root);
        while (!frames.empty()) {
            Frame& f = frames.back();
            int v = f.node;
            if (f.next_edge < adj_[static_cast<std::size_t>(v)].size()) {
                int w = adj_[static_cast<std::size_t>(v)][f.next_edge++];
                if (index_[static_cast<std::size_t>(w)] == -1) {
                    begin_visit(w);
                    frames.push_back({w, 0});
                } else if (on_stack_[static_cast<std::size_t>(w)]) {
                    lowlink_[static_cast<std::size_t>(v)] = std::min(
                        lowlink_[static_cast<std::size_t>(v)], index_[static_cast<std::size_t>(w)]);
                }
            } else {
                if (lowlink_[static_cast<std::size_t>(v)] == index_[static_cast<std::size_t>(v)]) {
                    while (true) {
                        int w = stack_.back();
                        stack_.pop_back();
                        on_stack_[static_cast<std::size_t>(w)] = 0;
                        component_[static_cast<std::size_t>(w)] = component_count_;
                        if (w == v) break;
                    }
                    ++component_count_;
                }
                frames.pop_back();
                if (!frames.empty()) {
                    int parent = frames.back().node;
                    lowlink_[static_cast<std::size_t>(parent)] =
                        std::min(lowlink_[static_cast<std::size_t>(parent)],
                                 lowlink_[static_cast<std::size_t>(v)]);
                }
            }
        }
    }

    void begin_visit(int v) {
        index_[static_cast<std::size_t>(v)] = next_index_;
        lowlink_[static_cast<std::size_t>(v)] = next_index_;
        ++next_index_;
        stack_.push_back(v);
        on_stack_[static_cast<std::size_t>(v)] = 1;
    }

    const std::vector<std::vector<int>>& adj_;
    std::vector<int> index_, lowlink_, component_, stack_;
    std::vector<char> on_stack_;
    int next_index_ = 0;
    int component_count_ = 0;
};

}  // namespace

std::optional<Assignment> solve(const TwoSatFormula& f) {
    int v = f.variable_count();
    std::vector<std::vector<int>> implications(static_cast<std::size_t>(2 * v));
    for (const auto& [a, b] : f.clauses()) {
        // (a or b) == (!a -> b) and (!b -> a); a unit clause collapses to
        // the single implication !a -> a twice.
        implications[static_cast<std::size_t>(node_of(negate(a)))].push_back(node_of(b));
        implications[static_cast<std::size_t>(node_of(negate(b)))].push_back(node_of(a));
    }

    std::vector<int> component = SccFinder(implications).run();

    Assignment asg;
    asg.values.resize(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) {
        int comp_pos = component[static_cast<std::size_t>(node_of(pos(i)))];
        int comp_neg = component[static_cast<std::size_t>(node_of(neg(i)))];
        if (comp_pos == comp_neg) return std::nullopt;
        asg.values[static_cast<std::size_t>(i)] = comp_pos < comp_neg ? 1 : 0;
    }
    assert(f.satisfied_by(asg));
    return asg;
}

}  // namespace annirec
