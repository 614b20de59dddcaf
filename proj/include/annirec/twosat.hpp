#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "annirec/graph.hpp"

namespace annirec {

// Literal over variable `var`; positive means the variable itself.
struct Literal {
    int var = 0;
    bool positive = true;

    friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal pos(int var) { return {var, true}; }
inline Literal neg(int var) { return {var, false}; }

struct Assignment {
    std::vector<char> values;

    bool value(int var) const { return values.at(static_cast<std::size_t>(var)) != 0; }
    bool value(Literal lit) const { return value(lit.var) == lit.positive; }
};

// Conjunction of width-<=2 clauses. Build by mutation, then solve; a
// frozen formula may be solved from many threads at once.
class TwoSatFormula {
public:
    explicit TwoSatFormula(int variable_count);

    int variable_count() const noexcept { return variable_count_; }

    // Appends (a or b); clause order is preserved.
    void add_clause(Literal a, Literal b);

    // Unit clause, stored as (a or a).
    void add_unit(Literal a) { add_clause(a, a); }

    const std::vector<std::pair<Literal, Literal>>& clauses() const { return clauses_; }

    bool satisfied_by(const Assignment& asg) const;

    // DIMACS CNF dump for debugging (every clause has width 2).
    std::string to_dimacs_cnf() const;

private:
    int variable_count_;
    std::vector<std::pair<Literal, Literal>> clauses_;
};

// Satisfiability via strongly connected components of the implication
// graph; nullopt means unsatisfiable. When a model exists, the same
// formula always yields the same model: a variable is true iff the SCC
// of its positive literal precedes the SCC of its negative literal in
// Tarjan completion order.
std::optional<Assignment> solve(const TwoSatFormula& f);

}  // namespace annirec
