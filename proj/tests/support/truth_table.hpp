#pragma once

#include <cstdint>

#include "annirec/twosat.hpp"

// Exhaustive 2-SAT oracle: sweeps all 2^v assignments in 64-wide
// blocks, entirely independent of the implication-graph solver. v <= 26
// keeps the sweep affordable; callers stay at v <= 20.
namespace truth_table {

// Bits of variable `var` across the 64 assignments base..base+63
// (base is 64-aligned, so low variables follow fixed masks).
inline std::uint64_t variable_word(int var, std::uint64_t base) {
    static constexpr std::uint64_t kLowPatterns[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
    };
    if (var < 6) return kLowPatterns[var];
    return ((base >> var) & 1ull) ? ~0ull : 0ull;
}

inline std::uint64_t literal_word(annirec::Literal lit, std::uint64_t base) {
    std::uint64_t word = variable_word(lit.var, base);
    return lit.positive ? word : ~word;
}

inline bool satisfiable(const annirec::TwoSatFormula& f) {
    int v = f.variable_count();
    std::uint64_t total = 1ull << v;
    for (std::uint64_t base = 0; base < total; base += 64) {
        std::uint64_t alive = total - base >= 64 ? ~0ull : (1ull << (total - base)) - 1;
        for (const auto& [a, b] : f.clauses()) {
            alive &= literal_word(a, base) | literal_word(b, base);
            if (alive == 0) break;
        }
        if (alive != 0) return true;
    }
    return false;
}

}  // namespace truth_table
