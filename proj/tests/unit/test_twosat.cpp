#include <doctest.h>

#include <random>

#include "annirec/twosat.hpp"
#include "support/truth_table.hpp"

using namespace annirec;

TEST_SUITE("formula construction") {
    TEST_CASE("clauses keep their order") {
        TwoSatFormula f(2);
        f.add_unit(pos(0));
        f.add_clause(neg(0), pos(1));
        f.add_clause(pos(1), pos(0));
        REQUIRE(f.clauses().size() == 3);
        CHECK(f.clauses()[0] == std::make_pair(pos(0), pos(0)));
        CHECK(f.clauses()[1] == std::make_pair(neg(0), pos(1)));
        CHECK_THROWS_AS(f.add_clause(pos(0), pos(2)), std::out_of_range);
        CHECK_THROWS_AS(f.add_unit(neg(-1)), std::out_of_range);
    }

    TEST_CASE("dimacs dump keeps width two") {
        TwoSatFormula f(2);
        f.add_unit(pos(1));
        f.add_clause(neg(0), pos(1));
        CHECK(f.to_dimacs_cnf() == "p cnf 2 2\n2 2 0\n-1 2 0\n");
    }
}

TEST_SUITE("solving") {
    TEST_CASE("unit contradiction is unsatisfiable") {
        TwoSatFormula f(1);
        f.add_unit(pos(0));
        f.add_unit(neg(0));
        CHECK_FALSE(solve(f).has_value());
    }

    TEST_CASE("single clause is satisfiable and the model checks out") {
        TwoSatFormula f(2);
        f.add_clause(pos(0), pos(1));
        auto asg = solve(f);
        REQUIRE(asg.has_value());
        CHECK(f.satisfied_by(*asg));
    }

    TEST_CASE("empty formula solves to all-true") {
        // Positive literal nodes precede negated ones in the implication
        // graph, so with nothing to order them every variable lands true.
        TwoSatFormula f(3);
        auto asg = solve(f);
        REQUIRE(asg.has_value());
        for (int v = 0; v < 3; ++v) CHECK(asg->value(v));
    }

    TEST_CASE("chained implications") {
        // x0 and (x0 -> x1) and (x1 -> !x2) force x0 x1 !x2.
        TwoSatFormula f(3);
        f.add_unit(pos(0));
        f.add_clause(neg(0), pos(1));
        f.add_clause(neg(1), neg(2));
        auto asg = solve(f);
        REQUIRE(asg.has_value());
        CHECK(asg->value(0));
        CHECK(asg->value(1));
        CHECK_FALSE(asg->value(2));
    }

    TEST_CASE("every two-variable formula with up to four clauses") {
        // All 16 ordered literal pairs over two variables, all formulas
        // of length <= 4: verdict must match the exhaustive oracle.
        std::vector<std::pair<Literal, Literal>> pool;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                pool.emplace_back(Literal{i / 2, i % 2 == 0}, Literal{j / 2, j % 2 == 0});

        long checked = 0;
        for (int len = 0; len <= 4; ++len) {
            std::vector<int> pick(static_cast<std::size_t>(len), 0);
            while (true) {
                TwoSatFormula f(2);
                for (int idx : pick) f.add_clause(pool[static_cast<std::size_t>(idx)].first,
                                                  pool[static_cast<std::size_t>(idx)].second);
                auto asg = solve(f);
                CHECK(asg.has_value() == truth_table::satisfiable(f));
                if (asg) CHECK(f.satisfied_by(*asg));
                ++checked;

                int k = len - 1;
                while (k >= 0 && pick[static_cast<std::size_t>(k)] == 15) {
                    pick[static_cast<std::size_t>(k)] = 0;
                    --k;
                }
                if (k < 0) break;
                ++pick[static_cast<std::size_t>(k)];
            }
        }
        CHECK(checked == 1 + 16 + 16 * 16 + 16 * 16 * 16 + 16 * 16 * 16 * 16);
    }

    TEST_CASE("random formulas match the truth table") {
        std::mt19937_64 rng(2024);
        for (int round = 0; round < 300; ++round) {
            int vars = 1 + static_cast<int>(rng() % 16);
            int clauses = static_cast<int>(rng() % 40);
            TwoSatFormula f(vars);
            for (int c = 0; c < clauses; ++c) {
                Literal a{static_cast<int>(rng() % vars), (rng() & 1) == 0};
                Literal b{static_cast<int>(rng() % vars), (rng() & 1) == 0};
                f.add_clause(a, b);
            }
            auto asg = solve(f);
            CHECK(asg.has_value() == truth_table::satisfiable(f));
            if (asg) CHECK(f.satisfied_by(*asg));
        }
    }

    TEST_CASE("identical formulas give identical models") {
        std::mt19937_64 rng(99);
        for (int round = 0; round < 50; ++round) {
            int vars = 2 + static_cast<int>(rng() % 12);
            TwoSatFormula f(vars);
            for (int c = 0; c < vars; ++c)
                f.add_clause(Literal{static_cast<int>(rng() % vars), (rng() & 1) == 0},
                             Literal{static_cast<int>(rng() % vars), (rng() & 1) == 0});
            auto first = solve(f);
            auto second = solve(f);
            REQUIRE(first.has_value() == second.has_value());
            if (first) CHECK(first->values == second->values);
        }
    }
}
