#include "doctest.h"

#include <random>

#include "alphasat/metrics.hpp"
#include "alphasat/oracle.hpp"
#include "alphasat/unsat_builder.hpp"
#include "test_support.hpp"

using namespace alphasat;
using namespace alphasat::testing;

TEST_CASE("clause_cover_set lists the falsifying assignments") {
    CHECK(clause_cover_set(clause_of({0, 1}, {}), 3) ==
          std::vector<std::uint64_t>{0, 4});
    CHECK(clause_cover_set(clause_of({}, {0, 1}), 2) ==
          std::vector<std::uint64_t>{3});
    CHECK(clause_cover_set(clause_of({0}, {}), 2) ==
          std::vector<std::uint64_t>{0, 2});
}

TEST_CASE("cover sets have size exactly 2^(n-k)") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(draw_below(rng, 9));
        const int k = 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(n)));
        const CnfFormula f = random_formula(rng, n, k, 1);
        CHECK(clause_cover_set(f.clauses[0], n).size() ==
              (std::uint64_t{1} << (n - k)));
    }
}

TEST_CASE("the 2^k polarity cover sets partition all assignments") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(draw_below(rng, 8));
        const int k = 1 + static_cast<int>(draw_below(rng, std::min<std::uint64_t>(n, 3)));
        const Edge edge = draw_subset(rng, n, k);

        std::vector<int> hits(std::size_t{1} << n, 0);
        for (std::uint32_t pattern = 0; pattern < (std::uint32_t{1} << k); ++pattern)
            for_each_cover_index(edge, pattern, n,
                                 [&](std::uint64_t idx) { ++hits[idx]; });
        CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    }
}

TEST_CASE("best_polarity obeys the smallest-pattern tie rule") {
    CoverageSet coverage(2);
    const Edge edge{0, 1};

    const PolarityChoice fresh = best_polarity(edge, coverage);
    CHECK(fresh.pattern == 0);
    CHECK(fresh.newly_covered == 1);
    CHECK(fresh.clause == clause_of({0, 1}, {}));

    coverage.insert(0);
    const PolarityChoice next = best_polarity(edge, coverage);
    CHECK(next.pattern == 1);  // covers x0=1, x1=0 (index 1)
    CHECK(next.newly_covered == 1);
    CHECK(next.clause == clause_of({1}, {0}));

    for (std::uint64_t idx = 0; idx < 4; ++idx)
        coverage.insert(idx);
    const PolarityChoice saturated = best_polarity(edge, coverage);
    CHECK(saturated.newly_covered == 0);
    CHECK(saturated.pattern == 0);
}

TEST_CASE("build_unsat on 2^k copies of one edge yields the complete formula") {
    Hypergraph h;
    h.n = 2;
    h.edges = {{0, 1}, {0, 1}, {0, 1}, {0, 1}};
    const UnsatBuildResult r = build_unsat(h);
    CHECK(r.final_uncovered == 0);
    CHECK(r.formula == complete_formula(2));
}

TEST_CASE("build_unsat over K_9 covers everything") {
    const Hypergraph k9 = complete_graph(9);
    REQUIRE(k9.edges.size() == 36);  // = n 2^k

    const UnsatBuildResult r = build_unsat(k9);
    CHECK(r.final_uncovered == 0);
    CHECK_FALSE(brute_force_sat(r.formula).has_value());
    CHECK(induced_hypergraph(r.formula) == k9);
    CHECK_FALSE(check_alpha_intersecting(induced_hypergraph(r.formula), 1).has_value());
}

TEST_CASE("two disjoint edges leave at least 8 of 16 assignments uncovered") {
    Hypergraph h;
    h.n = 4;
    h.edges = {{0, 1}, {2, 3}};
    const UnsatBuildResult r = build_unsat(h);
    CHECK(r.final_uncovered >= 8);
    CHECK(count_models(r.formula) == r.final_uncovered);
}

TEST_CASE("greedy decay and oracle equivalence on random multi-hypergraphs") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = 2 + static_cast<int>(draw_below(rng, 2));
        const int n = k + static_cast<int>(draw_below(rng, 13 - static_cast<std::uint64_t>(k)));
        const int m = 1 + static_cast<int>(draw_below(rng, 40));
        const Hypergraph h = random_uniform_hypergraph(rng, n, k, m);

        const UnsatBuildResult r = build_unsat(h);
        std::uint64_t uncovered = std::uint64_t{1} << n;
        for (const UnsatBuildStep& step : r.trace) {
            const std::uint64_t required = (uncovered + (std::uint64_t{1} << k) - 1) >>
                                           k;  // ceil(u / 2^k)
            if (uncovered > 0)
                CHECK(step.newly_covered >= required);
            CHECK(step.uncovered_after == uncovered - step.newly_covered);
            uncovered = step.uncovered_after;
        }
        CHECK(uncovered == r.final_uncovered);
        CHECK(count_models(r.formula) == r.final_uncovered);
        CHECK(induced_hypergraph(r.formula) == h);
    }
}

TEST_CASE("shuffled edge order still induces the input hypergraph") {
    const Hypergraph k9 = complete_graph(9);
    const UnsatBuildResult r = build_unsat(k9, EdgeOrder::Shuffle, 99);
    CHECK(r.final_uncovered == 0);
    CHECK(induced_hypergraph(r.formula) == k9);

    const UnsatBuildResult again = build_unsat(k9, EdgeOrder::Shuffle, 99);
    CHECK(again.formula == r.formula);
}

TEST_CASE("build_unsat rejects non-uniform or oversized inputs") {
    Hypergraph mixed;
    mixed.n = 3;
    mixed.edges = {{0}, {0, 1}};
    CHECK_THROWS_AS(build_unsat(mixed), std::invalid_argument);

    Hypergraph wide;
    wide.n = 31;
    CHECK_THROWS_AS(build_unsat(wide), std::invalid_argument);
}

TEST_CASE("CoverageSet bookkeeping") {
    CoverageSet cov(3);
    CHECK(cov.total() == 8);
    CHECK(cov.covered_count() == 0);
    CHECK(cov.insert(5));
    CHECK_FALSE(cov.insert(5));
    CHECK(cov.contains(5));
    CHECK_FALSE(cov.contains(4));
    CHECK(cov.covered_count() == 1);
    CHECK(cov.uncovered_count() == 7);
}
