#include "doctest.h"

#include <algorithm>
#include <random>

#include "alphasat/metrics.hpp"
#include "alphasat/oracle.hpp"
#include "alphasat/rng.hpp"
#include "test_support.hpp"

using namespace alphasat;
using namespace alphasat::testing;

namespace {

Hypergraph four_copies() {
    Hypergraph h;
    h.n = 2;
    h.edges = {{0, 1}, {0, 1}, {0, 1}, {0, 1}};
    return h;
}

Hypergraph path_graph() {
    Hypergraph h;
    h.n = 4;
    h.edges = {{0, 1}, {1, 2}, {2, 3}};
    return h;
}

}  // namespace

TEST_CASE("vertex_degrees counts edge memberships") {
    CHECK(vertex_degrees(path_graph()) == std::vector<std::int64_t>{1, 2, 2, 1});

    Hypergraph empty;
    empty.n = 3;
    CHECK(vertex_degrees(empty) == std::vector<std::int64_t>{0, 0, 0});

    CHECK(vertex_degrees(four_copies()) == std::vector<std::int64_t>{4, 4});
}

TEST_CASE("clause_degree counts other intersecting edges, duplicates included") {
    const Hypergraph dup = four_copies();
    for (std::size_t j = 0; j < 4; ++j)
        CHECK(clause_degree(dup, j) == 3);

    Hypergraph disjoint;
    disjoint.n = 4;
    disjoint.edges = {{0, 1}, {2, 3}};
    CHECK(clause_degree(disjoint, 0) == 0);

    CHECK(clause_degree(path_graph(), 1) == 2);

    CHECK_THROWS_AS(clause_degree(disjoint, 2), std::out_of_range);
}

TEST_CASE("intersection_pairs counts unordered intersecting pairs once") {
    CHECK(intersection_pairs(four_copies()) == 6);  // C(4,2)
    CHECK(intersection_pairs(path_graph()) == 2);

    Hypergraph disjoint;
    disjoint.n = 6;
    disjoint.edges = {{0, 1}, {2, 3}, {4, 5}};
    CHECK(intersection_pairs(disjoint) == 0);
}

TEST_CASE("check_alpha_intersecting reports the first violating pair") {
    Hypergraph h;
    h.n = 4;
    h.edges = {{0, 1, 2}, {0, 1, 3}};

    const auto violation = check_alpha_intersecting(h, 1);
    REQUIRE(violation.has_value());
    CHECK(violation->index_a == 0);
    CHECK(violation->index_b == 1);
    CHECK(violation->shared == 2);

    CHECK_FALSE(check_alpha_intersecting(h, 2).has_value());

    CHECK_FALSE(check_alpha_intersecting(complete_graph(9), 1).has_value());
}

TEST_CASE("induced_hypergraph maps clause variable sets in order") {
    CnfFormula f;
    f.n = 2;
    f.clauses = {clause_of({0}, {1})};
    const Hypergraph h = induced_hypergraph(f);
    CHECK(h.n == 2);
    CHECK(h.edges == std::vector<Edge>{{0, 1}});

    CHECK(induced_hypergraph(complete_formula(2)).edges ==
          std::vector<Edge>{{0, 1}, {0, 1}, {0, 1}, {0, 1}});

    CnfFormula empty;
    empty.n = 0;
    CHECK(induced_hypergraph(empty).edges.empty());
}

TEST_CASE("metrics on small worked instances") {
    const MetricsReport complete2 = metrics(complete_formula(2));
    CHECK(complete2.n == 2);
    CHECK(complete2.m == 4);
    CHECK(complete2.i == 6);
    CHECK(complete2.delta_clause == 3);
    CHECK(complete2.alpha_measured == 2);
    CHECK(complete2.width == 2);

    CnfFormula empty;
    CHECK(metrics(empty) == MetricsReport{});

    CnfFormula single;
    single.n = 3;
    single.clauses = {clause_of({0, 1, 2}, {})};
    const MetricsReport r = metrics(single);
    CHECK(r.m == 1);
    CHECK(r.i == 0);
    CHECK(r.delta_clause == 0);
}

TEST_CASE("complete_formula enumerates all sign patterns") {
    const CnfFormula f1 = complete_formula(1);
    REQUIRE(f1.clauses.size() == 2);
    CHECK(f1.clauses[0] == clause_of({0}, {}));
    CHECK(f1.clauses[1] == clause_of({}, {0}));

    const CnfFormula f2 = complete_formula(2);
    CHECK(f2.clauses.size() == 4);
    CHECK_FALSE(brute_force_sat(f2).has_value());

    // dropping any single clause leaves exactly its falsifying assignment
    for (std::size_t skip = 0; skip < 4; ++skip) {
        CnfFormula partial;
        partial.n = 2;
        for (std::size_t j = 0; j < 4; ++j)
            if (j != skip)
                partial.clauses.push_back(f2.clauses[j]);
        CHECK(brute_force_sat(partial).has_value());
    }

    CHECK_THROWS_AS(complete_formula(0), std::invalid_argument);
    CHECK_THROWS_AS(complete_formula(21), std::invalid_argument);
}

TEST_CASE("degree sum and pair-degree identities on random graphs") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const int k = 2 + static_cast<int>(draw_below(rng, 3));
        const int n = k + static_cast<int>(draw_below(rng, 10));
        const int m = static_cast<int>(draw_below(rng, 20));
        const Hypergraph h = random_uniform_hypergraph(rng, n, k, m);

        std::int64_t degree_sum = 0;
        for (std::int64_t d : vertex_degrees(h))
            degree_sum += d;
        CHECK(degree_sum == static_cast<std::int64_t>(m) * k);

        std::int64_t clause_degree_sum = 0;
        for (std::size_t j = 0; j < h.edges.size(); ++j)
            clause_degree_sum += clause_degree(h, j);
        CHECK(clause_degree_sum % 2 == 0);
        CHECK(intersection_pairs(h) == clause_degree_sum / 2);

        // any multi-hypergraph is k-intersecting; simple ones even (k-1)-
        CHECK_FALSE(check_alpha_intersecting(h, k).has_value());
    }
}

TEST_CASE("duplicate edges violate alpha-intersecting for alpha < k") {
    Hypergraph h;
    h.n = 3;
    h.edges = {{0, 1, 2}, {0, 1, 2}};
    const auto violation = check_alpha_intersecting(h, 2);
    REQUIRE(violation.has_value());
    CHECK(violation->shared == 3);
    CHECK_FALSE(check_alpha_intersecting(h, 3).has_value());
}

TEST_CASE("metrics is invariant under clause reordering") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 4 + static_cast<int>(draw_below(rng, 6));
        CnfFormula f = random_formula(rng, n, 3, 12);
        const MetricsReport before = metrics(f);
        shuffle_indices(rng, f.clauses.size(), [&](std::uint64_t a, std::uint64_t b) {
            std::swap(f.clauses[a], f.clauses[b]);
        });
        CHECK(metrics(f) == before);
    }
}

TEST_CASE("Params validation") {
    CHECK_NOTHROW((Params{3, 1}.validate()));
    CHECK_NOTHROW((Params{3, 3}.validate()));
    CHECK_THROWS_AS((Params{0, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Params{3, 0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Params{3, 4}.validate()), std::invalid_argument);
}

TEST_CASE("intersection pairs never exceed m times the max clause degree") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(draw_below(rng, 8));
        const MetricsReport r =
            metrics(random_uniform_hypergraph(rng, n, 3, static_cast<int>(draw_below(rng, 25))));
        CHECK(r.i <= r.m * r.delta_clause);
    }
}

TEST_CASE("complete_formula intersection structure") {
    for (int k = 1; k <= 4; ++k) {
        const MetricsReport r = metrics(complete_formula(k));
        const std::int64_t clauses = std::int64_t{1} << k;
        CHECK(r.i == clauses * (clauses - 1) / 2);
        CHECK(r.delta_clause == clauses - 1);
    }
}
