#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "alphasat/combinatorics.hpp"
#include "alphasat/maximal.hpp"
#include "alphasat/metrics.hpp"
#include "test_support.hpp"

using namespace alphasat;
using namespace alphasat::testing;

namespace {

// Independent maximality oracle: direct pairwise intersection test per
// candidate, no CoverIndex involved.
bool addable_somewhere(const Hypergraph& h, int k, int alpha) {
    bool found = false;
    for_each_combination(h.n, k, [&](const std::vector<int>& candidate) {
        for (const Edge& e : h.edges)
            if (shared_vertex_count(e, candidate) > alpha)
                return true;  // blocked, next candidate
        found = true;
        return false;
    });
    return found;
}

}  // namespace

TEST_CASE("min_edges_bound evaluates the exact formula") {
    CHECK(min_edges_bound(7, 3, 1) == 3);    // ceil(21/9)
    CHECK(min_edges_bound(9, 2, 1) == 36);   // 36/1
    CHECK(min_edges_bound(5, 5, 2) == 1);    // n = k
    CHECK(min_edges_bound(60, 5, 2) == 343);  // ceil(34220/100)

    CHECK_THROWS_AS(min_edges_bound(3, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(min_edges_bound(4, 4, 4), std::invalid_argument);
}

TEST_CASE("build_maximal forces the complete graph at n=9, k=2, alpha=1") {
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
        const Hypergraph h = build_maximal(9, 2, 1, seed);
        CHECK(h.edges.size() == 36);
        std::set<Edge> edges(h.edges.begin(), h.edges.end());
        CHECK(edges.size() == 36);
        CHECK_FALSE(check_alpha_intersecting(h, 1).has_value());
    }
}

TEST_CASE("build_maximal single-edge case n = k") {
    const Hypergraph h = build_maximal(3, 3, 1, 7);
    CHECK(h.edges == std::vector<Edge>{{0, 1, 2}});
}

TEST_CASE("build_maximal n=7 k=3 alpha=1 lands in [3, 7] and is maximal") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Hypergraph h = build_maximal(7, 3, 1, seed);
        CHECK(h.edges.size() >= 3);
        CHECK(h.edges.size() <= 7);  // 21 vertex pairs / 3 pairs per edge
        CHECK_FALSE(check_alpha_intersecting(h, 1).has_value());
        CHECK_FALSE(addable_somewhere(h, 3, 1));
    }
}

TEST_CASE("build_maximal output passes the edge bound and maximality check") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 15; ++trial) {
        const int alpha = 1 + static_cast<int>(draw_below(rng, 2));
        const int k = alpha + 1 + static_cast<int>(draw_below(rng, 3));
        const int n = k + static_cast<int>(draw_below(rng, 16));
        const Hypergraph h = build_maximal(n, k, alpha, rng());

        CHECK(h.edges.size() >= min_edges_bound(n, k, alpha));
        CHECK_FALSE(check_alpha_intersecting(h, alpha).has_value());

        const MaximalityCheck check = verify_maximality(h, alpha);
        CHECK(check.ok);
        CHECK(check.exhaustive);

        // CoverIndex bookkeeping: m * C(k, alpha+1) distinct subsets
        CoverIndex cover(alpha, n);
        for (const Edge& e : h.edges)
            cover.insert_edge(e);
        const auto per_edge = binomial_exact(k, alpha + 1);
        REQUIRE(per_edge.has_value());
        CHECK(cover.size() ==
              h.edges.size() * static_cast<std::uint64_t>(*per_edge));
    }
}

TEST_CASE("build_maximal is deterministic per seed") {
    const Hypergraph a = build_maximal(12, 3, 1, 1234);
    const Hypergraph b = build_maximal(12, 3, 1, 1234);
    const Hypergraph c = build_maximal(12, 3, 1, 1235);
    CHECK(a == b);
    CHECK(a.edges != c.edges);  // overwhelmingly likely for distinct seeds
}

TEST_CASE("verify_maximality finds the missing edge of K_9") {
    Hypergraph h = complete_graph(9);
    const Edge removed = h.edges[17];
    h.edges.erase(h.edges.begin() + 17);

    const MaximalityCheck check = verify_maximality(h, 1);
    CHECK_FALSE(check.ok);
    REQUIRE(check.addable.has_value());
    CHECK(*check.addable == removed);

    Hypergraph single;
    single.n = 3;
    single.edges = {{0, 1, 2}};
    CHECK(verify_maximality(single, 1).ok);
}

TEST_CASE("verify_maximality rejects non alpha-intersecting input") {
    Hypergraph h;
    h.n = 4;
    h.edges = {{0, 1, 2}, {0, 1, 3}};
    CHECK_THROWS_AS(verify_maximality(h, 1), std::invalid_argument);
}

TEST_CASE("CoverIndex rejects double coverage") {
    CoverIndex cover(1, 5);
    cover.insert_edge({0, 1, 2});
    CHECK(cover.size() == 3);
    CHECK(cover.blocks({0, 1, 4}));       // pair {0,1} covered
    CHECK_FALSE(cover.blocks({0, 3, 4}));
    CHECK_THROWS_AS(cover.insert_edge({0, 1, 4}), std::logic_error);
}

TEST_CASE("greedy enumeration budget errors without sampling") {
    CHECK_THROWS_AS(build_maximal(3000, 12, 1, 1), std::invalid_argument);
}

TEST_CASE("gen_random_alpha_formula produces alpha-intersecting width-k output") {
    const CnfFormula f = gen_random_alpha_formula(3000, 12, 1, 300, 77);
    CHECK(f.n == 3000);
    CHECK(f.clauses.size() == 300);
    CHECK(f.uniform_width() == 12);
    CHECK_FALSE(check_alpha_intersecting(induced_hypergraph(f), 1).has_value());

    CHECK(gen_random_alpha_formula(10, 3, 1, 0, 5).clauses.empty());
    CHECK(gen_random_alpha_formula(10, 3, 1, 1, 5).clauses.size() == 1);
}

TEST_CASE("gen_random_alpha_formula errors when the target is unreachable") {
    // n = 18, k = 10, alpha = 1: two width-10 edges over 18 vertices would
    // share at least 2, so no second clause can ever be added.
    CHECK_THROWS_AS(gen_random_alpha_formula(18, 10, 1, 2, 3), std::runtime_error);
}

TEST_CASE("sampled greedy runs are labeled uncertified") {
    GreedyOptions options;
    options.target_edges = 50;
    options.allow_sampling = true;
    const GreedyResult r = greedy_alpha_build(500, 4, 1, 9, options);
    CHECK(r.target_reached);
    CHECK_FALSE(r.certified_maximal);
    CHECK(r.graph.edges.size() == 50);
}
