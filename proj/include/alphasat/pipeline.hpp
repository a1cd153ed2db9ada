#pragma once

#include <cstdint>
#include <optional>

#include "alphasat/types.hpp"
#include "alphasat/unsat_builder.hpp"

namespace alphasat {

/// Smallest n with min_edges_bound(n, k+alpha, alpha) >= n 2^(k+alpha): the
/// vertex count at which every maximal alpha-intersecting (k+alpha)-uniform
/// hypergraph is dense enough for the unsatisfiable construction. Monotone
/// search over the exact integer bound; throws on overflow for huge k.
std::int64_t auto_n(int k, int alpha);

struct PipelineOptions {
    std::optional<std::int64_t> n_override;
    bool with_polarity = false;
    std::uint64_t seed = 0;
    std::uint64_t enumeration_budget = 8'000'000;
    std::uint64_t max_consecutive_rejections = 500'000;
};

struct PipelineResult {
    int k = 0;
    int alpha = 0;
    std::int64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t density_target = 0;      // n 2^(k+alpha)
    bool certified_maximal = false;        // false when the builder sampled

    Hypergraph source;   // (k+alpha)-uniform, alpha-intersecting
    Hypergraph shrunk;   // its alpha-shrink, k-uniform

    // Structural report on the shrunk hypergraph.
    std::int64_t max_vertex_degree = 0;
    double degree_bound = 0.0;             // (m (k+alpha))^(1 / (1 + 1/alpha))
    std::int64_t intersection_pair_count = 0;
    bool degree_bound_ok = false;          // max_vertex_degree <= degree_bound
    bool intersections_ok = false;         // i <= m * max_vertex_degree

    // Present when with_polarity: the unsatisfiable (k+alpha)-CNF and its
    // alpha-shrink (unsatisfiable as well, clause subsets).
    std::optional<UnsatBuildResult> polarity;
    std::optional<CnfFormula> shrunk_formula;

    bool structure_ok() const { return degree_bound_ok && intersections_ok; }
};

/// End-to-end construction: build a maximal alpha-intersecting
/// (k+alpha)-uniform hypergraph on auto_n (or n_override) vertices, check the
/// density m >= n 2^(k+alpha) (error when missed), alpha-shrink it, and
/// measure the degree / intersection bounds. with_polarity additionally runs
/// the greedy clause construction, which needs n within coverage_cap().
PipelineResult upper_bound_pipeline(int k, int alpha, const PipelineOptions& options = {});

}  // namespace alphasat
