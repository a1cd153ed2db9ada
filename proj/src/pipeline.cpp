#include "alphasat/pipeline.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "alphasat/combinatorics.hpp"
#include "alphasat/config.hpp"
#include "alphasat/maximal.hpp"
#include "alphasat/metrics.hpp"
#include "alphasat/shrink.hpp"

namespace alphasat {

namespace {

// min_edges_bound(n, k+alpha, alpha) >= n 2^(k+alpha), evaluated without
// overflow; binomials beyond 128 bits count as "bound satisfied" since the
// right-hand side is checked to stay well below that range.
bool dense_enough(std::int64_t n, int width, int alpha) {
    const auto per_edge = binomial_exact(width, alpha + 1);
    if (!per_edge)
        throw std::overflow_error("auto_n: C(k+alpha, alpha+1) overflows");
    const unsigned __int128 denominator = *per_edge * *per_edge;
    if (width > 62)
        throw std::overflow_error("auto_n: 2^(k+alpha) out of range");
    const unsigned __int128 target =
        static_cast<unsigned __int128>(n) * (std::uint64_t{1} << width);

    const auto numerator = binomial_exact(n, alpha + 1);
    if (!numerator)
        return true;
    const unsigned __int128 bound = (*numerator + denominator - 1) / denominator;
    return bound >= target;
}

}  // namespace

std::int64_t auto_n(int k, int alpha) {
    if (!(k > alpha && alpha >= 1))
        throw std::invalid_argument("auto_n: need k > alpha >= 1");
    const int width = k + alpha;

    std::int64_t lo = width;
    std::int64_t hi = lo;
    while (!dense_enough(hi, width, alpha)) {
        if (hi > (std::int64_t{1} << 50))
            throw std::overflow_error("auto_n: search range exhausted");
        hi *= 2;
    }
    // first n in (lo, hi] satisfying the monotone density predicate
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (dense_enough(mid, width, alpha))
            hi = mid;
        else
            lo = mid + 1;
    }
    return hi;
}

PipelineResult upper_bound_pipeline(int k, int alpha, const PipelineOptions& options) {
    if (!(k > alpha && alpha >= 1))
        throw std::invalid_argument("upper_bound_pipeline: need k > alpha >= 1");
    const int width = k + alpha;

    PipelineResult result;
    result.k = k;
    result.alpha = alpha;
    result.n = options.n_override.value_or(auto_n(k, alpha));
    if (result.n < width)
        throw std::invalid_argument("upper_bound_pipeline: n below k + alpha");
    if (width > 62)
        throw std::overflow_error("upper_bound_pipeline: k + alpha too large");
    const unsigned __int128 density =
        static_cast<unsigned __int128>(result.n) * (std::uint64_t{1} << width);
    if (density > static_cast<unsigned __int128>(UINT64_MAX))
        throw std::overflow_error("upper_bound_pipeline: density target exceeds 64 bits");
    result.density_target = static_cast<std::uint64_t>(density);

    if (options.with_polarity && result.n > coverage_cap())
        throw std::invalid_argument(
            "upper_bound_pipeline: with_polarity needs n <= coverage cap (n = " +
            std::to_string(result.n) + ", cap = " + std::to_string(coverage_cap()) +
            ")");

    GreedyOptions build;
    build.enumeration_budget = options.enumeration_budget;
    build.max_consecutive_rejections = options.max_consecutive_rejections;
    const std::uint64_t candidates =
        binomial_capped(result.n, width, options.enumeration_budget);
    if (candidates > options.enumeration_budget) {
        // Enumeration infeasible: sample greedily up to the density target.
        // The output is not certified maximal; the density check below is
        // what the construction actually needs.
        build.allow_sampling = true;
        build.target_edges = result.density_target;
    }
    GreedyResult built = greedy_alpha_build(static_cast<int>(result.n), width, alpha,
                                            options.seed, build);
    result.certified_maximal = built.certified_maximal;
    result.source = std::move(built.graph);
    result.m = result.source.edges.size();

    if (result.m < result.density_target)
        throw std::runtime_error(
            "upper_bound_pipeline: density target missed (m = " +
            std::to_string(result.m) + " < " + std::to_string(result.density_target) +
            "); raise n (auto_n = " + std::to_string(auto_n(k, alpha)) + ")");

    result.shrunk = shrink_hypergraph(result.source, alpha);

    result.max_vertex_degree = max_vertex_degree(result.shrunk);
    result.degree_bound =
        std::pow(static_cast<double>(result.m) * width, 1.0 / (1.0 + 1.0 / alpha));
    result.degree_bound_ok =
        static_cast<double>(result.max_vertex_degree) <= result.degree_bound;
    result.intersection_pair_count = intersection_pairs(result.shrunk);
    result.intersections_ok =
        result.intersection_pair_count <=
        static_cast<std::int64_t>(result.m) * result.max_vertex_degree;

    if (options.with_polarity) {
        result.polarity = build_unsat(result.source);
        result.shrunk_formula = shrink_formula(result.polarity->formula, alpha);
    }
    return result;
}

}  // namespace alphasat
