#include "alphasat/lll.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "alphasat/metrics.hpp"
#include "alphasat/oracle.hpp"
#include "alphasat/rng.hpp"
#include "alphasat/shrink.hpp"

namespace alphasat {

namespace {

bool clause_satisfied(const Clause& c, const Assignment& a) {
    for (const Literal& lit : c.literals)
        if (a.get(lit.var) != lit.negated)
            return true;
    return false;
}

// Lowest-index violated clause, or npos.
std::size_t first_violated(const CnfFormula& f, const Assignment& a) {
    for (std::size_t j = 0; j < f.clauses.size(); ++j)
        if (!clause_satisfied(f.clauses[j], a))
            return j;
    return static_cast<std::size_t>(-1);
}

}  // namespace

MoserTardosResult moser_tardos(const CnfFormula& f, std::uint64_t seed,
                               std::uint64_t max_resamples) {
    if (max_resamples < 1)
        throw std::invalid_argument("moser_tardos: max_resamples must be >= 1");

    std::mt19937_64 rng(seed);
    Assignment a(static_cast<std::size_t>(f.n));
    for (int v = 0; v < f.n; ++v)
        a.set(v, draw_coin(rng));

    MoserTardosResult result;
    for (;;) {
        const std::size_t violated = first_violated(f, a);
        if (violated == static_cast<std::size_t>(-1)) {
            result.assignment = std::move(a);
            return result;
        }
        if (result.resamples >= max_resamples)
            return result;
        ++result.resamples;
        for (const Literal& lit : f.clauses[violated].literals)
            a.set(lit.var, draw_coin(rng));
    }
}

std::uint64_t default_max_resamples(const CnfFormula& f) {
    return std::max<std::uint64_t>(1000, 1000 * f.clauses.size());
}

DegreeCondition degree_condition(const CnfFormula& shrunk, int k, int alpha) {
    if (!(k > alpha && alpha >= 1))
        throw std::invalid_argument("degree_condition: need k > alpha >= 1");
    const auto width = shrunk.uniform_width();
    if (!shrunk.clauses.empty() && (!width.has_value() || *width != k - alpha))
        throw std::invalid_argument("degree_condition: formula width must be k - alpha");

    DegreeCondition cond;
    cond.threshold = std::exp2(static_cast<double>(k - alpha)) / (std::numbers::e * k);
    cond.max_vertex_degree = max_vertex_degree(induced_hypergraph(shrunk));
    cond.passes = static_cast<double>(cond.max_vertex_degree) < cond.threshold;
    return cond;
}

SolveResult solve_alpha_intersecting(const CnfFormula& f, int alpha,
                                     std::uint64_t seed,
                                     std::optional<std::uint64_t> max_resamples) {
    if (alpha < 1)
        throw std::invalid_argument("solve_alpha_intersecting: alpha must be >= 1");

    SolveResult result;
    if (f.clauses.empty()) {
        result.assignment = Assignment(static_cast<std::size_t>(f.n));
        result.condition.passes = true;
        return result;
    }

    const auto width = f.uniform_width();
    if (!width.has_value())
        throw std::invalid_argument("solve_alpha_intersecting: formula must be uniform");
    const int k = *width;
    if (k <= alpha)
        throw std::invalid_argument("solve_alpha_intersecting: need width k > alpha");

    const Hypergraph induced = induced_hypergraph(f);
    if (const auto violation = check_alpha_intersecting(induced, alpha))
        throw std::invalid_argument(
            "solve_alpha_intersecting: clauses " + std::to_string(violation->index_a) +
            " and " + std::to_string(violation->index_b) + " share " +
            std::to_string(violation->shared) + " variables (> alpha)");

    const CnfFormula shrunk = shrink_formula(f, alpha);
    result.condition = degree_condition(shrunk, k, alpha);

    if (!result.condition.passes) {
        // Witness for the no-guarantee verdict: count source variables at least as heavy as
        // the surviving maximum degree.
        const std::int64_t d = result.condition.max_vertex_degree;
        for (std::int64_t deg : vertex_degrees(induced))
            if (deg >= d)
                ++result.high_degree_vertices;
        return result;
    }

    const std::uint64_t cap = max_resamples.value_or(default_max_resamples(shrunk));
    MoserTardosResult mt = moser_tardos(shrunk, seed, cap);
    result.resamples = mt.resamples;
    if (!mt.success())
        throw std::runtime_error(
            "solve_alpha_intersecting: resampling failed although the degree "
            "condition holds (anomaly; raise max_resamples)");

    Assignment lifted = std::move(*mt.assignment);
    const auto shrunk_degrees = vertex_degrees(induced_hypergraph(shrunk));
    for (int v = 0; v < f.n; ++v)
        if (shrunk_degrees[static_cast<std::size_t>(v)] == 0)
            lifted.set(v, false);

    if (!verify_assignment(f, lifted))
        throw std::runtime_error(
            "solve_alpha_intersecting: lifted assignment fails the source formula "
            "(anomaly)");
    result.assignment = std::move(lifted);
    return result;
}

}  // namespace alphasat
