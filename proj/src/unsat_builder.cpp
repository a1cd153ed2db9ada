#include "alphasat/unsat_builder.hpp"

#include <numeric>
#include <stdexcept>

#include "alphasat/config.hpp"
#include "alphasat/metrics.hpp"
#include "alphasat/rng.hpp"

namespace alphasat {

CoverageSet::CoverageSet(int n) : n_(n) {
    if (n < 0 || n > coverage_cap())
        throw std::invalid_argument("CoverageSet: variable count exceeds coverage cap");
    words_.assign((total() + 63) >> 6, 0);
}

std::vector<std::uint64_t> clause_cover_set(const Clause& clause, int n) {
    if (n < 0 || n > coverage_cap())
        throw std::invalid_argument("clause_cover_set: n exceeds coverage cap");
    const Edge edge = clause.variables();
    for (VertexId v : edge)
        if (v >= n)
            throw std::invalid_argument("clause_cover_set: variable out of range");

    std::uint32_t pattern = 0;
    for (std::size_t j = 0; j < clause.literals.size(); ++j)
        if (clause.literals[j].negated)
            pattern |= std::uint32_t{1} << j;

    std::vector<std::uint64_t> out;
    out.reserve(std::uint64_t{1} << (n - static_cast<int>(edge.size())));
    for_each_cover_index(edge, pattern, n,
                         [&](std::uint64_t index) { out.push_back(index); });
    return out;
}

PolarityChoice best_polarity(const Edge& edge, const CoverageSet& coverage) {
    const int k = static_cast<int>(edge.size());
    PolarityChoice best;
    std::uint64_t best_count = 0;
    std::uint32_t best_pattern = 0;
    const std::uint32_t patterns = std::uint32_t{1} << k;
    for (std::uint32_t p = 0; p < patterns; ++p) {
        std::uint64_t count = 0;
        for_each_cover_index(edge, p, coverage.n(), [&](std::uint64_t index) {
            if (!coverage.contains(index))
                ++count;
        });
        if (count > best_count) {  // ascending scan keeps the smallest pattern on ties
            best_count = count;
            best_pattern = p;
        }
    }
    best.pattern = best_pattern;
    best.newly_covered = best_count;
    best.clause = clause_from_pattern(edge, best_pattern);
    return best;
}

UnsatBuildResult build_unsat(const Hypergraph& h, EdgeOrder order, std::uint64_t seed) {
    const auto width = h.uniform_width();
    if (!width.has_value())
        throw std::invalid_argument("build_unsat: hypergraph must be uniform");
    if (h.n < 0 || h.n > coverage_cap())
        throw std::invalid_argument("build_unsat: n exceeds coverage cap");

    std::vector<std::size_t> processing(h.edges.size());
    std::iota(processing.begin(), processing.end(), std::size_t{0});
    if (order == EdgeOrder::Shuffle) {
        std::mt19937_64 rng(seed);
        shuffle_indices(rng, processing.size(), [&](std::uint64_t a, std::uint64_t b) {
            std::swap(processing[a], processing[b]);
        });
    }

    UnsatBuildResult result;
    result.formula.n = h.n;
    result.formula.clauses.resize(h.edges.size());
    result.trace.reserve(h.edges.size());

    CoverageSet coverage(h.n);
    for (std::size_t edge_index : processing) {
        const Edge& edge = h.edges[edge_index];
        PolarityChoice choice = best_polarity(edge, coverage);
        for_each_cover_index(edge, choice.pattern, h.n,
                             [&](std::uint64_t index) { coverage.insert(index); });
        result.formula.clauses[edge_index] = std::move(choice.clause);
        result.trace.push_back(UnsatBuildStep{edge_index, choice.newly_covered,
                                              coverage.uncovered_count()});
    }
    result.final_uncovered = coverage.uncovered_count();
    return result;
}

}  // namespace alphasat
