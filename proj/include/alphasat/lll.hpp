#pragma once

#include <cstdint>
#include <optional>

#include "alphasat/types.hpp"

namespace alphasat {

struct MoserTardosResult {
    std::optional<Assignment> assignment;  // verified satisfying when present
    std::uint64_t resamples = 0;

    bool success() const { return assignment.has_value(); }
};

/// Moser-Tardos resampling: start from a seeded uniform random assignment and,
/// while a violated clause exists, resample the lowest-index one with fresh
/// uniform bits. Failure after max_resamples is a value, not a fault.
MoserTardosResult moser_tardos(const CnfFormula& f, std::uint64_t seed,
                               std::uint64_t max_resamples);

/// Default resample cap used by the solve pipeline: 1000 * m (at least 1000).
std::uint64_t default_max_resamples(const CnfFormula& f);

struct DegreeCondition {
    double threshold = 0.0;  // 2^(k-alpha) / (e k)
    std::int64_t max_vertex_degree = 0;
    bool passes = false;
};

/// Vertex-degree gate on the alpha-shrunk formula (its width must be
/// k - alpha): passes iff every variable has degree < 2^(k-alpha)/(e k).
DegreeCondition degree_condition(const CnfFormula& shrunk, int k, int alpha);

struct SolveResult {
    std::optional<Assignment> assignment;  // verified against the input formula
    DegreeCondition condition;
    std::uint64_t resamples = 0;
    // Populated when the gate fails: the shrunk graph has a variable of
    // degree d, so the source has more than d^(1/alpha) variables of degree
    // >= d and no satisfiability guarantee applies.
    std::int64_t high_degree_vertices = 0;

    bool solved() const { return assignment.has_value(); }
};

/// The guaranteed-satisfiability pipeline: verify the input is
/// alpha-intersecting of width k > alpha, alpha-shrink it, and when the
/// degree gate passes run Moser-Tardos on the shrunk formula; the assignment
/// (variables absent from the shrunk formula forced to false) satisfies the
/// input. Throws when the input is not alpha-intersecting, and reports an
/// anomaly if resampling fails despite a passing gate.
SolveResult solve_alpha_intersecting(const CnfFormula& f, int alpha,
                                     std::uint64_t seed,
                                     std::optional<std::uint64_t> max_resamples = {});

}  // namespace alphasat
