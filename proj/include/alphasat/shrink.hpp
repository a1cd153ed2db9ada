#pragma once

#include <cstdint>

#include "alphasat/types.hpp"

namespace alphasat {

/// Removes from every edge its beta vertices of maximum degree, with degrees
/// taken once on the input hypergraph; ties delete the lowest vertex id
/// first. Uniform width shrinks from w to w - beta; n and edge order are
/// preserved. Throws on non-uniform input or beta >= width.
Hypergraph shrink_hypergraph(const Hypergraph& h, int beta);

/// Same vertex selection on the induced hypergraph; each clause drops the
/// literals of its deleted variables. Every satisfying assignment of the
/// result also satisfies the input.
CnfFormula shrink_formula(const CnfFormula& f, int beta);

/// Witness data for the high-degree survival bound: if the alpha-shrink of an
/// alpha-intersecting (k+alpha)-uniform hypergraph has a vertex of degree d,
/// the source has strictly more than d^(1/alpha) vertices of degree >= d.
struct ShrinkWitness {
    std::int64_t d_max = 0;           // max vertex degree of the shrunk graph
    std::int64_t count_at_least = 0;  // source vertices with degree >= d_max
};

/// Requires shrunk == shrink_hypergraph(h, alpha); throws when inconsistent.
ShrinkWitness shrinking_witness(const Hypergraph& h, const Hypergraph& shrunk,
                                int alpha);

/// Exact integer form of count > d^(1/alpha), i.e. count^alpha > d.
bool exceeds_degree_root(std::int64_t count, std::int64_t d, int alpha);

}  // namespace alphasat
