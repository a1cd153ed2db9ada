#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "alphasat/types.hpp"

namespace alphasat {

/// Number of shared vertices of two sorted edges.
int shared_vertex_count(const Edge& a, const Edge& b);

/// True as soon as the edges share at least one vertex.
bool edges_intersect(const Edge& a, const Edge& b);

/// result[v] = number of edges containing v.
std::vector<std::int64_t> vertex_degrees(const Hypergraph& h);

std::int64_t max_vertex_degree(const Hypergraph& h);

/// Number of OTHER edges sharing at least one vertex with edges[index];
/// duplicates each count. Throws on bad index.
std::int64_t clause_degree(const Hypergraph& h, std::size_t index);

/// Number of unordered pairs of distinct edge indices sharing >= 1 vertex.
std::int64_t intersection_pairs(const Hypergraph& h);

struct IntersectionViolation {
    std::size_t index_a = 0;
    std::size_t index_b = 0;
    int shared = 0;
};

/// nullopt when every pair of edges shares at most alpha vertices; otherwise
/// the first violating pair in index order.
std::optional<IntersectionViolation> check_alpha_intersecting(const Hypergraph& h,
                                                              int alpha);

/// Edge j = variable set of clause j; order and n preserved.
Hypergraph induced_hypergraph(const CnfFormula& f);

MetricsReport metrics(const CnfFormula& f);
MetricsReport metrics(const Hypergraph& h);

/// All 2^k sign patterns over variables 0..k-1; pattern p negates variable j
/// iff bit j of p is set, clauses emitted for p = 0, 1, ..., 2^k - 1.
/// Unsatisfiable. Requires 1 <= k <= 20.
CnfFormula complete_formula(int k);

/// Clause on the edge's variables; bit j of pattern negates the j-th smallest.
Clause clause_from_pattern(const Edge& edge, std::uint32_t pattern);

}  // namespace alphasat
