#include "alphasat/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace alphasat {

int shared_vertex_count(const Edge& a, const Edge& b) {
    int shared = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (a[i] > b[j])
            ++j;
        else {
            ++shared;
            ++i;
            ++j;
        }
    }
    return shared;
}

bool edges_intersect(const Edge& a, const Edge& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (a[i] > b[j])
            ++j;
        else
            return true;
    }
    return false;
}

std::vector<std::int64_t> vertex_degrees(const Hypergraph& h) {
    std::vector<std::int64_t> deg(static_cast<std::size_t>(h.n), 0);
    for (const Edge& e : h.edges)
        for (VertexId v : e)
            ++deg[static_cast<std::size_t>(v)];
    return deg;
}

std::int64_t max_vertex_degree(const Hypergraph& h) {
    std::int64_t best = 0;
    for (std::int64_t d : vertex_degrees(h))
        best = std::max(best, d);
    return best;
}

std::int64_t clause_degree(const Hypergraph& h, std::size_t index) {
    if (index >= h.edges.size())
        throw std::out_of_range("clause_degree: edge index out of range");
    std::int64_t count = 0;
    for (std::size_t j = 0; j < h.edges.size(); ++j)
        if (j != index && edges_intersect(h.edges[index], h.edges[j]))
            ++count;
    return count;
}

std::int64_t intersection_pairs(const Hypergraph& h) {
    std::int64_t pairs = 0;
    for (std::size_t a = 0; a < h.edges.size(); ++a)
        for (std::size_t b = a + 1; b < h.edges.size(); ++b)
            if (edges_intersect(h.edges[a], h.edges[b]))
                ++pairs;
    return pairs;
}

std::optional<IntersectionViolation> check_alpha_intersecting(const Hypergraph& h,
                                                              int alpha) {
    for (std::size_t a = 0; a < h.edges.size(); ++a)
        for (std::size_t b = a + 1; b < h.edges.size(); ++b) {
            const int shared = shared_vertex_count(h.edges[a], h.edges[b]);
            if (shared > alpha)
                return IntersectionViolation{a, b, shared};
        }
    return std::nullopt;
}

Hypergraph induced_hypergraph(const CnfFormula& f) {
    Hypergraph h;
    h.n = f.n;
    h.edges.reserve(f.clauses.size());
    for (const Clause& c : f.clauses)
        h.edges.push_back(c.variables());
    return h;
}

MetricsReport metrics(const Hypergraph& h) {
    MetricsReport r;
    r.n = h.n;
    r.m = static_cast<std::int64_t>(h.edges.size());
    r.width = h.uniform_width().value_or(0);
    r.delta_vertex = max_vertex_degree(h);

    // One pairwise pass feeds i, per-edge degrees and the measured alpha.
    std::vector<std::int64_t> edge_deg(h.edges.size(), 0);
    for (std::size_t a = 0; a < h.edges.size(); ++a)
        for (std::size_t b = a + 1; b < h.edges.size(); ++b) {
            const int shared = shared_vertex_count(h.edges[a], h.edges[b]);
            if (shared > 0) {
                ++r.i;
                ++edge_deg[a];
                ++edge_deg[b];
                r.alpha_measured = std::max<std::int64_t>(r.alpha_measured, shared);
            }
        }
    for (std::int64_t d : edge_deg)
        r.delta_clause = std::max(r.delta_clause, d);
    return r;
}

MetricsReport metrics(const CnfFormula& f) { return metrics(induced_hypergraph(f)); }

CnfFormula complete_formula(int k) {
    if (k < 1 || k > 20)
        throw std::invalid_argument("complete_formula: need 1 <= k <= 20");
    Edge vars(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v)
        vars[static_cast<std::size_t>(v)] = v;

    CnfFormula f;
    f.n = k;
    const std::uint32_t total = std::uint32_t{1} << k;
    f.clauses.reserve(total);
    for (std::uint32_t pattern = 0; pattern < total; ++pattern)
        f.clauses.push_back(clause_from_pattern(vars, pattern));
    return f;
}

Clause clause_from_pattern(const Edge& edge, std::uint32_t pattern) {
    Clause c;
    c.literals.reserve(edge.size());
    for (std::size_t j = 0; j < edge.size(); ++j)
        c.literals.push_back(Literal{edge[j], ((pattern >> j) & 1u) != 0});
    return c;
}

}  // namespace alphasat
