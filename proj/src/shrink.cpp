#include "alphasat/shrink.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "alphasat/metrics.hpp"

namespace alphasat {

namespace {

// Positions (within the sorted edge) of the beta vertices to delete: highest
// static degree first, lowest vertex id on ties.
std::vector<std::size_t> deletion_positions(const Edge& edge,
                                            const std::vector<std::int64_t>& degree,
                                            int beta) {
    std::vector<std::size_t> pos(edge.size());
    for (std::size_t j = 0; j < edge.size(); ++j)
        pos[j] = j;
    std::sort(pos.begin(), pos.end(), [&](std::size_t a, std::size_t b) {
        const std::int64_t da = degree[static_cast<std::size_t>(edge[a])];
        const std::int64_t db = degree[static_cast<std::size_t>(edge[b])];
        if (da != db)
            return da > db;
        return edge[a] < edge[b];
    });
    pos.resize(static_cast<std::size_t>(beta));
    std::sort(pos.begin(), pos.end());
    return pos;
}

int checked_width(const std::optional<int>& width, int beta) {
    if (beta < 0)
        throw std::invalid_argument("shrink: beta must be >= 0");
    if (!width.has_value())
        throw std::invalid_argument("shrink: input must be uniform");
    if (*width > 0 && beta >= *width)
        throw std::invalid_argument("shrink: beta must be smaller than the width");
    return *width;
}

}  // namespace

Hypergraph shrink_hypergraph(const Hypergraph& h, int beta) {
    checked_width(h.uniform_width(), beta);
    if (beta == 0)
        return h;

    const auto degree = vertex_degrees(h);
    Hypergraph out;
    out.n = h.n;
    out.edges.reserve(h.edges.size());
    for (const Edge& e : h.edges) {
        const auto drop = deletion_positions(e, degree, beta);
        Edge kept;
        kept.reserve(e.size() - drop.size());
        std::size_t next = 0;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (next < drop.size() && drop[next] == j)
                ++next;
            else
                kept.push_back(e[j]);
        }
        out.edges.push_back(std::move(kept));
    }
    return out;
}

CnfFormula shrink_formula(const CnfFormula& f, int beta) {
    checked_width(f.uniform_width(), beta);
    if (beta == 0)
        return f;

    const auto degree = vertex_degrees(induced_hypergraph(f));
    CnfFormula out;
    out.n = f.n;
    out.clauses.reserve(f.clauses.size());
    for (const Clause& c : f.clauses) {
        const Edge vars = c.variables();
        const auto drop = deletion_positions(vars, degree, beta);
        Clause kept;
        kept.literals.reserve(vars.size() - drop.size());
        std::size_t next = 0;
        for (std::size_t j = 0; j < c.literals.size(); ++j) {
            if (next < drop.size() && drop[next] == j)
                ++next;
            else
                kept.literals.push_back(c.literals[j]);
        }
        out.clauses.push_back(std::move(kept));
    }
    return out;
}

ShrinkWitness shrinking_witness(const Hypergraph& h, const Hypergraph& shrunk,
                                int alpha) {
    if (shrink_hypergraph(h, alpha) != shrunk)
        throw std::invalid_argument(
            "shrinking_witness: shrunk graph is not the alpha-shrink of the source");

    ShrinkWitness w;
    w.d_max = max_vertex_degree(shrunk);
    for (std::int64_t d : vertex_degrees(h))
        if (d >= w.d_max)
            ++w.count_at_least;
    return w;
}

bool exceeds_degree_root(std::int64_t count, std::int64_t d, int alpha) {
    if (alpha < 1)
        throw std::invalid_argument("exceeds_degree_root: alpha must be >= 1");
    // count > d^(1/alpha)  <=>  count^alpha > d, kept in integers.
    unsigned __int128 power = 1;
    for (int j = 0; j < alpha; ++j) {
        power *= static_cast<unsigned __int128>(count);
        if (power > static_cast<unsigned __int128>(d))
            return true;  // already exceeds; avoids overflow for large counts
    }
    return power > static_cast<unsigned __int128>(d);
}

}  // namespace alphasat
