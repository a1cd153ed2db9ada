#include "alphasat/types.hpp"

#include <algorithm>

namespace alphasat {

std::optional<int> Hypergraph::uniform_width() const {
    if (edges.empty())
        return 0;
    const std::size_t w = edges.front().size();
    for (const Edge& e : edges)
        if (e.size() != w)
            return std::nullopt;
    return static_cast<int>(w);
}

void Hypergraph::validate() const {
    if (n < 0)
        throw std::invalid_argument("Hypergraph: negative vertex count");
    for (const Edge& e : edges) {
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] < 0 || e[j] >= n)
                throw std::invalid_argument("Hypergraph: vertex out of range");
            if (j > 0 && e[j - 1] >= e[j])
                throw std::invalid_argument(
                    "Hypergraph: edge vertices must be strictly increasing");
        }
    }
}

Clause Clause::from_literals(std::vector<Literal> lits) {
    std::sort(lits.begin(), lits.end(),
              [](const Literal& a, const Literal& b) { return a.var < b.var; });
    for (std::size_t j = 1; j < lits.size(); ++j)
        if (lits[j - 1].var == lits[j].var)
            throw std::invalid_argument("Clause: repeated variable");
    return Clause{std::move(lits)};
}

Edge Clause::variables() const {
    Edge vars;
    vars.reserve(literals.size());
    for (const Literal& lit : literals)
        vars.push_back(lit.var);
    return vars;
}

std::optional<int> CnfFormula::uniform_width() const {
    if (clauses.empty())
        return 0;
    const int w = clauses.front().width();
    for (const Clause& c : clauses)
        if (c.width() != w)
            return std::nullopt;
    return w;
}

void CnfFormula::validate() const {
    if (n < 0)
        throw std::invalid_argument("CnfFormula: negative variable count");
    for (const Clause& c : clauses) {
        for (std::size_t j = 0; j < c.literals.size(); ++j) {
            const Literal& lit = c.literals[j];
            if (lit.var < 0 || lit.var >= n)
                throw std::invalid_argument("CnfFormula: variable out of range");
            if (j > 0 && c.literals[j - 1].var >= lit.var)
                throw std::invalid_argument(
                    "CnfFormula: clause literals must be sorted by distinct variables");
        }
    }
}

std::uint64_t Assignment::index() const {
    if (bits.size() > 63)
        throw std::invalid_argument("Assignment::index: too many variables");
    std::uint64_t idx = 0;
    for (std::size_t v = 0; v < bits.size(); ++v)
        if (bits[v])
            idx |= std::uint64_t{1} << v;
    return idx;
}

Assignment Assignment::from_index(std::uint64_t idx, int n) {
    if (n < 0 || n > 63)
        throw std::invalid_argument("Assignment::from_index: bad variable count");
    Assignment a(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        a.set(v, (idx >> v) & 1u);
    return a;
}

}  // namespace alphasat
