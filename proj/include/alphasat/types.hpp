#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace alphasat {

/// Vertex of a hypergraph / variable of a formula, 0-indexed.
using VertexId = int;

/// An edge is a strictly increasing list of distinct vertex ids.
using Edge = std::vector<VertexId>;

/// Width k and intersection bound alpha of an alpha-intersecting k-CNF.
struct Params {
    int k = 0;
    int alpha = 0;

    /// Requires k >= 1 and 1 <= alpha <= k.
    void validate() const {
        if (k < 1)
            throw std::invalid_argument("Params: k must be >= 1");
        if (alpha < 1 || alpha > k)
            throw std::invalid_argument("Params: need 1 <= alpha <= k");
    }
};

/// k-uniform (multi-)hypergraph over vertices [0, n). Duplicate edges are
/// allowed; edges themselves hold distinct sorted vertices.
struct Hypergraph {
    int n = 0;
    std::vector<Edge> edges;

    std::size_t edge_count() const { return edges.size(); }

    /// Common edge size, or nullopt when edges differ in size. An empty
    /// hypergraph reports width 0.
    std::optional<int> uniform_width() const;

    /// Checks vertex ranges, sortedness and distinctness within each edge.
    void validate() const;

    bool operator==(const Hypergraph&) const = default;
};

struct Literal {
    VertexId var = 0;
    bool negated = false;

    bool operator==(const Literal&) const = default;
    auto operator<=>(const Literal&) const = default;
};

/// Disjunction of literals on distinct variables, kept sorted by variable.
struct Clause {
    std::vector<Literal> literals;

    /// Sorts by variable and rejects repeated variables.
    static Clause from_literals(std::vector<Literal> lits);

    int width() const { return static_cast<int>(literals.size()); }

    /// The variable set of the clause as an edge (sorted, distinct).
    Edge variables() const;

    bool operator==(const Clause&) const = default;
};

struct CnfFormula {
    int n = 0;
    std::vector<Clause> clauses;

    std::size_t clause_count() const { return clauses.size(); }

    std::optional<int> uniform_width() const;

    void validate() const;

    bool operator==(const CnfFormula&) const = default;
};

/// Total truth assignment over n variables.
struct Assignment {
    std::vector<std::uint8_t> bits;

    explicit Assignment(std::size_t n = 0, bool value = false)
        : bits(n, value ? 1 : 0) {}

    std::size_t size() const { return bits.size(); }
    bool get(VertexId v) const { return bits[static_cast<std::size_t>(v)] != 0; }
    void set(VertexId v, bool value) { bits[static_cast<std::size_t>(v)] = value ? 1 : 0; }

    /// Assignment encoded as an index: variable v = bit v, variable 0 is the
    /// least significant bit. Requires size() <= 63.
    std::uint64_t index() const;
    static Assignment from_index(std::uint64_t idx, int n);

    bool operator==(const Assignment&) const = default;
};

/// Measured quantities of a formula / its induced hypergraph.
struct MetricsReport {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t i = 0;              // clause intersection pairs
    std::int64_t delta_vertex = 0;   // max vertex degree
    std::int64_t delta_clause = 0;   // max clause degree
    std::int64_t alpha_measured = 0; // max pairwise shared-variable count
    std::int64_t width = 0;          // uniform width, 0 if empty or mixed

    bool operator==(const MetricsReport&) const = default;
};

}  // namespace alphasat
