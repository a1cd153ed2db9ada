#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "alphasat/types.hpp"

namespace alphasat {

/// Set of all (alpha+1)-sized vertex subsets covered by some chosen edge. In
/// an alpha-intersecting hypergraph each such subset belongs to at most one
/// edge, which is exactly what insert_edge enforces.
class CoverIndex {
public:
    CoverIndex(int alpha, int n);

    /// True when some (alpha+1)-subset of the edge is already covered, i.e.
    /// adding the edge would break the alpha-intersecting property.
    bool blocks(const Edge& edge) const;

    /// Registers all C(|edge|, alpha+1) subsets; throws std::logic_error if
    /// any is already present.
    void insert_edge(const Edge& edge);

    std::uint64_t size() const;
    int alpha() const { return alpha_; }

private:
    bool packable() const { return packed_width_ > 0; }
    std::uint64_t pack(const std::vector<int>& subset) const;

    int alpha_;
    int packed_width_;  // bits per vertex when subsets fit a u64 key, else 0
    std::unordered_set<std::uint64_t> packed_;
    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const;
    };
    std::unordered_set<std::vector<int>, VecHash> generic_;
};

/// ceil(C(n, alpha+1) / C(k, alpha+1)^2): every maximal alpha-intersecting
/// k-uniform hypergraph on n vertices has at least this many edges.
/// Exact integer arithmetic; requires n >= k > alpha >= 1.
std::uint64_t min_edges_bound(std::int64_t n, int k, int alpha);

struct GreedyOptions {
    std::optional<std::uint64_t> target_edges;  // stop once this many edges added
    std::uint64_t enumeration_budget = 8'000'000;
    bool allow_sampling = false;
    std::uint64_t max_consecutive_rejections = 200'000;
};

struct GreedyResult {
    Hypergraph graph;
    bool certified_maximal = false;  // every candidate k-subset was examined
    bool target_reached = false;
    std::uint64_t candidates_examined = 0;
};

/// Greedy α-intersecting builder: visits candidate k-subsets (a seeded random
/// permutation of all C(n,k) when that fits the enumeration budget, otherwise
/// a random sample stream when sampling is allowed) and keeps every candidate
/// none of whose (alpha+1)-subsets is covered yet.
GreedyResult greedy_alpha_build(int n, int k, int alpha, std::uint64_t seed,
                                const GreedyOptions& options);

/// Maximal alpha-intersecting k-uniform hypergraph on [0, n), certified by
/// exhausting all candidates; m >= min_edges_bound(n, k, alpha). Deterministic
/// per seed. Throws when C(n, k) exceeds the enumeration budget.
Hypergraph build_maximal(int n, int k, int alpha, std::uint64_t seed);

struct MaximalityOptions {
    std::uint64_t exhaustive_budget = 1'000'000;
    std::uint64_t samples = 100'000;  // used when C(n,k) exceeds the budget
    std::uint64_t seed = 0x5eedULL;
};

struct MaximalityCheck {
    bool ok = true;
    bool exhaustive = true;
    std::uint64_t tested = 0;
    std::optional<Edge> addable;  // witness subset when not maximal
};

/// Scans k-subsets for one that could still be added. Requires h to be
/// simple, uniform and alpha-intersecting.
MaximalityCheck verify_maximality(const Hypergraph& h, int alpha,
                                  const MaximalityOptions& options = {});

/// Greedy builder run to exactly m_target edges (error if maximality is hit
/// first), then uniform random signs per literal. Result is alpha-intersecting
/// and width-k.
CnfFormula gen_random_alpha_formula(int n, int k, int alpha,
                                    std::uint64_t m_target, std::uint64_t seed);

}  // namespace alphasat
