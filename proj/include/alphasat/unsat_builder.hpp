#pragma once

#include <cstdint>
#include <vector>

#include "alphasat/types.hpp"

namespace alphasat {

/// Bit-indexed set over all 2^n assignments recording which are covered
/// (falsified by some chosen clause). n is limited by coverage_cap().
class CoverageSet {
public:
    explicit CoverageSet(int n);

    int n() const { return n_; }
    std::uint64_t total() const { return std::uint64_t{1} << n_; }
    std::uint64_t covered_count() const { return covered_count_; }
    std::uint64_t uncovered_count() const { return total() - covered_count_; }

    bool contains(std::uint64_t index) const {
        return (words_[index >> 6] >> (index & 63)) & 1u;
    }

    /// Marks the assignment; returns true when it was newly covered.
    bool insert(std::uint64_t index) {
        const std::uint64_t bit = std::uint64_t{1} << (index & 63);
        std::uint64_t& word = words_[index >> 6];
        if (word & bit)
            return false;
        word |= bit;
        ++covered_count_;
        return true;
    }

private:
    int n_;
    std::uint64_t covered_count_ = 0;
    std::vector<std::uint64_t> words_;
};

/// The 2^(n-k) assignment indices falsifying the clause, in increasing order.
/// Materializes the whole set; prefer the streaming form inside loops.
std::vector<std::uint64_t> clause_cover_set(const Clause& clause, int n);

/// Streams the cover set of (edge, sign pattern) without materializing it.
/// Bit j of pattern negates the j-th smallest variable of the edge.
template <typename Fn>
void for_each_cover_index(const Edge& edge, std::uint32_t pattern, int n, Fn&& fn) {
    // Base index: the covered assignment agrees with the pattern on the edge.
    std::uint64_t base = 0;
    for (std::size_t j = 0; j < edge.size(); ++j)
        if ((pattern >> j) & 1u)
            base |= std::uint64_t{1} << edge[j];

    std::vector<int> free_positions;
    free_positions.reserve(static_cast<std::size_t>(n) - edge.size());
    std::size_t next = 0;
    for (int v = 0; v < n; ++v) {
        if (next < edge.size() && edge[next] == v)
            ++next;
        else
            free_positions.push_back(v);
    }

    const std::uint64_t combos = std::uint64_t{1} << free_positions.size();
    for (std::uint64_t c = 0; c < combos; ++c) {
        std::uint64_t index = base;
        for (std::size_t j = 0; j < free_positions.size(); ++j)
            if ((c >> j) & 1u)
                index |= std::uint64_t{1} << free_positions[j];
        fn(index);
    }
}

struct PolarityChoice {
    Clause clause;
    std::uint64_t newly_covered = 0;
    std::uint32_t pattern = 0;
};

/// Best of the 2^k sign patterns for the edge: maximizes the number of not
/// yet covered assignments its clause would cover; ties go to the smallest
/// pattern. When assignments remain uncovered the winner covers at least
/// ceil(uncovered / 2^k) of them.
PolarityChoice best_polarity(const Edge& edge, const CoverageSet& coverage);

struct UnsatBuildStep {
    std::size_t edge_index = 0;
    std::uint64_t newly_covered = 0;
    std::uint64_t uncovered_after = 0;
};

struct UnsatBuildResult {
    CnfFormula formula;
    std::uint64_t final_uncovered = 0;
    std::vector<UnsatBuildStep> trace;
};

enum class EdgeOrder { Input, Shuffle };

/// One clause per edge, greedily covering assignments; clause j always sits
/// at edge j's position so the formula induces the input exactly. With
/// m >= n 2^k edges the coverage argument drives final_uncovered to 0 and the
/// formula is unsatisfiable; otherwise final_uncovered counts its models.
UnsatBuildResult build_unsat(const Hypergraph& h, EdgeOrder order = EdgeOrder::Input,
                             std::uint64_t seed = 0);

}  // namespace alphasat
