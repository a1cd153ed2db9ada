#include "alphasat/maximal.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "alphasat/combinatorics.hpp"
#include "alphasat/metrics.hpp"
#include "alphasat/rng.hpp"

namespace alphasat {

namespace {

int bits_for(int n) {
    int bits = 1;
    while ((std::int64_t{1} << bits) < n)
        ++bits;
    return bits;
}

// Odometer over the r-subsets of a sorted edge; fn gets the scratch subset
// and returns false to stop. Returns false when stopped early.
template <typename Fn>
bool visit_subsets(const Edge& edge, int r, std::vector<int>& scratch, Fn&& fn) {
    const int k = static_cast<int>(edge.size());
    if (r > k)
        return true;
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j)
        idx[static_cast<std::size_t>(j)] = j;
    scratch.resize(static_cast<std::size_t>(r));
    for (;;) {
        for (int j = 0; j < r; ++j)
            scratch[static_cast<std::size_t>(j)] =
                edge[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
        if (!fn(scratch))
            return false;
        int j = r - 1;
        while (j >= 0 && idx[static_cast<std::size_t>(j)] == k - r + j)
            --j;
        if (j < 0)
            return true;
        ++idx[static_cast<std::size_t>(j)];
        for (int t = j + 1; t < r; ++t)
            idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
}

void require_build_params(int n, int k, int alpha) {
    if (!(n >= k && k > alpha && alpha >= 1))
        throw std::invalid_argument("builder: need n >= k > alpha >= 1");
}

}  // namespace

std::size_t CoverIndex::VecHash::operator()(const std::vector<int>& v) const {
    std::size_t h = 0x811c9dc5u;
    for (int x : v) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b9u + (h << 6) + (h >> 2);
    }
    return h;
}

CoverIndex::CoverIndex(int alpha, int n) : alpha_(alpha) {
    if (alpha < 1)
        throw std::invalid_argument("CoverIndex: alpha must be >= 1");
    const int bits = bits_for(std::max(n, 2));
    packed_width_ = (bits * (alpha + 1) <= 64) ? bits : 0;
}

std::uint64_t CoverIndex::pack(const std::vector<int>& subset) const {
    std::uint64_t key = 0;
    for (int v : subset)
        key = (key << packed_width_) | static_cast<std::uint64_t>(v);
    return key;
}

bool CoverIndex::blocks(const Edge& edge) const {
    std::vector<int> scratch;
    bool hit = false;
    const auto probe = [&](const std::vector<int>& subset) {
        const bool present = packable() ? packed_.contains(pack(subset))
                                        : generic_.contains(subset);
        if (present) {
            hit = true;
            return false;
        }
        return true;
    };
    visit_subsets(edge, alpha_ + 1, scratch, probe);
    return hit;
}

void CoverIndex::insert_edge(const Edge& edge) {
    std::vector<int> scratch;
    const auto add = [&](const std::vector<int>& subset) {
        const bool fresh = packable() ? packed_.insert(pack(subset)).second
                                      : generic_.insert(subset).second;
        if (!fresh)
            throw std::logic_error("CoverIndex: subset covered twice");
        return true;
    };
    visit_subsets(edge, alpha_ + 1, scratch, add);
}

std::uint64_t CoverIndex::size() const {
    return packable() ? packed_.size() : generic_.size();
}

std::uint64_t min_edges_bound(std::int64_t n, int k, int alpha) {
    if (!(n >= k && k > alpha && alpha >= 1))
        throw std::invalid_argument("min_edges_bound: need n >= k > alpha >= 1");
    const auto numerator = binomial_exact(n, alpha + 1);
    const auto per_edge = binomial_exact(k, alpha + 1);
    if (!numerator || !per_edge)
        throw std::overflow_error("min_edges_bound: binomial overflow");
    const unsigned __int128 denominator = *per_edge * *per_edge;
    const unsigned __int128 bound = (*numerator + denominator - 1) / denominator;
    if (bound > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("min_edges_bound: result exceeds 64 bits");
    return static_cast<std::uint64_t>(bound);
}

GreedyResult greedy_alpha_build(int n, int k, int alpha, std::uint64_t seed,
                                const GreedyOptions& options) {
    require_build_params(n, k, alpha);

    GreedyResult result;
    result.graph.n = n;
    CoverIndex cover(alpha, n);
    std::mt19937_64 rng(seed);

    const auto target = options.target_edges;
    const auto reached = [&] {
        return target.has_value() && result.graph.edges.size() >= *target;
    };
    const auto try_add = [&](const Edge& candidate) {
        if (cover.blocks(candidate))
            return false;
        cover.insert_edge(candidate);
        result.graph.edges.push_back(candidate);
        return true;
    };

    const std::uint64_t count = binomial_capped(n, k, options.enumeration_budget);
    const bool enumerable = count <= options.enumeration_budget && n <= 65535;
    if (enumerable) {
        // Full enumeration: all C(n,k) subsets in a seeded random order.
        std::vector<std::uint16_t> flat;
        flat.reserve(count * static_cast<std::uint64_t>(k));
        for_each_combination(n, k, [&](const std::vector<int>& combo) {
            for (int v : combo)
                flat.push_back(static_cast<std::uint16_t>(v));
            return true;
        });
        shuffle_indices(rng, count, [&](std::uint64_t a, std::uint64_t b) {
            std::swap_ranges(flat.begin() + static_cast<std::ptrdiff_t>(a * k),
                             flat.begin() + static_cast<std::ptrdiff_t>((a + 1) * k),
                             flat.begin() + static_cast<std::ptrdiff_t>(b * k));
        });

        Edge candidate(static_cast<std::size_t>(k));
        bool stopped_early = false;
        for (std::uint64_t c = 0; c < count; ++c) {
            if (reached()) {
                stopped_early = true;
                break;
            }
            for (int j = 0; j < k; ++j)
                candidate[static_cast<std::size_t>(j)] =
                    flat[c * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(j)];
            ++result.candidates_examined;
            try_add(candidate);
        }
        result.certified_maximal = !stopped_early;
    } else {
        if (!options.allow_sampling)
            throw std::invalid_argument(
                "greedy_alpha_build: C(n,k) exceeds the enumeration budget; "
                "enable sampling");
        std::uint64_t consecutive_rejections = 0;
        while (!reached() && consecutive_rejections < options.max_consecutive_rejections) {
            const Edge candidate = draw_subset(rng, n, k);
            ++result.candidates_examined;
            if (try_add(candidate))
                consecutive_rejections = 0;
            else
                ++consecutive_rejections;
        }
    }

    result.target_reached = !target.has_value() || reached();
    return result;
}

Hypergraph build_maximal(int n, int k, int alpha, std::uint64_t seed) {
    GreedyResult result = greedy_alpha_build(n, k, alpha, seed, GreedyOptions{});
    return std::move(result.graph);
}

MaximalityCheck verify_maximality(const Hypergraph& h, int alpha,
                                  const MaximalityOptions& options) {
    const auto width = h.uniform_width();
    if (!width.has_value() || *width == 0)
        throw std::invalid_argument("verify_maximality: need a nonempty uniform graph");
    const int k = *width;
    require_build_params(h.n, k, alpha);
    if (check_alpha_intersecting(h, alpha).has_value())
        throw std::invalid_argument("verify_maximality: graph is not alpha-intersecting");

    CoverIndex cover(alpha, h.n);
    for (const Edge& e : h.edges)
        cover.insert_edge(e);  // throws on duplicates: the graph must be simple

    MaximalityCheck check;
    const std::uint64_t count = binomial_capped(h.n, k, options.exhaustive_budget);
    if (count <= options.exhaustive_budget) {
        check.exhaustive = true;
        for_each_combination(h.n, k, [&](const std::vector<int>& candidate) {
            ++check.tested;
            if (!cover.blocks(candidate)) {
                check.ok = false;
                check.addable = candidate;
                return false;
            }
            return true;
        });
    } else {
        check.exhaustive = false;
        std::mt19937_64 rng(options.seed);
        for (std::uint64_t s = 0; s < options.samples; ++s) {
            const Edge candidate = draw_subset(rng, h.n, k);
            ++check.tested;
            if (!cover.blocks(candidate)) {
                check.ok = false;
                check.addable = candidate;
                break;
            }
        }
    }
    return check;
}

CnfFormula gen_random_alpha_formula(int n, int k, int alpha, std::uint64_t m_target,
                                    std::uint64_t seed) {
    GreedyOptions options;
    options.target_edges = m_target;
    options.allow_sampling = true;
    GreedyResult built = greedy_alpha_build(n, k, alpha, seed, options);
    if (!built.target_reached)
        throw std::runtime_error(
            "gen_random_alpha_formula: m_target unreachable (greedy stopped at " +
            std::to_string(built.graph.edges.size()) + " edges)");

    std::mt19937_64 sign_rng(seed + 0x9e3779b97f4a7c15ULL);
    CnfFormula f;
    f.n = n;
    f.clauses.reserve(built.graph.edges.size());
    for (const Edge& e : built.graph.edges) {
        Clause c;
        c.literals.reserve(e.size());
        for (VertexId v : e)
            c.literals.push_back(Literal{v, draw_coin(sign_rng)});
        f.clauses.push_back(std::move(c));
    }
    return f;
}

}  // namespace alphasat
