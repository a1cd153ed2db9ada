#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace alphasat {

// All randomized operations draw from mt19937_64 through the helpers below.
// std::shuffle and the std distributions are implementation-defined, so
// seeded runs would not reproduce across standard libraries; these do.

/// Uniform draw from [0, bound) without modulo bias. bound must be > 0.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold)
            return r % bound;
    }
}

inline bool draw_coin(std::mt19937_64& rng) { return (rng() & 1u) != 0; }

/// Fisher-Yates over elements [0, count) addressed through swap_at(i, j).
template <typename SwapFn>
void shuffle_indices(std::mt19937_64& rng, std::uint64_t count, SwapFn swap_at) {
    for (std::uint64_t i = count; i > 1; --i) {
        const std::uint64_t j = draw_below(rng, i);
        if (j != i - 1)
            swap_at(i - 1, j);
    }
}

/// Uniform random k-subset of [0, n), returned sorted (Floyd's algorithm).
std::vector<int> draw_subset(std::mt19937_64& rng, int n, int k);

}  // namespace alphasat
