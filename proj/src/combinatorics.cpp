#include "alphasat/combinatorics.hpp"

#include <stdexcept>

namespace alphasat {

std::optional<unsigned __int128> binomial_exact(std::int64_t n, std::int64_t r) {
    if (n < 0 || r < 0)
        throw std::invalid_argument("binomial: negative argument");
    if (r > n)
        return static_cast<unsigned __int128>(0);
    if (r > n - r)
        r = n - r;
    constexpr unsigned __int128 kMax = ~static_cast<unsigned __int128>(0);
    unsigned __int128 result = 1;
    for (std::int64_t j = 0; j < r; ++j) {
        const auto factor = static_cast<unsigned __int128>(n - j);
        if (result > kMax / factor)
            return std::nullopt;
        // C(n, j+1) * (j+1) = C(n, j) * (n - j), so the division is exact.
        result = result * factor / static_cast<unsigned __int128>(j + 1);
    }
    return result;
}

std::uint64_t binomial_capped(std::int64_t n, std::int64_t r, std::uint64_t cap) {
    const auto exact = binomial_exact(n, r);
    if (!exact.has_value())
        return cap + 1;
    if (*exact > static_cast<unsigned __int128>(cap))
        return cap + 1;
    return static_cast<std::uint64_t>(*exact);
}

void for_each_combination(int n, int r,
                          const std::function<bool(const std::vector<int>&)>& visit) {
    if (r < 0 || r > n)
        return;
    std::vector<int> combo(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j)
        combo[static_cast<std::size_t>(j)] = j;
    if (r == 0) {
        visit(combo);
        return;
    }
    for (;;) {
        if (!visit(combo))
            return;
        // advance the rightmost element that can still move
        int j = r - 1;
        while (j >= 0 && combo[static_cast<std::size_t>(j)] == n - r + j)
            --j;
        if (j < 0)
            return;
        ++combo[static_cast<std::size_t>(j)];
        for (int t = j + 1; t < r; ++t)
            combo[static_cast<std::size_t>(t)] = combo[static_cast<std::size_t>(t - 1)] + 1;
    }
}

}  // namespace alphasat
