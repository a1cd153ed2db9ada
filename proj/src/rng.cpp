#include "alphasat/rng.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace alphasat {

std::vector<int> draw_subset(std::mt19937_64& rng, int n, int k) {
    if (k < 0 || k > n)
        throw std::invalid_argument("draw_subset: need 0 <= k <= n");
    std::unordered_set<int> chosen;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int j = n - k; j < n; ++j) {
        const int t = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(j) + 1));
        if (chosen.insert(t).second)
            out.push_back(t);
        else {
            chosen.insert(j);
            out.push_back(j);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace alphasat
