#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace alphasat {

/// C(n, r) in exact integer arithmetic; nullopt when the value (or an
/// intermediate product) exceeds 128 bits.
std::optional<unsigned __int128> binomial_exact(std::int64_t n, std::int64_t r);

/// min(C(n, r), cap + 1): saturates at cap + 1 so callers can test
/// "exceeds cap" without overflow.
std::uint64_t binomial_capped(std::int64_t n, std::int64_t r, std::uint64_t cap);

/// Visits the r-subsets of [0, n) in lexicographic order; stops early when
/// the visitor returns false.
void for_each_combination(int n, int r,
                          const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace alphasat
